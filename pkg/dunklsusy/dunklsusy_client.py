from dunklsusy.modules.families import Families
from dunklsusy.modules.potentials import Potentials


class Client(object):

    def __init__(
        self,
        tolerance=None,
        order=None,
        grid_size=None,
    ):
        self.tolerance = tolerance
        self.order = order
        self.grid_size = grid_size

        # Modules are initialized on demand.
        self._families = None
        self._potentials = None

    @property
    def families(self):
        '''
        Get the families module, used for Dunkl-SUSY and classical
        polynomials, Gram matrices and recurrence checks.
        '''
        if not self._families:
            self._families = Families(
                tolerance=self.tolerance,
                order=self.order,
            )
        return self._families

    @property
    def potentials(self):
        '''
        Get the potentials module, used for the shape invariant potentials
        and the eigenfunctions of L.
        '''
        if not self._potentials:
            self._potentials = Potentials(
                tolerance=self.tolerance,
                grid_size=self.grid_size,
            )
        return self._potentials

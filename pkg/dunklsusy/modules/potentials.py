import logging

from dunklsusy.constants import DEFAULT_GRID_SIZE
from dunklsusy.constants import LEVEL_PARTNER_1
from dunklsusy.constants import POINTWISE_EIGEN_TOLERANCE
from dunklsusy.errors import ParameterDomainError
from dunklsusy.helpers.report_helpers import or_default
from dunklsusy.operators.dunkl_operator import eigencheck
from dunklsusy.potentials.catalog import build_spec
from dunklsusy.potentials.catalog import list_specs
from dunklsusy.potentials.catalog import spec_class
from dunklsusy.quadrature.gram import eigenfunction_gram
from dunklsusy.quadrature.gram import signed_indices

logger = logging.getLogger(__name__)

ENERGY_IDENTITY_LEVELS = 10


class Potentials(object):
    """Shape invariant potentials addressed by catalog name."""

    def __init__(
        self,
        tolerance=None,
        grid_size=None,
    ):
        self.tolerance = tolerance
        self.grid_size = grid_size or DEFAULT_GRID_SIZE

    def spec(self, name, **params):
        '''
        Build a potential from whichever of params it takes.

        :param name: required
        :type name: str in POTENTIAL_SPECS

        :returns: PotentialSpec

        :raises: UnknownSelectorError, ParameterDomainError
        '''
        names = spec_class(name).parameter_names
        missing = [p for p in names if params.get(p) is None]
        if missing:
            raise ParameterDomainError(
                '{} needs parameters {}'.format(name, missing),
            )
        return build_spec(name, **{p: params[p] for p in names})

    def list(self):
        return list_specs()

    def wavefunction(self, name, n, x, level=LEVEL_PARTNER_1, **params):
        return self.spec(name, **params).wavefunction(n, level, x)

    def eigenfunction(self, name, n, x, **params):
        spec = self.spec(name, **params)
        function, _ = spec.eigenfunction(n)
        return function.value(x)

    def eigencheck(self, name, n_max, **params):
        '''
        Pointwise check of Y Q_n = lambda_n Q_n for |n| <= n_max.

        :returns: list of EigenReport
        '''
        spec = self.spec(name, **params)
        grid = spec.grid(self.grid_size)
        tolerance = or_default(self.tolerance, POINTWISE_EIGEN_TOLERANCE)
        return [
            eigencheck(spec, n, grid=grid, tolerance=tolerance)
            for n in signed_indices(n_max)
        ]

    def report(self, name, n_max, **params):
        '''
        Shape invariance, energy identity, intertwining and mixing
        coefficient checks of one potential.

        :returns: list of (check, n, value, passed)
        '''
        spec = self.spec(name, **params)
        grid = spec.grid(self.grid_size)
        shape = spec.shape_invariance_report(grid)
        rows = [
            ('shape_constant', '', shape.shape_constant,
             shape.passed),
            ('shape_invariance_residual', '', shape.max_residual,
             shape.passed),
            ('partner_potential_deviation', '', shape.max_partner_deviation,
             shape.passed),
        ]
        for n in range(ENERGY_IDENTITY_LEVELS + 1):
            holds = spec.energy_identity_holds(n)
            rows.append(('energy_identity', n, float(spec.energy(n)), holds))
        for n in range(n_max + 1):
            intertwining = spec.intertwining_check(n, grid)
            rows.append(
                ('intertwining_spread', n, intertwining.spread,
                 intertwining.passed),
            )
        for n in range(1, n_max + 1):
            table = spec.table_coefficient(n)
            recomputed = spec.recomputed_coefficient(n)
            rows.append(
                ('mixing_coefficient', n, table,
                 spec.coefficient_consistent(n)),
            )
            logger.debug(
                '%s n=%d coefficient %g recomputed %g',
                name, n, table, recomputed,
            )
        return rows

    def gram(self, name, n_max, **params):
        '''
        Normalized Gram matrix of the L-eigenfunctions.

        :returns: (GramReport, passed)
        '''
        return eigenfunction_gram(self.spec(name, **params), n_max)

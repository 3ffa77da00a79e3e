class DunklSusyError(Exception):
    """Base error class for all exceptions raised in this library.
    Will never be raised naked; more specific subclasses of this exception will
    be raised when appropriate."""


class ParameterDomainError(DunklSusyError, ValueError):
    """A parameter lies outside the range its family or potential allows."""


class CoefficientSupplyError(DunklSusyError):

    def __init__(self, system_name, index):
        self.system_name = system_name
        self.index = index

    def __str__(self):
        return self.__repr__()

    def __repr__(self):
        return 'CoefficientSupplyError(system={}, index={})'.format(
            self.system_name,
            self.index,
        )


class PositivityError(DunklSusyError):

    def __init__(self, quantity, index, value):
        self.quantity = quantity
        self.index = index
        self.value = value

    def __str__(self):
        return self.__repr__()

    def __repr__(self):
        return 'PositivityError(quantity={}, index={}, value={})'.format(
            self.quantity,
            self.index,
            self.value,
        )


class SingularityError(DunklSusyError):

    def __init__(self, kind, x, pole):
        self.kind = kind
        self.x = x
        self.pole = pole

    def __str__(self):
        return self.__repr__()

    def __repr__(self):
        return 'SingularityError(kind={}, x={}, pole={})'.format(
            self.kind,
            self.x,
            self.pole,
        )


class UnsupportedKindError(DunklSusyError):
    """The requested operation is not defined for this kind of object."""


class ConsistencyError(DunklSusyError):
    """Supplied data disagree with the family they are meant to belong to."""


class ExactnessError(DunklSusyError):
    """A quadrature rule is too small to integrate the requested products."""


class NumericalError(DunklSusyError):
    """A numerical kernel failed or produced a non-finite result."""


class DegenerateGridError(DunklSusyError):
    """Too few usable sample points remain after filtering a grid."""


class UnknownSelectorError(DunklSusyError, ValueError):
    """A family or potential name is not in the catalog."""


class VerificationFailed(DunklSusyError):

    def __init__(self, command, max_residual, tolerance, report=None):
        self.command = command
        self.max_residual = max_residual
        self.tolerance = tolerance
        self.report = report

    def __str__(self):
        return self.__repr__()

    def __repr__(self):
        return (
            'VerificationFailed(command={}, max_residual={}, tolerance={})'
        ).format(
            self.command,
            self.max_residual,
            self.tolerance,
        )

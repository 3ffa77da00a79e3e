"""Base class for the shape invariant even potentials.

Every potential is written as psi_n(x) = c_n g(x) P_n(y(x)) where g is the
ground state factor (g'/g = -v), y the change of variable and P_n a
classical polynomial. Subclasses only supply these pieces; wavefunctions,
their analytic derivatives, the reflection-symmetric eigenfunctions of L
and all checks are built here.
"""

from collections import namedtuple
from fractions import Fraction
import logging
import math

import numpy as np

from dunklsusy.constants import ANNIHILATION_TOLERANCE
from dunklsusy.constants import CASE_A
from dunklsusy.constants import CASE_B
from dunklsusy.constants import COEFFICIENT_CONSISTENCY_TOLERANCE
from dunklsusy.constants import DEFAULT_GRID_SIZE
from dunklsusy.constants import INTERTWINING_TOLERANCE
from dunklsusy.constants import LEVEL_PARTNER_1
from dunklsusy.constants import LEVEL_PARTNER_2
from dunklsusy.constants import ORIGIN_EXCLUSION_RADIUS
from dunklsusy.constants import PARITY_EVEN
from dunklsusy.constants import PARITY_NONE
from dunklsusy.constants import PARITY_ODD
from dunklsusy.constants import SHAPE_INVARIANCE_TOLERANCE
from dunklsusy.errors import DegenerateGridError
from dunklsusy.errors import ParameterDomainError
from dunklsusy.errors import UnsupportedKindError
from dunklsusy.helpers.smooth_function import SmoothFunction
from dunklsusy.helpers.smooth_function import linear_combination
from dunklsusy.helpers.smooth_function import realify
from dunklsusy.operators.dunkl_operator import apply_supercharge_pair
from dunklsusy.operators.dunkl_operator import eigencheck_L
from dunklsusy.polynomials.classical import eval_classical
from dunklsusy.polynomials.classical import eval_classical_derivative

logger = logging.getLogger(__name__)

_Wavefunction = namedtuple(
    'Wavefunction',
    [
        'potential',
        'index',
        'level',
        'function',
        'parity',
    ],
)


class Wavefunction(_Wavefunction):

    __slots__ = ()

    def __call__(self, x):
        return self.function.value(x)

    def derivative(self, x):
        return self.function.derivative(x)


IntertwiningReport = namedtuple(
    'IntertwiningReport',
    [
        'n',
        'ratio',
        'spread',
        'points',
        'passed',
    ],
)

PartnerIntertwiningReport = namedtuple(
    'PartnerIntertwiningReport',
    [
        'n',
        'lowering',
        'raising',
        'product_residual',
        'spread',
        'passed',
    ],
)

ShapeInvarianceReport = namedtuple(
    'ShapeInvarianceReport',
    [
        'shape_constant',
        'closed_form',
        'max_residual',
        'max_partner_deviation',
        'passed',
    ],
)


def _spread(ratios):
    mean = np.mean(ratios)
    if mean == 0:
        return float(np.max(np.abs(ratios)))
    return float((np.max(ratios) - np.min(ratios)) / abs(mean))


class PotentialSpec(object):
    """A shape invariant even potential with parameter set a_1."""

    name = None
    display_name = None
    case = CASE_A
    parameter_names = ()

    def __init__(self, validate=True, **params):
        missing = [p for p in self.parameter_names if p not in params]
        extra = [p for p in params if p not in self.parameter_names]
        if missing or extra:
            raise ParameterDomainError(
                '{} takes parameters {}, got {}'.format(
                    self.name, list(self.parameter_names), sorted(params),
                ),
            )
        self.params = dict(params)
        if validate:
            self._validate()

    # ============ Hooks ============

    def _validate(self):
        raise NotImplementedError

    def shifted(self):
        """The potential at the translated parameters a_2."""
        raise NotImplementedError

    def superpotential(self):
        """The OddPotential v(x; a_1)."""
        raise NotImplementedError

    def energy_level(self, n):
        """E_n^(1)(a_1) in closed form."""
        raise NotImplementedError

    def table_partner_potential(self, x):
        """V_1(x; a_1) in closed form."""
        raise NotImplementedError

    def table_coefficient(self, n):
        """Closed form of the mixing coefficient of psi_{+-n}."""
        raise NotImplementedError

    def ground_factor(self, r):
        raise NotImplementedError

    def change_of_variable(self, r):
        """(y(r), y'(r))."""
        raise NotImplementedError

    def polynomial_kind(self):
        raise NotImplementedError

    def phase(self, n):
        return 1

    @property
    def half_width(self):
        """Half width a of the domain (-a, a); math.inf for the real line."""
        return math.inf

    @property
    def window(self):
        """Half width of the sampling window."""
        return 0.98 * self.half_width

    @property
    def integration_half_width(self):
        """Cutoff for integrals over an infinite domain; beyond it the
        low eigenfunctions are negligible."""
        return self.half_width

    # ============ Energies and Potentials ============

    def energy(self, n, level=LEVEL_PARTNER_1):
        if n < 0:
            raise ParameterDomainError(
                'Energy index must be nonnegative, got {}'.format(n),
            )
        if level == LEVEL_PARTNER_1:
            return self.energy_level(n)
        if level == LEVEL_PARTNER_2:
            return self.energy_level(n + 1)
        raise ParameterDomainError('Unknown level {}'.format(level))

    def shape_constant(self):
        """R(a_1) in closed form; equal to E_1^(1)(a_1)."""
        return self.energy_level(1)

    def superpotential_value(self, x):
        return self.superpotential()(x)

    def partner_potentials(self, x):
        return self.superpotential().partner_potentials(x)

    # ============ Wavefunctions ============

    def _check_domain(self, x, radial):
        x = np.asarray(x, dtype=float)
        lower = 0 if radial else -self.half_width
        if np.any(x <= lower) or np.any(x >= self.half_width):
            raise ParameterDomainError(
                'x must lie in ({}, {}) for {}'.format(
                    lower, self.half_width, self.name,
                ),
            )

    def _natural(self, n):
        """psi_n^(1)(.; a_1) on its natural domain with derivative."""
        kind = self.polynomial_kind()
        phase = self.phase(n)
        v = self.superpotential()

        def value(r):
            y, _ = self.change_of_variable(r)
            return realify(
                phase * self.ground_factor(r) * eval_classical(kind, n, y),
            )

        def derivative(r):
            y, dy = self.change_of_variable(r)
            slope = realify(
                phase * self.ground_factor(r)
                * eval_classical_derivative(kind, n, y) * dy,
            )
            return slope - v(r) * value(r)

        return SmoothFunction(value, derivative)

    def _gauged_natural(self, n, ground):
        """psi_n(.; self) / psi_0(.; ground) with derivative.

        With rho = g_self / g_ground, rho' = rho (v_ground - v_self).
        """
        kind = self.polynomial_kind()
        phase = self.phase(n)
        v_self = self.superpotential()
        v_ground = ground.superpotential()
        same = self.params == ground.params

        def rho(r):
            if same:
                return 1.0 + 0 * r
            return self.ground_factor(r) / ground.ground_factor(r)

        def value(r):
            y, _ = self.change_of_variable(r)
            return realify(phase * rho(r) * eval_classical(kind, n, y))

        def derivative(r):
            y, dy = self.change_of_variable(r)
            slope = realify(
                phase * rho(r) * eval_classical_derivative(kind, n, y) * dy,
            )
            if same:
                return slope
            return slope + (v_ground(r) - v_self(r)) * value(r)

        return SmoothFunction(value, derivative)

    def wavefunction_function(self, n, level=LEVEL_PARTNER_1):
        """psi_n^(level) as a Wavefunction on the natural domain."""
        spec = self if level == LEVEL_PARTNER_1 else self.shifted()
        if self.case == CASE_B:
            parity = PARITY_NONE
        else:
            parity = PARITY_ODD if n % 2 else PARITY_EVEN
        return Wavefunction(self, n, level, spec._natural(n), parity)

    def wavefunction(self, n, level, x):
        """Unnormalized psi_n^(level)(x).

        :raises: ParameterDomainError outside the domain
        """
        self._check_domain(x, radial=self.case == CASE_B)
        return self.wavefunction_function(n, level)(x)

    def _doubled(self, function, m):
        """Even (m even) or odd (m odd) extension of a radial function."""
        if m % 2 == 0:
            return SmoothFunction(
                lambda x: function.value(np.abs(x)),
                lambda x: np.sign(x) * function.derivative(np.abs(x)),
            )
        return SmoothFunction(
            lambda x: np.sign(x) * function.value(np.abs(x)),
            lambda x: function.derivative(np.abs(x)),
        )

    def doubled_function(self, m, level=LEVEL_PARTNER_1):
        """psi~_m on (-a, a): even extension of psi_{m/2} for even m and odd
        extension of psi_{(m-1)/2} for odd m."""
        if self.case != CASE_B:
            raise UnsupportedKindError(
                '{} lives on the whole interval and is not doubled'.format(
                    self.name,
                ),
            )
        spec = self if level == LEVEL_PARTNER_1 else self.shifted()
        parity = PARITY_ODD if m % 2 else PARITY_EVEN
        return Wavefunction(
            self, m, level, self._doubled(spec._natural(m // 2), m), parity,
        )

    def doubled_wavefunction(self, m, x):
        if self.case != CASE_B:
            raise UnsupportedKindError(
                '{} lives on the whole interval and is not doubled'.format(
                    self.name,
                ),
            )
        x = np.asarray(x, dtype=float)
        if np.any(np.abs(x) >= self.half_width):
            raise ParameterDomainError(
                'x must lie in (-{0}, {0})'.format(self.half_width),
            )
        return self.doubled_function(m)(x)

    # ============ Reflection-Symmetric Blocks ============

    def block(self, m):
        """The m-th parity-definite building block on (-a, a)."""
        if self.case == CASE_B:
            return self.doubled_function(m).function
        return self._natural(m)

    def gauged_block(self, m, ground):
        """block(m) of self divided by the ground state of ground."""
        if self.case == CASE_B:
            return self._doubled(self._gauged_natural(m // 2, ground), m)
        return self._gauged_natural(m, ground)

    def block_energy(self, m):
        if self.case == CASE_B:
            return self.energy_level(m // 2)
        return self.energy_level(m)

    # ============ Eigenfunctions of L ============

    def coefficient(self, n):
        return self.table_coefficient(n)

    def eigenvalue(self, n):
        """lambda_n = sign(n) sqrt(E) of psi_n and Q_n."""
        if n == 0:
            return 0.0
        energy = float(self.block_energy(2 * abs(n)))
        return math.copysign(math.sqrt(energy), n)

    def assemble_L_eigenfunctions(self, n):
        """(psi_{+n}, psi_{-n}, lambda_n) with
        psi_{+-n} = block_2n(a_1) +- C_n block_{2n-1}(a_2)."""
        if n < 1:
            raise ParameterDomainError(
                'Eigenfunction assembly needs n >= 1, got {}'.format(n),
            )
        even = self.block(2 * n)
        odd = self.shifted().block(2 * n - 1)
        c = self.coefficient(n)
        plus = linear_combination([(1, even), (c, odd)])
        minus = linear_combination([(1, even), (-c, odd)])
        return plus, minus, self.eigenvalue(n)

    def eigenfunction(self, n):
        """(psi_n, lambda_n) for any integer n; psi_0 is the ground state."""
        if n == 0:
            return self.block(0), 0.0
        plus, minus, eigenvalue = self.assemble_L_eigenfunctions(abs(n))
        if n > 0:
            return plus, eigenvalue
        return minus, -eigenvalue

    def gauged_eigenfunction(self, n):
        """(Q_n, lambda_n) with Q_n = psi_n / psi_0, eigenfunctions of Y."""
        if n == 0:
            return SmoothFunction(
                lambda x: 1.0 + 0 * np.asarray(x, dtype=float),
                lambda x: 0 * np.asarray(x, dtype=float),
            ), 0.0
        m = abs(n)
        even = self.gauged_block(2 * m, self)
        odd = self.shifted().gauged_block(2 * m - 1, self)
        sign = 1 if n > 0 else -1
        c = sign * self.coefficient(m)
        return linear_combination([(1, even), (c, odd)]), self.eigenvalue(n)

    def eigen_residual(self, n, grid=None):
        """Pointwise relative residual of L psi_n = lambda_n psi_n."""
        function, eigenvalue = self.eigenfunction(n)
        if grid is None:
            grid = self.grid()
        return eigencheck_L(self.superpotential(), function, eigenvalue, grid)

    # ============ Grids ============

    def grid(self, size=DEFAULT_GRID_SIZE, radial=False):
        """Symmetric sample points inside the window, away from poles."""
        window = self.window
        lower = ORIGIN_EXCLUSION_RADIUS if radial else -window
        points = np.linspace(lower, window, size)
        if self.case == CASE_B:
            points = points[np.abs(points) > ORIGIN_EXCLUSION_RADIUS]
        v = self.superpotential()
        usable = []
        for x in points:
            pole = v._nearest_pole(np.asarray(x))
            if pole is None or pole[1] > ORIGIN_EXCLUSION_RADIUS:
                usable.append(x)
        if len(usable) < len(points):
            logger.debug(
                'Dropped %d grid points near poles of %s',
                len(points) - len(usable), self.name,
            )
        return np.array(usable)

    def reference_point(self):
        """A point of (0, a) inside the sampling window."""
        return 0.37 * self.window

    # ============ Checks ============

    def shape_invariance_residual(self, x):
        """(|V_2(x; a_1) - V_1(x; a_2) - R|, R) with R estimated at the
        reference point."""
        shifted = self.shifted()

        def difference(t):
            _, v2 = self.partner_potentials(t)
            v1_shifted, _ = shifted.partner_potentials(t)
            return v2 - v1_shifted

        shape_constant = float(difference(self.reference_point()))
        return np.abs(difference(x) - shape_constant), shape_constant

    def shape_invariance_report(self, grid=None):
        if grid is None:
            grid = self.grid()
        residual, shape_constant = self.shape_invariance_residual(grid)
        closed_form = float(self.shape_constant())
        v1, _ = self.partner_potentials(grid)
        table = self.table_partner_potential(grid)
        scale = np.maximum(1.0, np.abs(table))
        deviation = float(np.max(np.abs(v1 - table) / scale))
        worst = float(np.max(residual / max(1.0, abs(shape_constant))))
        passed = (
            worst <= SHAPE_INVARIANCE_TOLERANCE and
            deviation <= SHAPE_INVARIANCE_TOLERANCE and
            abs(shape_constant - closed_form)
            <= SHAPE_INVARIANCE_TOLERANCE * max(1.0, abs(closed_form))
        )
        return ShapeInvarianceReport(
            shape_constant, closed_form, worst, deviation, passed,
        )

    def energy_identity_holds(self, n):
        """E_n^(1)(a_2) + R(a_1) == E_n^(2)(a_1) in exact arithmetic.

        Float parameters are converted to the Fractions they represent.
        """
        exact = type(self)(
            validate=False,
            **{k: Fraction(v) for k, v in self.params.items()}
        )
        return (
            exact.shifted().energy(n) + exact.shape_constant()
            == exact.energy(n, LEVEL_PARTNER_2)
        )

    def recomputed_coefficient(self, n, x0=None):
        """The mixing coefficient recomputed as
        (A block_2n)(x0) / (sqrt(E) block_{2n-1}(x0; a_2))."""
        even = self.block(2 * n)
        odd = self.shifted().block(2 * n - 1)
        if x0 is None:
            candidates = self.grid()
            candidates = candidates[candidates > 0]
            x0 = candidates[np.argmax(np.abs(odd.value(candidates)))]
        annihilate, _ = apply_supercharge_pair(self.superpotential(), even)
        energy = float(self.block_energy(2 * n))
        return float(annihilate(x0) / (math.sqrt(energy) * odd.value(x0)))

    def coefficient_consistent(self, n):
        table = self.table_coefficient(n)
        recomputed = self.recomputed_coefficient(n)
        return (
            abs(table - recomputed)
            <= COEFFICIENT_CONSISTENCY_TOLERANCE * max(1.0, abs(table))
        )

    def _ratio_points(self, upper, lower, grid):
        values = lower(grid)
        keep = np.abs(values) > 1e-6 * np.max(np.abs(values))
        if np.count_nonzero(keep) < 3:
            raise DegenerateGridError(
                'Only {} usable points for {}'.format(
                    np.count_nonzero(keep), self.name,
                ),
            )
        return upper(grid[keep]) / values[keep], int(np.count_nonzero(keep))

    def intertwining_check(self, n, grid=None):
        """A block_2n(a_1) is proportional to block_{2n-1}(a_2); for n = 0
        A annihilates the ground state.

        :returns: IntertwiningReport
        :raises: DegenerateGridError
        """
        if grid is None:
            grid = self.grid()
        grid = np.asarray(grid, dtype=float)
        v = self.superpotential()
        annihilate, _ = apply_supercharge_pair(v, self.block(2 * n))
        if n == 0:
            ground = self.block(0).value(grid)
            image = annihilate(grid)
            worst = float(np.max(np.abs(image)) / np.max(np.abs(ground)))
            return IntertwiningReport(
                0, 0.0, worst, len(grid), worst <= ANNIHILATION_TOLERANCE,
            )
        lower = self.shifted().block(2 * n - 1).value
        ratios, points = self._ratio_points(annihilate, lower, grid)
        spread = _spread(ratios)
        return IntertwiningReport(
            n, float(np.mean(ratios)), spread, points,
            spread <= INTERTWINING_TOLERANCE,
        )

    def partner_intertwining(self, n, grid=None):
        """A psi_{n+1}^(1) = C1 psi_n^(2) and A^dagger psi_n^(2) =
        C2 psi_{n+1}^(1) on the natural domain, with C1 C2 = E_{n+1}^(1)."""
        if grid is None:
            grid = self.grid(radial=self.case == CASE_B)
            if self.case == CASE_B:
                grid = grid[grid > 0]
        grid = np.asarray(grid, dtype=float)
        v = self.superpotential()
        upper = self._natural(n + 1)
        partner = self.shifted()._natural(n)
        annihilate, _ = apply_supercharge_pair(v, upper)
        _, create = apply_supercharge_pair(v, partner)
        lowering, _ = self._ratio_points(annihilate, partner.value, grid)
        raising, _ = self._ratio_points(create, upper.value, grid)
        spread = max(_spread(lowering), _spread(raising))
        energy = float(self.energy_level(n + 1))
        product = float(np.mean(lowering) * np.mean(raising))
        product_residual = abs(product - energy) / max(1.0, abs(energy))
        return PartnerIntertwiningReport(
            n,
            float(np.mean(lowering)),
            float(np.mean(raising)),
            product_residual,
            spread,
            spread <= INTERTWINING_TOLERANCE and
            product_residual <= INTERTWINING_TOLERANCE,
        )

    # ============ Serialization ============

    def to_json(self):
        return {
            'name': self.name,
            'params': {k: self.params[k] for k in self.parameter_names},
        }

    def __eq__(self, other):
        return (
            isinstance(other, PotentialSpec) and
            self.name == other.name and
            self.params == other.params
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.name, tuple(sorted(self.params.items()))))

    def __repr__(self):
        return '{}({})'.format(
            type(self).__name__,
            ', '.join(
                '{}={}'.format(k, self.params[k])
                for k in self.parameter_names
            ),
        )

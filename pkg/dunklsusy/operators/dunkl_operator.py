"""Dunkl-type operators L = d/dx R + v and Y = d/dx R + v (I - R).

d/dx R means reflect first, then differentiate:
(d/dx R f)(x) = d/dx f(-x) = -f'(-x).
"""

from collections import namedtuple
import logging
import math

import numpy as np

from dunklsusy.constants import EIGEN_TOLERANCE
from dunklsusy.constants import POINTWISE_EIGEN_TOLERANCE
from dunklsusy.constants import POLYNOMIAL_PRESERVING_KINDS
from dunklsusy.constants import POTENTIAL_KIND_COTH_COSECH
from dunklsusy.constants import POTENTIAL_KIND_LINEAR
from dunklsusy.constants import POTENTIAL_KIND_RADIAL_LINEAR
from dunklsusy.constants import POTENTIAL_KIND_TAN
from dunklsusy.constants import POTENTIAL_KIND_TAN_COT
from dunklsusy.constants import POTENTIAL_KIND_TANH
from dunklsusy.constants import SINGULARITY_RADIUS
from dunklsusy.errors import SingularityError
from dunklsusy.errors import UnsupportedKindError
from dunklsusy.helpers.smooth_function import SmoothFunction
from dunklsusy.helpers.smooth_function import as_smooth_function
from dunklsusy.helpers.smooth_function import first_derivative
from dunklsusy.helpers.smooth_function import linear_combination
from dunklsusy.helpers.smooth_function import reflected
from dunklsusy.helpers.smooth_function import second_derivative
from dunklsusy.polynomials.dunkl_susy import build_family
from dunklsusy.polynomials.dunkl_susy import coeffs_q
from dunklsusy.polynomials.symmetric import generalized_hermite_system
from dunklsusy.polynomials.symmetric import hermite_system

logger = logging.getLogger(__name__)

EigenReport = namedtuple(
    'EigenReport',
    [
        'n',
        'eigenvalue',
        'residual',
        'passed',
    ],
)


class OddPotential(object):
    """An odd superpotential v with its analytic derivative and poles."""

    def __init__(self, kind, **params):
        self.kind = kind
        self.params = params

    # ============ Constructors ============

    @classmethod
    def linear(cls, s):
        return cls(POTENTIAL_KIND_LINEAR, s=s)

    @classmethod
    def radial_linear(cls, s, alpha):
        return cls(POTENTIAL_KIND_RADIAL_LINEAR, s=s, alpha=alpha)

    @classmethod
    def tanh(cls, A, alpha):
        return cls(POTENTIAL_KIND_TANH, A=A, alpha=alpha)

    @classmethod
    def tan(cls, A, alpha):
        return cls(POTENTIAL_KIND_TAN, A=A, alpha=alpha)

    @classmethod
    def coth_cosech(cls, A, B, alpha):
        return cls(POTENTIAL_KIND_COTH_COSECH, A=A, B=B, alpha=alpha)

    @classmethod
    def tan_cot(cls, A, B, alpha):
        return cls(POTENTIAL_KIND_TAN_COT, A=A, B=B, alpha=alpha)

    # ============ Evaluation ============

    def is_polynomial_preserving(self):
        return self.kind in POLYNOMIAL_PRESERVING_KINDS

    def _nearest_pole(self, x):
        """(pole, distance) arrays, or None for pole-free kinds."""
        p = self.params
        if self.kind in (
            POTENTIAL_KIND_RADIAL_LINEAR,
            POTENTIAL_KIND_COTH_COSECH,
        ):
            return np.zeros_like(x, dtype=float), np.abs(x)
        if self.kind == POTENTIAL_KIND_TAN:
            period = math.pi / p['alpha']
            k = np.round(x / period - 0.5)
            pole = (k + 0.5) * period
            return pole, np.abs(x - pole)
        if self.kind == POTENTIAL_KIND_TAN_COT:
            spacing = math.pi / (2 * p['alpha'])
            pole = np.round(x / spacing) * spacing
            return pole, np.abs(x - pole)
        return None

    def check(self, x):
        """Raise SingularityError when x lies within 1e-8 of a pole."""
        nearest = self._nearest_pole(np.asarray(x, dtype=float))
        if nearest is None:
            return
        pole, distance = nearest
        close = np.asarray(distance < SINGULARITY_RADIUS)
        if np.any(close):
            index = np.argmax(close) if close.ndim else ()
            raise SingularityError(
                self.kind,
                float(np.asarray(x)[index]),
                float(np.asarray(pole)[index]),
            )

    def __call__(self, x):
        self.check(x)
        p = self.params
        if self.kind == POTENTIAL_KIND_LINEAR:
            return p['s'] ** 2 * x
        if self.kind == POTENTIAL_KIND_RADIAL_LINEAR:
            return p['s'] ** 2 * x - (p['alpha'] + 0.5) / x
        ax = p['alpha'] * np.asarray(x)
        if self.kind == POTENTIAL_KIND_TANH:
            return p['A'] * np.tanh(ax)
        if self.kind == POTENTIAL_KIND_TAN:
            return p['A'] * np.tan(ax)
        if self.kind == POTENTIAL_KIND_COTH_COSECH:
            return (p['A'] * np.cosh(ax) - p['B']) / np.sinh(ax)
        if self.kind == POTENTIAL_KIND_TAN_COT:
            return p['A'] * np.tan(ax) - p['B'] / np.tan(ax)
        raise UnsupportedKindError('Unknown potential kind {}'.format(
            self.kind,
        ))

    def derivative(self, x):
        self.check(x)
        p = self.params
        if self.kind == POTENTIAL_KIND_LINEAR:
            return p['s'] ** 2 + 0 * x
        if self.kind == POTENTIAL_KIND_RADIAL_LINEAR:
            return p['s'] ** 2 + (p['alpha'] + 0.5) / (x * x)
        a = p['alpha']
        ax = a * np.asarray(x)
        if self.kind == POTENTIAL_KIND_TANH:
            return p['A'] * a / np.cosh(ax) ** 2
        if self.kind == POTENTIAL_KIND_TAN:
            return p['A'] * a / np.cos(ax) ** 2
        if self.kind == POTENTIAL_KIND_COTH_COSECH:
            return a * (p['B'] * np.cosh(ax) - p['A']) / np.sinh(ax) ** 2
        if self.kind == POTENTIAL_KIND_TAN_COT:
            return (
                p['A'] * a / np.cos(ax) ** 2 + p['B'] * a / np.sin(ax) ** 2
            )
        raise UnsupportedKindError('Unknown potential kind {}'.format(
            self.kind,
        ))

    def partner_potentials(self, x):
        """(V1, V2) = (v^2 - v', v^2 + v')."""
        v = self(x)
        dv = self.derivative(x)
        return v * v - dv, v * v + dv

    def __repr__(self):
        return 'OddPotential(kind={}, params={})'.format(
            self.kind,
            self.params,
        )


# ============ Pointwise Operators ============

def apply_L(v, f, x):
    """(L f)(x) = -f'(-x) + v(x) f(x).

    :param v: required
    :type v: OddPotential

    :param f: required
    :type f: callable or SmoothFunction

    :param x: required
    :type x: float or numpy array

    :returns: value(s) of L f at x

    :raises: SingularityError
    """
    f = as_smooth_function(f)
    return -first_derivative(f, -x) + v(x) * f.value(x)


def apply_L_function(v, f):
    """L f as a SmoothFunction.

    (L f)'(x) = f''(-x) + v'(x) f(x) + v(x) f'(x); without an analytic
    first derivative of f only the value is available.
    """
    f = as_smooth_function(f)

    def value(x):
        return apply_L(v, f, x)

    derivative = None
    if f.derivative is not None:
        def derivative(x):
            return (
                second_derivative(f, -x)
                + v.derivative(x) * f.value(x)
                + v(x) * f.derivative(x)
            )
    return SmoothFunction(value, derivative)


def apply_supercharge_pair(v, f):
    """Pointwise evaluators of A f = f' + v f and A^dagger f = -f' + v f."""
    f = as_smooth_function(f)

    def annihilate(x):
        return first_derivative(f, x) + v(x) * f.value(x)

    def create(x):
        return -first_derivative(f, x) + v(x) * f.value(x)

    return annihilate, create


def hamiltonian(v, f, x):
    """(H f)(x) = -f''(x) + v(x)^2 f(x) - v'(x) f(-x), where H = L^2."""
    f = as_smooth_function(f)
    return (
        -second_derivative(f, x)
        + v(x) ** 2 * f.value(x)
        - v.derivative(x) * f.value(-x)
    )


def partner_hamiltonians(v, f, x):
    """(-f'' + V1 f, -f'' + V2 f): H restricted to even and odd functions."""
    f = as_smooth_function(f)
    v1, v2 = v.partner_potentials(x)
    kinetic = -second_derivative(f, x)
    return kinetic + v1 * f.value(x), kinetic + v2 * f.value(x)


def restricted_hamiltonian(v, f, grid):
    """Residuals of H = -d^2 + V1 on the even part of f and H = -d^2 + V2 on
    its odd part.

    f needs an analytic first derivative.

    :returns: (even residual, odd residual), each relative to
              max(1, max |H f_part|)
    """
    f = as_smooth_function(f)
    grid = np.asarray(grid, dtype=float)
    mirror = reflected(f)
    parts = (
        linear_combination([(0.5, f), (0.5, mirror)]),
        linear_combination([(0.5, f), (-0.5, mirror)]),
    )
    residuals = []
    for index, part in enumerate(parts):
        expected = hamiltonian(v, part, grid)
        restricted = partner_hamiltonians(v, part, grid)[index]
        scale = max(1.0, float(np.max(np.abs(expected))))
        residuals.append(
            float(np.max(np.abs(restricted - expected))) / scale,
        )
    return tuple(residuals)


def anticommutator_residual(v, f, grid):
    """max |L(R f)(x) + (L f)(-x)| over the grid."""
    f = as_smooth_function(f)
    grid = np.asarray(grid, dtype=float)
    reflected = SmoothFunction(
        lambda x: f.value(-x),
        lambda x: -first_derivative(f, -x),
    )
    values = apply_L(v, reflected, grid) + apply_L(v, f, -grid)
    return float(np.max(np.abs(values)))


def square_residual(v, f, grid):
    """max |L(L f) - H f| relative to max(1, max |H f|)."""
    grid = np.asarray(grid, dtype=float)
    squared = apply_L(v, apply_L_function(v, f), grid)
    expected = hamiltonian(v, f, grid)
    scale = max(1.0, float(np.max(np.abs(expected))))
    return float(np.max(np.abs(squared - expected))) / scale


def eigencheck_L(v, f, eigenvalue, grid):
    """max |L f - lambda f| / (max(|lambda|, 1) max |f|) over the grid."""
    f = as_smooth_function(f)
    grid = np.asarray(grid, dtype=float)
    values = f.value(grid)
    residual = apply_L(v, f, grid) - eigenvalue * values
    scale = max(abs(eigenvalue), 1.0) * float(np.max(np.abs(values)))
    if scale == 0:
        return 0.0
    return float(np.max(np.abs(residual))) / scale


def apply_Y(v, f, x):
    """(Y f)(x) = -f'(-x) + v(x) (f(x) - f(-x))."""
    f = as_smooth_function(f)
    return -first_derivative(f, -x) + v(x) * (f.value(x) - f.value(-x))


# ============ Polynomial Action ============

def apply_Y_poly(v, p):
    """Exact Y p for the two polynomial preserving superpotentials.

    For s^2 x - c / x the difference p(x) - p(-x) is odd, so division by x
    stays polynomial.

    :raises: UnsupportedKindError
    """
    if not v.is_polynomial_preserving():
        raise UnsupportedKindError(
            'Y does not preserve polynomials for kind {}'.format(v.kind),
        )
    s_squared = v.params['s'] ** 2
    difference = p - p.reflect()
    result = -p.derivative().reflect() + difference.multiply_by_x().scale(
        s_squared,
    )
    if v.kind == POTENTIAL_KIND_RADIAL_LINEAR:
        c = v.params['alpha'] + 0.5
        result = result - difference.divide_by_x().scale(c)
    return result


class PolynomialBinding(object):
    """A Dunkl-SUSY family paired with the superpotential of its weight.

    energy(n) is the partner energy whose square root is the eigenvalue of
    Q_{+-n}.
    """

    def __init__(self, family, potential, energy, name):
        self.family = family
        self.potential = potential
        self.energy = energy
        self.name = name

    def eigenvalue(self, n):
        if n == 0:
            return 0.0
        return math.copysign(math.sqrt(self.energy(abs(n))), n)

    def eigen_polynomial(self, n):
        return coeffs_q(self.family, n), self.eigenvalue(n)

    def __repr__(self):
        return 'PolynomialBinding(name={})'.format(self.name)


def hermite_binding(s=1):
    """Hermite family with v = s^2 x; Q_{+-n} has eigenvalue +-2 s sqrt(n)."""
    return PolynomialBinding(
        build_family(hermite_system(s)),
        OddPotential.linear(s),
        lambda n: 4.0 * n * s ** 2,
        'hermite-susy',
    )


def laguerre_binding(s=1, alpha=-0.5):
    """Generalized Hermite family with v = s^2 x - (alpha + 1/2) / x."""
    return PolynomialBinding(
        build_family(generalized_hermite_system(s, alpha)),
        OddPotential.radial_linear(s, alpha),
        lambda n: 4.0 * n * s ** 2,
        'laguerre-susy',
    )


# ============ Eigenvalue Checks ============

def _polynomial_residual(binding, n):
    q, eigenvalue = binding.eigen_polynomial(n)
    image = apply_Y_poly(binding.potential, q)
    expected = q.scale(eigenvalue)
    scale = max(
        max((abs(c) for c in expected), default=0.0),
        max((abs(c) for c in q), default=0.0),
    )
    difference = image - expected
    worst = max((abs(c) for c in difference), default=0.0)
    return eigenvalue, float(worst / scale) if scale else 0.0


def _pointwise_residual(binding, n, grid):
    q, eigenvalue = binding.gauged_eigenfunction(n)
    if grid is None:
        grid = binding.grid()
    grid = np.asarray(grid, dtype=float)
    values = q.value(grid)
    residual = apply_Y(binding.superpotential(), q, grid) - eigenvalue * values
    scale = max(abs(eigenvalue), 1.0) * float(np.max(np.abs(values)))
    return eigenvalue, float(np.max(np.abs(residual))) / scale


def eigencheck(binding, n, grid=None, tolerance=None):
    """Check Y Q_n = lambda_n Q_n with lambda_n = sign(n) sqrt(E).

    Polynomial bindings are checked coefficient-wise; potential specs are
    checked pointwise on a grid through their gauged eigenfunctions.

    :returns: EigenReport
    :raises: UnsupportedKindError
    """
    if hasattr(binding, 'eigen_polynomial'):
        eigenvalue, residual = _polynomial_residual(binding, n)
        if tolerance is None:
            tolerance = EIGEN_TOLERANCE
    elif hasattr(binding, 'gauged_eigenfunction'):
        eigenvalue, residual = _pointwise_residual(binding, n, grid)
        if tolerance is None:
            tolerance = POINTWISE_EIGEN_TOLERANCE
    else:
        raise UnsupportedKindError(
            'No eigen-equation is known for {!r}'.format(binding),
        )
    logger.debug('eigencheck %r n=%d residual=%g', binding, n, residual)
    return EigenReport(n, eigenvalue, residual, residual <= tolerance)

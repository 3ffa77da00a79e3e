"""Gaussian quadrature from three-term recurrences (Golub-Welsch).

Nodes are the eigenvalues of the Jacobi matrix with diagonal b_n and
off-diagonal sqrt(beta_n). Weights come from the Christoffel sum
w_i = 1 / sum_k p_k(x_i)^2 over the orthonormal polynomials, which equals
mu_0 v_0i^2 but keeps relative accuracy in the tails.
"""

from collections import namedtuple
import logging
import math

import mpmath
import numpy as np
from scipy import linalg
from scipy import special

from dunklsusy.constants import KIND_HERMITE
from dunklsusy.constants import KIND_LAGUERRE
from dunklsusy.constants import ORACLE_DIGITS
from dunklsusy.errors import NumericalError
from dunklsusy.errors import ParameterDomainError
from dunklsusy.polynomials.symmetric import MonicSymmetricSystem

logger = logging.getLogger(__name__)

RecurrenceCoefficients = namedtuple(
    'RecurrenceCoefficients',
    [
        'diagonal',
        'off_diagonal_squared',
        'mu0',
    ],
)

_QuadratureRule = namedtuple(
    'QuadratureRule',
    [
        'nodes',
        'weights',
        'weight_descriptor',
        'order',
    ],
)


class QuadratureRule(_QuadratureRule):
    """Nodes and positive weights of an order-point Gauss rule.

    weight_descriptor is the WeightDescriptor of a symmetric system, or the
    ClassicalKind for rules built from a classical recurrence.
    """

    __slots__ = ()

    def integrate(self, values):
        """sum_i w_i f(x_i) for values f(x_i), or for a callable f."""
        if callable(values):
            values = values(self.nodes)
        return np.dot(self.weights, values)

    def rescale(self, s):
        """The rule for the weight w(s x): nodes / s, weights / s."""
        return self._replace(nodes=self.nodes / s, weights=self.weights / s)


# ============ Recurrence Coefficients ============

def symmetric_recurrence(system, order):
    """Monic coefficients of a symmetric system: b_n = 0, beta_n =
    gamma_{n+1}."""
    # system.gamma raises PositivityError on a nonpositive coefficient.
    off = [float(system.gamma(m + 1)) for m in range(1, order)]
    return RecurrenceCoefficients(
        np.zeros(order), np.array(off, dtype=float), float(system.k0),
    )


def classical_recurrence(kind, order):
    """Monic coefficients and total mass of Hermite (exp(-x^2)), Laguerre
    (x^alpha exp(-x)) and Jacobi ((1-x)^alpha (1+x)^beta) weights.

    :raises: ParameterDomainError for formal kinds
    """
    kind.validate()
    if kind.formal:
        raise ParameterDomainError(
            'Formal kinds have no weight to integrate against',
        )
    n = np.arange(order, dtype=float)
    m = np.arange(1, order, dtype=float)
    if kind.tag == KIND_HERMITE:
        return RecurrenceCoefficients(
            np.zeros(order), m / 2.0, math.sqrt(math.pi),
        )
    a = float(kind.alpha)
    if kind.tag == KIND_LAGUERRE:
        return RecurrenceCoefficients(
            2 * n + a + 1, m * (m + a), float(special.gamma(a + 1)),
        )
    b = float(kind.beta)
    total = 2 * n + a + b
    diagonal = np.empty(order)
    diagonal[0] = (b - a) / (a + b + 2)
    if order > 1:
        rest = total[1:]
        diagonal[1:] = (b * b - a * a) / (rest * (rest + 2))
    off = np.empty(order - 1)
    if order > 1:
        off[0] = 4 * (1 + a) * (1 + b) / ((2 + a + b) ** 2 * (3 + a + b))
    if order > 2:
        k = m[1:]
        c = 2 * k + a + b
        off[1:] = (
            4 * k * (k + a) * (k + b) * (k + a + b)
            / (c ** 2 * (c + 1) * (c - 1))
        )
    mu0 = 2 ** (a + b + 1) * float(special.beta(a + 1, b + 1))
    return RecurrenceCoefficients(diagonal, off, mu0)


def _christoffel_weights(nodes, coefficients):
    diagonal, beta, mu0 = coefficients
    roots = np.sqrt(beta)
    previous = np.zeros_like(nodes)
    current = np.full_like(nodes, 1 / math.sqrt(mu0))
    total = current ** 2
    for k in range(len(nodes) - 1):
        following = (
            (nodes - diagonal[k]) * current
            - (roots[k - 1] if k > 0 else 0.0) * previous
        ) / roots[k]
        previous, current = current, following
        total = total + current ** 2
    return 1 / total


def _rule_from_coefficients(coefficients, descriptor, symmetric):
    diagonal, beta, mu0 = coefficients
    order = len(diagonal)
    if order == 1:
        nodes = np.array([float(diagonal[0])])
        return QuadratureRule(nodes, np.array([mu0]), descriptor, 1)
    try:
        nodes = linalg.eigh_tridiagonal(
            diagonal, np.sqrt(beta), eigvals_only=True,
        )
    except (linalg.LinAlgError, ValueError) as error:
        raise NumericalError(
            'Tridiagonal eigen-solver failed: {}'.format(error),
        )
    if not np.all(np.isfinite(nodes)):
        raise NumericalError(
            'Tridiagonal eigen-solver returned non-finite nodes',
        )
    nodes = np.sort(nodes)
    if symmetric:
        nodes = (nodes - nodes[::-1]) / 2
    weights = _christoffel_weights(nodes, coefficients)
    return QuadratureRule(nodes, weights, descriptor, order)


# ============ Rules ============

def gauss_rule(source, order):
    """Gauss rule with order nodes for a symmetric system or a
    RecurrenceCoefficients triple.

    A scaled system is handled through its unit-scale rule, rescaled by
    x -> x / s.

    :param source: required
    :type source: MonicSymmetricSystem or RecurrenceCoefficients

    :param order: required
    :type order: positive int

    :returns: QuadratureRule

    :raises: ParameterDomainError, PositivityError, NumericalError,
             CoefficientSupplyError
    """
    if order < 1:
        raise ParameterDomainError(
            'Quadrature order must be positive, got {}'.format(order),
        )
    if isinstance(source, RecurrenceCoefficients):
        return _rule_from_coefficients(
            RecurrenceCoefficients(
                np.asarray(source.diagonal, dtype=float)[:order],
                np.asarray(source.off_diagonal_squared, dtype=float)[
                    :order - 1
                ],
                float(source.mu0),
            ),
            None,
            symmetric=False,
        )
    if not isinstance(source, MonicSymmetricSystem):
        raise ParameterDomainError(
            'gauss_rule needs a symmetric system or recurrence '
            'coefficients, got {!r}'.format(source),
        )
    scale = float(source.scale)
    unit = source.unit_system() if scale != 1 else source
    rule = _rule_from_coefficients(
        symmetric_recurrence(unit, order), source.weight, symmetric=True,
    )
    logger.debug('Built %d-point rule for %s', order, source.name)
    if scale != 1:
        rule = rule.rescale(scale)
    return rule


def classical_gauss_rule(kind, order):
    """Gauss-Hermite, Gauss-Laguerre or Gauss-Jacobi rule for kind."""
    if order < 1:
        raise ParameterDomainError(
            'Quadrature order must be positive, got {}'.format(order),
        )
    rule = _rule_from_coefficients(
        classical_recurrence(kind, order),
        kind,
        symmetric=kind.tag == KIND_HERMITE,
    )
    return rule


# ============ Oracle ============

def oracle_inner_product(weight, f, g, digits=ORACLE_DIGITS):
    """Adaptive high-precision integral of f g w over the weight interval.

    The interval is split at 0 where the generalized Hermite weight has a
    kink. f and g receive mpmath numbers.

    :param weight: required
    :type weight: WeightDescriptor

    :returns: float
    """
    lower, upper = weight.interval
    with mpmath.workdps(digits):
        value = mpmath.quad(
            lambda t: f(t) * g(t) * weight.density(t, lib=mpmath),
            [mpmath.mpf(lower), 0, mpmath.mpf(upper)],
        )
    return float(value)

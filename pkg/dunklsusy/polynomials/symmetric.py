"""Monic symmetric orthogonal polynomial systems.

A system is fixed by its recurrence S_n = x S_{n-1} - gamma_n S_{n-2}
(S_{-1} = 0, S_0 = 1), the norm k_0 of S_0 and the weight it is orthogonal
against. Norms follow from k_m = gamma_{m+1} k_{m-1}.
"""

from collections import namedtuple
import logging
import math
import threading

import numpy as np
import sympy

from dunklsusy.constants import KIND_HERMITE
from dunklsusy.constants import KIND_JACOBI
from dunklsusy.constants import KIND_LAGUERRE
from dunklsusy.constants import WEIGHT_CUSTOM
from dunklsusy.constants import WEIGHT_GAUSSIAN_EVEN
from dunklsusy.constants import WEIGHT_GENERALIZED_HERMITE
from dunklsusy.constants import WEIGHT_JACOBI_TRIG
from dunklsusy.errors import CoefficientSupplyError
from dunklsusy.errors import ParameterDomainError
from dunklsusy.errors import PositivityError
from dunklsusy.helpers.polynomial import DensePolynomial

logger = logging.getLogger(__name__)

_WeightDescriptor = namedtuple(
    'WeightDescriptor',
    [
        'interval',
        'family',
        'parameters',
        'function',
    ],
)


class WeightDescriptor(_WeightDescriptor):
    """Support interval and weight function of a symmetric system."""

    __slots__ = ()

    def __new__(cls, interval, family, parameters=None, function=None):
        lower, upper = interval
        if lower != -upper:
            raise ParameterDomainError(
                'Weight interval must be symmetric about 0, got {}'.format(
                    interval,
                ),
            )
        if family == WEIGHT_CUSTOM and function is None:
            raise ParameterDomainError(
                'A custom weight needs a pointwise weight function',
            )
        return super(WeightDescriptor, cls).__new__(
            cls, (lower, upper), family, dict(parameters or {}), function,
        )

    @property
    def half_width(self):
        return self.interval[1]

    def density(self, x, lib=np):
        """Weight at x; lib is numpy for arrays or mpmath for the oracle."""
        p = self.parameters
        if self.family == WEIGHT_GAUSSIAN_EVEN:
            return lib.exp(-(p['s'] * x) ** 2)
        if self.family == WEIGHT_GENERALIZED_HERMITE:
            sx = p['s'] * x
            return lib.exp(-sx ** 2) * abs(sx) ** (2 * p['alpha'] + 1)
        if self.family == WEIGHT_JACOBI_TRIG:
            return (1 - x * x) ** p['alpha']
        return self.function(x)


class MonicSymmetricSystem(object):
    """Recurrence coefficients, k_0 and weight of a symmetric monic system.

    gamma supplies the unit-scale coefficients gamma_1, gamma_2, ... either
    as a callable m -> gamma_m, as a sequence (index 0 holds gamma_1) or as
    an iterator that is consumed on demand. At scale s the recurrence uses
    gamma_m / s^2; k0 is the norm at that scale.
    """

    def __init__(self, gamma, k0, weight, name, scale=1):
        if not k0 > 0:
            raise PositivityError('k0', 0, k0)
        if not scale > 0:
            raise ParameterDomainError(
                'Scale must be positive, got {}'.format(scale),
            )
        self._k0 = k0
        self._weight = weight
        self._name = name
        self._scale = scale
        self._supplier = None
        self._supplied = None
        self._lock = threading.Lock()
        if callable(gamma):
            self._supplier = gamma
        elif isinstance(gamma, (list, tuple)):
            self._supplied = list(gamma)
        else:
            self._supplied = []
            self._iterator = iter(gamma)

    @property
    def k0(self):
        return self._k0

    @property
    def weight(self):
        return self._weight

    @property
    def name(self):
        return self._name

    @property
    def scale(self):
        return self._scale

    def is_exact(self):
        return isinstance(self._k0, sympy.Basic)

    def unit_gamma(self, m):
        """gamma_m at unit scale."""
        if m < 1:
            raise CoefficientSupplyError(self._name, m)
        if self._supplier is not None:
            try:
                value = self._supplier(m)
            except (IndexError, StopIteration, KeyError):
                raise CoefficientSupplyError(self._name, m)
        else:
            value = self._from_supplied(m)
        if m >= 2 and not value > 0:
            raise PositivityError('gamma', m, value)
        return value

    def gamma(self, m):
        """gamma_m at the system's scale."""
        value = self.unit_gamma(m)
        if self._scale == 1:
            return value
        return value / self._scale ** 2

    def _from_supplied(self, m):
        if m <= len(self._supplied):
            return self._supplied[m - 1]
        if not hasattr(self, '_iterator'):
            raise CoefficientSupplyError(self._name, m)
        with self._lock:
            while len(self._supplied) < m:
                try:
                    self._supplied.append(next(self._iterator))
                except StopIteration:
                    raise CoefficientSupplyError(self._name, m)
        return self._supplied[m - 1]

    def unit_system(self):
        """The same system at scale 1."""
        return MonicSymmetricSystem(
            self.unit_gamma,
            self._k0 * self._scale,
            self._weight,
            self._name,
        )

    def __repr__(self):
        return 'MonicSymmetricSystem(name={}, scale={}, k0={})'.format(
            self._name,
            self._scale,
            self._k0,
        )


# ============ Evaluation ============

def eval_symmetric_pair(system, n, x):
    """(S_{n-1}(x), S_n(x)) from one pass of the recurrence."""
    if n < 0:
        raise ParameterDomainError(
            'Degree must be nonnegative, got {}'.format(n),
        )
    previous = 0 * x
    current = 1 + 0 * x
    for m in range(1, n + 1):
        if m == 1:
            previous, current = current, x * current
        else:
            previous, current = (
                current, x * current - system.gamma(m) * previous,
            )
    return previous, current


def eval_symmetric(system, n, x):
    """S_n(x) by forward recurrence.

    :param system: required
    :type system: MonicSymmetricSystem

    :param n: required
    :type n: nonnegative int

    :param x: required
    :type x: float, complex or numpy array

    :returns: S_n(x)

    :raises: CoefficientSupplyError, PositivityError
    """
    return eval_symmetric_pair(system, n, x)[1]


def coeffs_symmetric(system, n):
    """S_n as a DensePolynomial."""
    x = DensePolynomial.monomial(1)
    return eval_symmetric_pair(system, n, x)[1]


def norms(system, n_max):
    """k_0, ..., k_{n_max} by the ratio rule k_m = gamma_{m+1} k_{m-1}."""
    if n_max < 0:
        raise ParameterDomainError(
            'n_max must be nonnegative, got {}'.format(n_max),
        )
    values = [system.k0]
    for m in range(1, n_max + 1):
        values.append(system.gamma(m + 1) * values[-1])
    logger.debug('Computed norms k_0..k_%d of %s', n_max, system.name)
    return values


# ============ Standard Systems ============

def hermite_system(s=1, exact=False):
    """Monic Hermite system for the weight exp(-s^2 x^2) on the real line."""
    if exact:
        s = sympy.Rational(s)
        k0 = sympy.sqrt(sympy.pi) / s
        gamma = lambda m: sympy.Rational(m - 1, 2)  # noqa: E731
    else:
        k0 = math.sqrt(math.pi) / s
        gamma = lambda m: (m - 1) / 2.0  # noqa: E731
    weight = WeightDescriptor(
        (-math.inf, math.inf), WEIGHT_GAUSSIAN_EVEN, {'s': float(s)},
    )
    return MonicSymmetricSystem(gamma, k0, weight, 'hermite', scale=s)


def generalized_hermite_system(s=1, alpha=-0.5, exact=False):
    """Monic system for exp(-s^2 x^2) |s x|^(2 alpha + 1).

    Even members are Laguerre L_k^(alpha)(s^2 x^2) and odd members are
    x L_k^(alpha + 1)(s^2 x^2), up to normalization, which interleaves the
    coefficients gamma_{2k+1} = k and gamma_{2k+2} = k + alpha + 1.
    """
    if not alpha > -1:
        raise ParameterDomainError(
            'Generalized Hermite weight requires alpha > -1, got {}'.format(
                alpha,
            ),
        )
    if exact:
        s = sympy.Rational(s)
        alpha = sympy.Rational(alpha)
        k0 = sympy.gamma(alpha + 1) / s
        half = sympy.Rational(1, 2)
    else:
        k0 = math.gamma(alpha + 1) / s
        half = 0.5

    def gamma(m):
        if m % 2:
            return (m - 1) * half
        return m * half + alpha

    weight = WeightDescriptor(
        (-math.inf, math.inf),
        WEIGHT_GENERALIZED_HERMITE,
        {'s': float(s), 'alpha': float(alpha)},
    )
    return MonicSymmetricSystem(
        gamma, k0, weight, 'generalized-hermite', scale=s,
    )


def symmetric_jacobi_system(alpha, exact=False):
    """Monic system for (1 - x^2)^alpha on (-1, 1)."""
    if not alpha > -1:
        raise ParameterDomainError(
            'Symmetric Jacobi weight requires alpha > -1, got {}'.format(
                alpha,
            ),
        )
    if exact:
        alpha = sympy.Rational(alpha)
        k0 = (
            sympy.sqrt(sympy.pi) * sympy.gamma(alpha + 1)
            / sympy.gamma(alpha + sympy.Rational(3, 2))
        )
        one = sympy.Integer(1)
    else:
        k0 = math.exp(
            0.5 * math.log(math.pi)
            + math.lgamma(alpha + 1)
            - math.lgamma(alpha + 1.5)
        )
        one = 1.0

    def gamma(m):
        if m == 1:
            return 0 * one
        if m == 2:
            return one / (2 * alpha + 3)
        return (
            one * (m - 1) * (m - 1 + 2 * alpha)
            / ((2 * m + 2 * alpha - 1) * (2 * m + 2 * alpha - 3))
        )

    weight = WeightDescriptor(
        (-1, 1), WEIGHT_JACOBI_TRIG, {'alpha': float(alpha)},
    )
    return MonicSymmetricSystem(gamma, k0, weight, 'symmetric-jacobi')


def from_classical(kind, s=1, exact=False):
    """Bridge a classical kind to the symmetric setting.

    Hermite gives the monic Hermite system in s x, Laguerre(alpha) the
    generalized Hermite system and Jacobi(alpha, alpha) the symmetric Jacobi
    system (Gegenbauer).

    :raises: ParameterDomainError for Jacobi with alpha != beta
    """
    kind.validate()
    if kind.tag == KIND_HERMITE:
        return hermite_system(s, exact=exact)
    if kind.tag == KIND_LAGUERRE:
        return generalized_hermite_system(s, kind.alpha, exact=exact)
    if kind.tag == KIND_JACOBI:
        if kind.alpha != kind.beta:
            raise ParameterDomainError(
                'Jacobi ({}, {}) is not symmetric'.format(
                    kind.alpha, kind.beta,
                ),
            )
        if s != 1:
            raise ParameterDomainError(
                'Symmetric Jacobi systems live on (-1, 1) and take no scale',
            )
        return symmetric_jacobi_system(kind.alpha, exact=exact)
    raise ParameterDomainError('Unknown classical kind: {}'.format(kind.tag))

"""Hermite, Laguerre and Jacobi polynomials by forward recurrence."""

from collections import namedtuple
import math

import sympy

from dunklsusy.constants import KIND_HERMITE
from dunklsusy.constants import KIND_JACOBI
from dunklsusy.constants import KIND_LAGUERRE
from dunklsusy.errors import ParameterDomainError
from dunklsusy.helpers.polynomial import DensePolynomial

_ClassicalKind = namedtuple(
    'ClassicalKind',
    [
        'tag',
        'alpha',
        'beta',
        'formal',
    ],
)


class ClassicalKind(_ClassicalKind):
    """A classical family together with its parameters.

    Formal kinds skip the integrability constraints (alpha, beta > -1) so
    that the polynomial factors of potentials with large negative Jacobi
    indices can be built; recurrence denominators are still checked.
    """

    __slots__ = ()

    @classmethod
    def hermite(cls):
        return cls(KIND_HERMITE, None, None, False)

    @classmethod
    def laguerre(cls, alpha, formal=False):
        return cls(KIND_LAGUERRE, alpha, None, formal)

    @classmethod
    def jacobi(cls, alpha, beta, formal=False):
        return cls(KIND_JACOBI, alpha, beta, formal)

    def validate(self):
        if self.tag == KIND_HERMITE:
            return self
        if self.tag == KIND_LAGUERRE:
            if not self.formal and not self.alpha > -1:
                raise ParameterDomainError(
                    'Laguerre requires alpha > -1, got {}'.format(self.alpha),
                )
            return self
        if self.tag == KIND_JACOBI:
            if not self.formal and not (self.alpha > -1 and self.beta > -1):
                raise ParameterDomainError(
                    'Jacobi requires alpha, beta > -1, got ({}, {})'.format(
                        self.alpha, self.beta,
                    ),
                )
            return self
        raise ParameterDomainError('Unknown classical kind: {}'.format(
            self.tag,
        ))

    def raised(self):
        """The kind whose degree n-1 member is proportional to d/dx of this
        kind's degree n member."""
        if self.tag == KIND_LAGUERRE:
            return self._replace(alpha=self.alpha + 1)
        if self.tag == KIND_JACOBI:
            return self._replace(alpha=self.alpha + 1, beta=self.beta + 1)
        return self

    def exact(self):
        """Same kind with sympy rational parameters."""
        if self.tag == KIND_HERMITE:
            return self
        beta = None if self.beta is None else sympy.Rational(self.beta)
        return self._replace(alpha=sympy.Rational(self.alpha), beta=beta)


def _check_index(n):
    if n < 0 or int(n) != n:
        raise ParameterDomainError(
            'Degree must be a nonnegative integer, got {}'.format(n),
        )


def _jacobi_step(alpha, beta, n):
    """Coefficients (A, B, C) of P_n = (A x - B) P_{n-1} - C P_{n-2}."""
    c = 2 * n + alpha + beta
    denominator = 2 * n * (n + alpha + beta) * (c - 2)
    if n + alpha + beta == 0 or c - 2 == 0:
        raise ParameterDomainError(
            'Jacobi recurrence is singular at n={} for (alpha, beta)=({}, {})'
            .format(n, alpha, beta),
        )
    a_n = (c - 1) * c * (c - 2) / denominator
    b_n = (beta * beta - alpha * alpha) * (c - 1) / denominator
    c_n = 2 * (n + alpha - 1) * (n + beta - 1) * c / denominator
    return a_n, b_n, c_n


def _jacobi_first(alpha, beta):
    return (alpha + beta + 2) / 2, (alpha - beta) / 2


def _recurrence(kind, n, x, one):
    """Run the forward recurrence; x and one may be scalars, arrays or
    DensePolynomials (for coefficient generation)."""
    kind.validate()
    _check_index(n)
    previous = 0 * one
    current = one
    if n == 0:
        if isinstance(x, DensePolynomial):
            return current
        return one + 0 * x
    alpha = kind.alpha
    beta = kind.beta
    for m in range(1, n + 1):
        if kind.tag == KIND_HERMITE:
            following = 2 * x * current - 2 * (m - 1) * previous
        elif kind.tag == KIND_LAGUERRE:
            following = (
                ((2 * m - 1 + alpha) * current - x * current) / m
                - (m - 1 + alpha) * previous / m
            )
        elif m == 1:
            slope, offset = _jacobi_first(alpha, beta)
            following = slope * x * one + offset * one
        else:
            a_m, b_m, c_m = _jacobi_step(alpha, beta, m)
            following = a_m * x * current - b_m * current - c_m * previous
        previous, current = current, following
    return current


def eval_classical(kind, n, x):
    """Evaluate H_n, L_n^(alpha) or P_n^(alpha, beta) at x.

    :param kind: required
    :type kind: ClassicalKind

    :param n: required
    :type n: nonnegative int

    :param x: required
    :type x: float, complex or numpy array

    :returns: value(s) of the degree n polynomial

    :raises: ParameterDomainError
    """
    return _recurrence(kind, n, x, 1)


def eval_classical_derivative(kind, n, x):
    """First derivative through the lowering identity of each family."""
    kind.validate()
    _check_index(n)
    if n == 0:
        return 0 * x
    if kind.tag == KIND_HERMITE:
        return 2 * n * eval_classical(kind, n - 1, x)
    if kind.tag == KIND_LAGUERRE:
        return -eval_classical(kind.raised(), n - 1, x)
    factor = (n + kind.alpha + kind.beta + 1) / 2
    return factor * eval_classical(kind.raised(), n - 1, x)


def coeffs_classical(kind, n):
    """Monomial coefficients of the degree n classical polynomial."""
    # Rational parameters (see ClassicalKind.exact) keep the divisions of the
    # Laguerre and Jacobi steps exact.
    return _recurrence(
        kind, n, DensePolynomial.monomial(1), DensePolynomial.one(),
    )


def orthonormalize(kind, n):
    """Square root of the orthogonality constant of the degree n member.

    Hermite: 2^n n! sqrt(pi); Laguerre: Gamma(n + alpha + 1) / n!;
    Jacobi: 2^(a+b+1) Gamma(n+a+1) Gamma(n+b+1)
    / ((2n+a+b+1) n! Gamma(n+a+b+1)).
    """
    kind.validate()
    _check_index(n)
    if kind.formal:
        raise ParameterDomainError(
            'Formal kinds have no orthogonality constant',
        )
    if kind.tag == KIND_HERMITE:
        log_norm = (
            n * math.log(2) + math.lgamma(n + 1) + 0.5 * math.log(math.pi)
        )
        return math.exp(0.5 * log_norm)
    alpha = float(kind.alpha)
    if kind.tag == KIND_LAGUERRE:
        log_norm = math.lgamma(n + alpha + 1) - math.lgamma(n + 1)
        return math.exp(0.5 * log_norm)
    beta = float(kind.beta)
    if n == 0:
        log_norm = (
            (alpha + beta + 1) * math.log(2)
            + math.lgamma(alpha + 1)
            + math.lgamma(beta + 1)
            - math.lgamma(alpha + beta + 2)
        )
        return math.exp(0.5 * log_norm)
    log_norm = (
        (alpha + beta + 1) * math.log(2)
        + math.lgamma(n + alpha + 1)
        + math.lgamma(n + beta + 1)
        - math.log(2 * n + alpha + beta + 1)
        - math.lgamma(n + 1)
        - math.lgamma(n + alpha + beta + 1)
    )
    return math.exp(0.5 * log_norm)


def hermite_laguerre_identity_check(n, x):
    """Residuals of the two identities expressing H_2n and H_2n+1 through
    Laguerre polynomials in x^2.

    :returns: (|H_2n(x) - (-1)^n 2^2n n! L_n^(-1/2)(x^2)|,
               |H_2n+1(x) - (-1)^n 2^(2n+1) n! x L_n^(1/2)(x^2)|)
    """
    _check_index(n)
    hermite = ClassicalKind.hermite()
    sign = -1 if n % 2 else 1
    scale = sign * 4 ** n * math.factorial(n)
    even = eval_classical(hermite, 2 * n, x) - scale * eval_classical(
        ClassicalKind.laguerre(-0.5), n, x * x,
    )
    odd = eval_classical(hermite, 2 * n + 1, x) - 2 * scale * x * (
        eval_classical(ClassicalKind.laguerre(0.5), n, x * x)
    )
    return abs(even), abs(odd)

"""Dunkl-SUSY orthogonal polynomials Q_{+-n} = S_2n +- a_n S_{2n-1}."""

import logging
import math
import threading

import sympy

from dunklsusy.constants import RELATIVE_EQUALITY_TOLERANCE
from dunklsusy.errors import ConsistencyError
from dunklsusy.errors import ParameterDomainError
from dunklsusy.errors import PositivityError
from dunklsusy.helpers.polynomial import DensePolynomial
from dunklsusy.polynomials.symmetric import eval_symmetric_pair

logger = logging.getLogger(__name__)


def _sign(n):
    return 1 if n > 0 else -1


class DunklSusyFamily(object):
    """The doubly indexed family {Q_n : n in Z} over a symmetric system.

    Couplings a_n = sqrt(k_2n / k_{2n-1}) and norms h_0 = k_0,
    h_n = h_{-n} = 2 k_2n are materialized lazily; extension is serialized
    by a lock and reads of materialized indices need none.
    """

    def __init__(self, base):
        self._base = base
        self._exact = base.is_exact()
        self._norms = [base.k0]
        self._couplings = [None]
        self._lock = threading.Lock()

    @property
    def base(self):
        return self._base

    @property
    def exact(self):
        return self._exact

    def _sqrt(self, value):
        if self._exact:
            return sympy.sqrt(value)
        return math.sqrt(value)

    def _ensure(self, n):
        """Materialize k_0..k_2n and a_1..a_n."""
        if n < len(self._couplings):
            return
        with self._lock:
            if n < len(self._couplings):
                return
            while len(self._norms) <= 2 * n:
                m = len(self._norms)
                self._norms.append(self._base.gamma(m + 1) * self._norms[-1])
            while len(self._couplings) <= n:
                m = len(self._couplings)
                ratio = self._norms[2 * m] / self._norms[2 * m - 1]
                if self._exact:
                    ratio = sympy.simplify(ratio)
                if not ratio > 0:
                    raise PositivityError('k_2n/k_2n-1', m, ratio)
                self._couplings.append(self._sqrt(ratio))
            logger.debug(
                'Extended %s family to n=%d', self._base.name, n,
            )

    def k(self, m):
        """Norm k_m of the base system."""
        self._ensure((m + 1) // 2)
        return self._norms[m]

    def a(self, n):
        """Coupling a_n, n >= 1."""
        if n < 1:
            raise ParameterDomainError(
                'Couplings are defined for n >= 1, got {}'.format(n),
            )
        self._ensure(n)
        return self._couplings[n]

    def h(self, n):
        """Norm h_n = <Q_n, Q_n>."""
        n = abs(n)
        if n == 0:
            return self._base.k0
        self._ensure(n)
        return 2 * self._norms[2 * n]

    def h_from_couplings(self, n):
        """h_n as k_2n + a_n^2 k_{2n-1}."""
        n = abs(n)
        if n == 0:
            return self._base.k0
        return self.k(2 * n) + self.a(n) ** 2 * self.k(2 * n - 1)

    def eval_q(self, n, x):
        return eval_q(self, n, x)

    def coeffs_q(self, n):
        return coeffs_q(self, n)

    def __repr__(self):
        return 'DunklSusyFamily(base={})'.format(self._base.name)


class OrthonormalFamily(object):
    """Unit-norm view Q_n / sqrt(h_n) of a DunklSusyFamily."""

    def __init__(self, family):
        self._family = family

    @property
    def base(self):
        return self._family.base

    @property
    def family(self):
        return self._family

    def _factor(self, n):
        h = self._family.h(n)
        if self._family.exact:
            return 1 / sympy.sqrt(h)
        return 1 / math.sqrt(h)

    def h(self, n):
        return 1

    def eval_q(self, n, x):
        return self._factor(n) * eval_q(self._family, n, x)

    def coeffs_q(self, n):
        return coeffs_q(self._family, n).scale(self._factor(n))

    def __repr__(self):
        return 'OrthonormalFamily(base={})'.format(self.base.name)


def build_family(base):
    """Build the Dunkl-SUSY family of a positive-definite symmetric system.

    :param base: required
    :type base: MonicSymmetricSystem

    :returns: DunklSusyFamily

    :raises: PositivityError
    """
    family = DunklSusyFamily(base)
    # Fail fast on an invalid base system.
    family.a(1)
    return family


def eval_q(family, n, x):
    """Q_n(x) for any integer n; Q_{-n}(x) = Q_n(-x)."""
    if n == 0:
        return 1 + 0 * x
    m = abs(n)
    odd, even = eval_symmetric_pair(family.base, 2 * m, x)
    # eval_symmetric_pair returns (S_{2m-1}, S_2m).
    return even + _sign(n) * family.a(m) * odd


def coeffs_q(family, n):
    """Q_n as a DensePolynomial of degree 2|n|."""
    if n == 0:
        return DensePolynomial.one()
    m = abs(n)
    x = DensePolynomial.monomial(1)
    odd, even = eval_symmetric_pair(family.base, 2 * m, x)
    return even + odd.scale(_sign(n) * family.a(m))


def split_even_odd(family, n):
    """Recover (S_2n, S_{2n-1}) from Q_n and Q_{-n}."""
    if n < 1:
        raise ParameterDomainError(
            'split_even_odd needs n >= 1, got {}'.format(n),
        )
    q_plus = coeffs_q(family, n)
    q_minus = coeffs_q(family, -n)
    even = (q_plus + q_minus) / 2
    odd = (q_plus - q_minus) / (2 * family.a(n))
    return even, odd


def _check_member(family, n, q, label):
    if q.degree != 2 * n:
        raise ConsistencyError(
            '{} has degree {}, expected {}'.format(label, q.degree, 2 * n),
        )
    lead = q.leading_coefficient()
    if abs(complex(lead) - 1) > RELATIVE_EQUALITY_TOLERANCE:
        raise ConsistencyError(
            '{} is not monic (leading coefficient {})'.format(label, lead),
        )


def recurrence_step(family, n, q_n, q_neg_n, allow_zero_seed=False):
    """Advance (Q_n, Q_{-n}) to (Q_{n+1}, Q_{-(n+1)}).

    With c = gamma_{2n+1} / a_n, g = gamma_{2n+2} and b = a_{n+1}:

        Q_{n+1} = 1/2 [x^2 + (b - c) x - g - c b] Q_n
                + 1/2 [x^2 + (b + c) x - g + c b] Q_{-n}
        Q_{-(n+1)} = 1/2 [x^2 - (b + c) x - g + c b] Q_n
                   + 1/2 [x^2 - (b - c) x - g - c b] Q_{-n}

    At n = 0 there is no a_0; the step is refused unless allow_zero_seed
    is set, in which case c is taken to be 0.

    :raises: ConsistencyError, ParameterDomainError
    """
    if n < 0:
        raise ParameterDomainError(
            'recurrence_step needs n >= 0, got {}'.format(n),
        )
    if n == 0 and not allow_zero_seed:
        raise ParameterDomainError(
            'The n=0 step needs the convention gamma_1 / a_0 = 0; '
            'pass allow_zero_seed=True or seed from Q_1, Q_-1',
        )
    _check_member(family, n, q_n, 'q_n')
    _check_member(family, n, q_neg_n, 'q_neg_n')
    if n > 0 and not q_n.reflect().allclose(
        q_neg_n, rtol=RELATIVE_EQUALITY_TOLERANCE,
    ):
        raise ConsistencyError('q_neg_n is not the reflection of q_n')

    base = family.base
    c = 0 if n == 0 else base.gamma(2 * n + 1) / family.a(n)
    g = base.gamma(2 * n + 2)
    b = family.a(n + 1)
    half = sympy.Rational(1, 2) if family.exact else 0.5

    def multiplier(linear, constant):
        return DensePolynomial((constant, linear, 1)).scale(half)

    q_next = (
        multiplier(b - c, -g - c * b) * q_n
        + multiplier(b + c, -g + c * b) * q_neg_n
    )
    q_next_neg = (
        multiplier(-(b + c), -g + c * b) * q_n
        + multiplier(-(b - c), -g - c * b) * q_neg_n
    )
    if family.exact:
        q_next = q_next.map(sympy.expand)
        q_next_neg = q_next_neg.map(sympy.expand)
    return q_next, q_next_neg


def recurrence_generate(family, n_max):
    """Q_{+-1} .. Q_{+-n_max} by repeated recurrence steps seeded at n=1."""
    if n_max < 1:
        return []
    pairs = [(coeffs_q(family, 1), coeffs_q(family, -1))]
    for n in range(1, n_max):
        pairs.append(recurrence_step(family, n, *pairs[-1]))
    return pairs

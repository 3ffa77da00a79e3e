"""Gram matrices of Dunkl-SUSY families and of L-eigenfunctions."""

from collections import namedtuple
import logging

from cytoolz import interleave
import numpy as np
from scipy import integrate

from dunklsusy.constants import EIGENFUNCTION_GRAM_TOLERANCE
from dunklsusy.constants import GRAM_TOLERANCE
from dunklsusy.errors import ExactnessError
from dunklsusy.errors import NumericalError
from dunklsusy.errors import ParameterDomainError
from dunklsusy.polynomials.dunkl_susy import OrthonormalFamily
from dunklsusy.quadrature.gauss import gauss_rule

logger = logging.getLogger(__name__)

_GramReport = namedtuple(
    'GramReport',
    [
        'indices',
        'matrix',
        'expected_diag',
        'max_offdiag_abs',
        'max_diag_relerr',
    ],
)


class GramReport(_GramReport):

    __slots__ = ()

    @property
    def scale(self):
        return max(1.0, float(np.max(np.abs(self.expected_diag))))

    def passed(self, tolerance=GRAM_TOLERANCE):
        """Off-diagonal entries within tolerance times the largest norm and
        every diagonal entry within tolerance of its expected norm."""
        return (
            self.max_offdiag_abs <= tolerance * self.scale and
            self.max_diag_relerr <= tolerance
        )

    def to_rows(self):
        """Header row of signed indices followed by one row per index."""
        rows = [[''] + list(self.indices)]
        for index, row in zip(self.indices, self.matrix):
            rows.append([index] + [float(value) for value in row])
        return rows

    def to_json(self):
        return {
            'indices': list(self.indices),
            'matrix': [[float(v) for v in row] for row in self.matrix],
            'expected_diag': [float(v) for v in self.expected_diag],
            'max_offdiag_abs': self.max_offdiag_abs,
            'max_diag_relerr': self.max_diag_relerr,
        }


def signed_indices(n_max):
    """0, 1, -1, 2, -2, ..., n_max, -n_max."""
    return [0] + list(interleave([
        range(1, n_max + 1),
        range(-1, -n_max - 1, -1),
    ]))


def _report(indices, matrix, expected):
    matrix = (matrix + matrix.T) / 2
    expected = np.asarray(expected, dtype=float)
    diagonal = np.diag(matrix)
    off = matrix - np.diag(diagonal)
    return GramReport(
        indices,
        matrix,
        expected,
        float(np.max(np.abs(off))),
        float(np.max(np.abs(diagonal - expected) / np.abs(expected))),
    )


def gram_matrix(family, n_max, order=None):
    """<Q_n, Q_m> for n, m in signed_indices(n_max) by Gauss quadrature.

    :param family: required
    :type family: DunklSusyFamily or OrthonormalFamily

    :param n_max: required
    :type n_max: nonnegative int

    :param order: optional, defaults to 2 n_max + 1
    :type order: int

    :returns: GramReport

    :raises: ExactnessError
    """
    if n_max < 0:
        raise ParameterDomainError(
            'n_max must be nonnegative, got {}'.format(n_max),
        )
    needed = 2 * n_max + 1
    if order is None:
        order = needed
    if order < needed:
        raise ExactnessError(
            'A {}-point rule integrates degree {} exactly; Gram entries up to '
            'n_max={} need order >= {}'.format(
                order, 2 * order - 1, n_max, needed,
            ),
        )
    rule = gauss_rule(family.base, order)
    indices = signed_indices(n_max)
    values = np.array(
        [family.eval_q(n, rule.nodes) for n in indices], dtype=float,
    )
    matrix = (values * rule.weights) @ values.T
    expected = [float(family.h(n)) for n in indices]
    logger.debug(
        'Gram matrix of %r: n_max=%d order=%d', family, n_max, order,
    )
    return _report(indices, matrix, expected)


def orthonormal_view(family):
    """The family Q_n / sqrt(h_n), whose Gram matrix is the identity."""
    if isinstance(family, OrthonormalFamily):
        return family
    return OrthonormalFamily(family)


def _inner_product(f, g, bound):
    total = 0.0
    for lower, upper in ((-bound, 0.0), (0.0, bound)):
        value, _ = integrate.quad(
            lambda x: f(x) * g(x),
            lower,
            upper,
            epsabs=1e-13,
            epsrel=1e-11,
            limit=200,
        )
        total += value
    if not np.isfinite(total):
        raise NumericalError('Non-finite inner product')
    return total


def eigenfunction_gram(spec, n_max):
    """Normalized Gram matrix of the L-eigenfunctions psi_n of a potential,
    |n| <= n_max, over its domain.

    L is symmetric and the eigenvalues of distinct psi_n differ, so the
    normalized matrix is the identity.

    :returns: (GramReport, passed)
    """
    indices = signed_indices(n_max)
    functions = [spec.eigenfunction(n)[0].value for n in indices]
    bound = spec.integration_half_width
    size = len(indices)
    matrix = np.empty((size, size))
    for i in range(size):
        for j in range(i, size):
            matrix[i, j] = matrix[j, i] = _inner_product(
                functions[i], functions[j], bound,
            )
    norms = np.sqrt(np.diag(matrix))
    normalized = matrix / np.outer(norms, norms)
    report = _report(indices, normalized, np.ones(size))
    return report, report.passed(EIGENFUNCTION_GRAM_TOLERANCE)

import logging

from dunklsusy.constants import CLASSICAL_FAMILIES
from dunklsusy.constants import EIGEN_TOLERANCE
from dunklsusy.constants import FAMILY_HERMITE_SUSY
from dunklsusy.constants import FAMILY_JACOBI_SUSY
from dunklsusy.constants import FAMILY_LAGUERRE_SUSY
from dunklsusy.constants import GRAM_TOLERANCE
from dunklsusy.constants import KIND_HERMITE
from dunklsusy.constants import KIND_LAGUERRE
from dunklsusy.constants import RECURRENCE_TOLERANCE
from dunklsusy.constants import SUSY_FAMILIES
from dunklsusy.errors import ParameterDomainError
from dunklsusy.errors import UnknownSelectorError
from dunklsusy.errors import UnsupportedKindError
from dunklsusy.helpers.report_helpers import or_default
from dunklsusy.operators.dunkl_operator import eigencheck
from dunklsusy.operators.dunkl_operator import hermite_binding
from dunklsusy.operators.dunkl_operator import laguerre_binding
from dunklsusy.polynomials.classical import ClassicalKind
from dunklsusy.polynomials.classical import coeffs_classical
from dunklsusy.polynomials.classical import eval_classical
from dunklsusy.polynomials.dunkl_susy import build_family
from dunklsusy.polynomials.dunkl_susy import coeffs_q
from dunklsusy.polynomials.dunkl_susy import recurrence_generate
from dunklsusy.polynomials.symmetric import generalized_hermite_system
from dunklsusy.polynomials.symmetric import hermite_system
from dunklsusy.polynomials.symmetric import symmetric_jacobi_system
from dunklsusy.quadrature.gram import gram_matrix
from dunklsusy.quadrature.gram import orthonormal_view
from dunklsusy.quadrature.gram import signed_indices

logger = logging.getLogger(__name__)

DEFAULT_LAGUERRE_ALPHA = -0.5
DEFAULT_JACOBI_ALPHA = 0.5


class Families(object):
    """Polynomial families addressed by selector name.

    Dunkl-SUSY selectors take s and alpha; the classical selectors
    'hermite', 'laguerre' and 'jacobi' take alpha and beta.
    """

    def __init__(
        self,
        tolerance=None,
        order=None,
    ):
        self.tolerance = tolerance
        self.order = order
        self._families = {}

    # ============ Construction ============

    def system(self, selector, s=1, alpha=None):
        if selector == FAMILY_HERMITE_SUSY:
            return hermite_system(s)
        if selector == FAMILY_LAGUERRE_SUSY:
            if alpha is None:
                alpha = DEFAULT_LAGUERRE_ALPHA
            return generalized_hermite_system(s, alpha)
        if selector == FAMILY_JACOBI_SUSY:
            if s != 1:
                raise ParameterDomainError(
                    'Symmetric Jacobi systems live on (-1, 1) and take no '
                    'scale',
                )
            if alpha is None:
                alpha = DEFAULT_JACOBI_ALPHA
            return symmetric_jacobi_system(alpha)
        raise UnknownSelectorError(
            'Unknown family {!r}; expected one of {}'.format(
                selector, SUSY_FAMILIES,
            ),
        )

    def family(self, selector, s=1, alpha=None, orthonormal=False):
        """Cached DunklSusyFamily (or its orthonormal view)."""
        key = (selector, s, alpha)
        if key not in self._families:
            self._families[key] = build_family(
                self.system(selector, s=s, alpha=alpha),
            )
        family = self._families[key]
        if orthonormal:
            return orthonormal_view(family)
        return family

    def classical_kind(self, selector, alpha=None, beta=None):
        if selector == KIND_HERMITE:
            return ClassicalKind.hermite()
        if alpha is None:
            raise ParameterDomainError(
                '{} polynomials need --alpha'.format(selector),
            )
        if selector == KIND_LAGUERRE:
            return ClassicalKind.laguerre(alpha).validate()
        if beta is None:
            raise ParameterDomainError('jacobi polynomials need --beta')
        return ClassicalKind.jacobi(alpha, beta).validate()

    def binding(self, selector, s=1, alpha=None):
        if selector == FAMILY_HERMITE_SUSY:
            return hermite_binding(s)
        if selector == FAMILY_LAGUERRE_SUSY:
            if alpha is None:
                alpha = DEFAULT_LAGUERRE_ALPHA
            return laguerre_binding(s, alpha)
        if selector == FAMILY_JACOBI_SUSY:
            raise UnsupportedKindError(
                'The symmetric Jacobi family has no polynomial '
                'eigen-equation; check a trigonometric potential instead',
            )
        raise UnknownSelectorError(
            'Unknown family {!r}; expected one of {}'.format(
                selector, SUSY_FAMILIES,
            ),
        )

    # ============ Evaluation ============

    def evaluate(
        self,
        selector,
        n,
        x,
        s=1,
        alpha=None,
        beta=None,
        orthonormal=False,
    ):
        '''
        Evaluate Q_n of a Dunkl-SUSY family, or a classical polynomial.

        :param selector: required
        :type selector: str in SUSY_FAMILIES or CLASSICAL_FAMILIES

        :param n: required
        :type n: int (nonnegative for classical selectors)

        :param x: required
        :type x: float or numpy array

        :returns: value(s) at x

        :raises: UnknownSelectorError, ParameterDomainError
        '''
        if selector in CLASSICAL_FAMILIES:
            kind = self.classical_kind(selector, alpha, beta)
            return eval_classical(kind, n, x)
        family = self.family(selector, s, alpha, orthonormal)
        return family.eval_q(n, x)

    def coefficients(
        self,
        selector,
        n,
        s=1,
        alpha=None,
        beta=None,
        orthonormal=False,
    ):
        if selector in CLASSICAL_FAMILIES:
            kind = self.classical_kind(selector, alpha, beta)
            return coeffs_classical(kind, n)
        family = self.family(selector, s, alpha, orthonormal)
        return family.coeffs_q(n)

    # ============ Verification ============

    def gram(self, selector, n_max, s=1, alpha=None, orthonormal=False):
        '''
        Gram matrix over Q_0, Q_1, Q_-1, ..., Q_n_max, Q_-n_max.

        :returns: (GramReport, passed)

        :raises: ExactnessError
        '''
        family = self.family(selector, s, alpha, orthonormal)
        report = gram_matrix(family, n_max, order=self.order)
        return report, report.passed(
            or_default(self.tolerance, GRAM_TOLERANCE),
        )

    def eigencheck(self, selector, n_max, s=1, alpha=None):
        '''
        Check Y Q_n = lambda_n Q_n coefficient-wise for |n| <= n_max.

        :returns: list of EigenReport
        '''
        binding = self.binding(selector, s, alpha)
        tolerance = or_default(self.tolerance, EIGEN_TOLERANCE)
        return [
            eigencheck(binding, n, tolerance=tolerance)
            for n in signed_indices(n_max)
        ]

    def recurrence_check(self, selector, n_max, s=1, alpha=None):
        '''
        Compare recurrence-generated Q_+-n with the direct construction.

        :returns: (rows of (n, plus difference, minus difference), passed)
        '''
        family = self.family(selector, s, alpha)
        rows = []
        for n, (q_plus, q_minus) in enumerate(
            recurrence_generate(family, n_max), start=1,
        ):
            rows.append((
                n,
                q_plus.relative_difference(coeffs_q(family, n)),
                q_minus.relative_difference(coeffs_q(family, -n)),
            ))
        worst = max((max(r[1], r[2]) for r in rows), default=0.0)
        logger.debug(
            'recurrence check %s n_max=%d: %g', selector, n_max, worst,
        )
        return rows, worst <= or_default(
            self.tolerance, RECURRENCE_TOLERANCE,
        )

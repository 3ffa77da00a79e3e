import math

import numpy as np

from dunklsusy.constants import CASE_A
from dunklsusy.constants import SPEC_SCARF_I
from dunklsusy.constants import SPEC_SCARF_II
from dunklsusy.errors import ParameterDomainError
from dunklsusy.operators.dunkl_operator import OddPotential
from dunklsusy.polynomials.classical import ClassicalKind
from dunklsusy.potentials.shape_invariant import PotentialSpec


def _check_scale(spec):
    if not spec.params['alpha'] > 0:
        raise ParameterDomainError(
            '{} requires alpha > 0, got {}'.format(
                spec.name, spec.params['alpha'],
            ),
        )


class ScarfII(PotentialSpec):
    """Hyperbolic Scarf: v = A tanh(alpha x) on the real line.

    psi_n = i^n cosh(alpha x)^(-A/alpha) P_n^(p, p)(i sinh(alpha x)) with
    p = -A/alpha - 1/2, real after the phase is applied.
    """

    name = SPEC_SCARF_II
    display_name = 'Scarf II (hyperbolic)'
    case = CASE_A
    parameter_names = ('A', 'alpha')

    def _validate(self):
        _check_scale(self)
        if not self.params['A'] > 0:
            raise ParameterDomainError(
                'Scarf II requires A > 0, got {}'.format(self.params['A']),
            )

    @property
    def _ratio(self):
        return float(self.params['A']) / float(self.params['alpha'])

    @property
    def window(self):
        return 3.0 / float(self.params['alpha'])

    @property
    def integration_half_width(self):
        return 25.0 / float(self.params['alpha'])

    def shifted(self):
        return ScarfII(
            validate=False,
            A=self.params['A'] - self.params['alpha'],
            alpha=self.params['alpha'],
        )

    def superpotential(self):
        return OddPotential.tanh(
            float(self.params['A']), float(self.params['alpha']),
        )

    def energy_level(self, n):
        A = self.params['A']
        alpha = self.params['alpha']
        return 2 * n * A * alpha - n * n * alpha * alpha

    def table_partner_potential(self, x):
        A = float(self.params['A'])
        alpha = float(self.params['alpha'])
        return A ** 2 - A * (A + alpha) / np.cosh(alpha * x) ** 2

    def table_coefficient(self, n):
        ratio = self._ratio
        if not n < ratio:
            raise ParameterDomainError(
                'Scarf II eigenfunctions need n < A/alpha = {}, got {}'
                .format(ratio, n),
            )
        return 0.5 * math.sqrt((ratio - n) / n)

    def ground_factor(self, r):
        return np.cosh(float(self.params['alpha']) * r) ** (-self._ratio)

    def change_of_variable(self, r):
        alpha = float(self.params['alpha'])
        return (
            1j * np.sinh(alpha * r),
            1j * alpha * np.cosh(alpha * r),
        )

    def polynomial_kind(self):
        p = -self._ratio - 0.5
        return ClassicalKind.jacobi(p, p, formal=True)

    def phase(self, n):
        return 1j ** n


class ScarfI(PotentialSpec):
    """Trigonometric Scarf: v = A tan(alpha x) on |x| < pi / (2 alpha);
    Gegenbauer-type P_n^(p, p)(sin(alpha x)) with p = A/alpha - 1/2."""

    name = SPEC_SCARF_I
    display_name = 'Scarf I (trigonometric)'
    case = CASE_A
    parameter_names = ('A', 'alpha')

    def _validate(self):
        _check_scale(self)
        if not self.params['A'] >= 0:
            raise ParameterDomainError(
                'Scarf I requires A >= 0, got {}'.format(self.params['A']),
            )

    @property
    def _ratio(self):
        return float(self.params['A']) / float(self.params['alpha'])

    @property
    def half_width(self):
        return math.pi / (2 * float(self.params['alpha']))

    def shifted(self):
        return ScarfI(
            validate=False,
            A=self.params['A'] + self.params['alpha'],
            alpha=self.params['alpha'],
        )

    def superpotential(self):
        return OddPotential.tan(
            float(self.params['A']), float(self.params['alpha']),
        )

    def energy_level(self, n):
        A = self.params['A']
        alpha = self.params['alpha']
        return 2 * n * A * alpha + n * n * alpha * alpha

    def table_partner_potential(self, x):
        A = float(self.params['A'])
        alpha = float(self.params['alpha'])
        return -A ** 2 + A * (A - alpha) / np.cos(alpha * x) ** 2

    def table_coefficient(self, n):
        return 0.5 * math.sqrt((self._ratio + n) / n)

    def ground_factor(self, r):
        return np.cos(float(self.params['alpha']) * r) ** self._ratio

    def change_of_variable(self, r):
        alpha = float(self.params['alpha'])
        return np.sin(alpha * r), alpha * np.cos(alpha * r)

    def polynomial_kind(self):
        p = self._ratio - 0.5
        return ClassicalKind.jacobi(p, p, formal=True)

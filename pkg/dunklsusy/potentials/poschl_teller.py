import math

import numpy as np

from dunklsusy.constants import CASE_B
from dunklsusy.constants import SPEC_GEN_POSCHL_TELLER
from dunklsusy.constants import SPEC_POSCHL_TELLER
from dunklsusy.errors import ParameterDomainError
from dunklsusy.operators.dunkl_operator import OddPotential
from dunklsusy.polynomials.classical import ClassicalKind
from dunklsusy.potentials.shape_invariant import PotentialSpec


class GeneralizedPoschlTeller(PotentialSpec):
    """v = A coth(alpha r) - B cosech(alpha r) on r > 0 (A < B), doubled.

    psi_n = (y - 1)^((b - l)/2) (y + 1)^(-(b + l)/2) P_n^(b-l-1/2, -b-l-1/2)(y)
    with y = cosh(alpha r), l = A/alpha and b = B/alpha.
    """

    name = SPEC_GEN_POSCHL_TELLER
    display_name = 'generalized Poschl-Teller'
    case = CASE_B
    parameter_names = ('A', 'B', 'alpha')

    def _validate(self):
        p = self.params
        if not p['alpha'] > 0:
            raise ParameterDomainError(
                'Generalized Poschl-Teller requires alpha > 0, got {}'.format(
                    p['alpha'],
                ),
            )
        if not 0 < p['A'] < p['B']:
            raise ParameterDomainError(
                'Generalized Poschl-Teller requires 0 < A < B, got '
                'A={}, B={}'.format(p['A'], p['B']),
            )

    @property
    def _lambda(self):
        return float(self.params['A']) / float(self.params['alpha'])

    @property
    def _b(self):
        return float(self.params['B']) / float(self.params['alpha'])

    @property
    def window(self):
        return 3.0 / float(self.params['alpha'])

    @property
    def integration_half_width(self):
        return 25.0 / float(self.params['alpha'])

    def shifted(self):
        return GeneralizedPoschlTeller(
            validate=False,
            A=self.params['A'] - self.params['alpha'],
            B=self.params['B'],
            alpha=self.params['alpha'],
        )

    def superpotential(self):
        return OddPotential.coth_cosech(
            float(self.params['A']),
            float(self.params['B']),
            float(self.params['alpha']),
        )

    def energy_level(self, n):
        A = self.params['A']
        alpha = self.params['alpha']
        return 2 * n * A * alpha - n * n * alpha * alpha

    def table_partner_potential(self, x):
        A = float(self.params['A'])
        B = float(self.params['B'])
        alpha = float(self.params['alpha'])
        cosech = 1 / np.sinh(alpha * x)
        coth = np.cosh(alpha * x) * cosech
        return (
            A ** 2
            + (B ** 2 + A ** 2 + A * alpha) * cosech ** 2
            - B * (2 * A + alpha) * coth * cosech
        )

    def table_coefficient(self, n):
        top = 2 * self._lambda - n
        if not top > 0:
            raise ParameterDomainError(
                'Generalized Poschl-Teller eigenfunctions need n < 2A/alpha '
                '= {}, got {}'.format(2 * self._lambda, n),
            )
        return -0.5 * math.sqrt(top / n)

    def ground_factor(self, r):
        # (y - 1) = 2 sinh^2(alpha r / 2) and (y + 1) = 2 cosh^2(alpha r / 2)
        half = float(self.params['alpha']) * r / 2
        lam = self._lambda
        return (
            2.0 ** (-lam)
            * np.sinh(half) ** (self._b - lam)
            * np.cosh(half) ** (-(self._b + lam))
        )

    def change_of_variable(self, r):
        alpha = float(self.params['alpha'])
        return np.cosh(alpha * r), alpha * np.sinh(alpha * r)

    def polynomial_kind(self):
        lam = self._lambda
        b = self._b
        return ClassicalKind.jacobi(b - lam - 0.5, -b - lam - 0.5, formal=True)


class PoschlTeller(PotentialSpec):
    """v = A tan(alpha r) - B cot(alpha r) on 0 < r < pi / (2 alpha), doubled;
    Jacobi P_n^(B/alpha - 1/2, A/alpha - 1/2)(cos(2 alpha r))."""

    name = SPEC_POSCHL_TELLER
    display_name = 'Poschl-Teller'
    case = CASE_B
    parameter_names = ('A', 'B', 'alpha')

    def _validate(self):
        p = self.params
        if not p['alpha'] > 0:
            raise ParameterDomainError(
                'Poschl-Teller requires alpha > 0, got {}'.format(p['alpha']),
            )
        if not (p['A'] > 0 and p['B'] > 0):
            raise ParameterDomainError(
                'Poschl-Teller requires A, B > 0, got A={}, B={}'.format(
                    p['A'], p['B'],
                ),
            )

    @property
    def _lambda(self):
        return float(self.params['A']) / float(self.params['alpha'])

    @property
    def _b(self):
        return float(self.params['B']) / float(self.params['alpha'])

    @property
    def half_width(self):
        return math.pi / (2 * float(self.params['alpha']))

    def shifted(self):
        alpha = self.params['alpha']
        return PoschlTeller(
            validate=False,
            A=self.params['A'] + alpha,
            B=self.params['B'] + alpha,
            alpha=alpha,
        )

    def superpotential(self):
        return OddPotential.tan_cot(
            float(self.params['A']),
            float(self.params['B']),
            float(self.params['alpha']),
        )

    def energy_level(self, n):
        p = self.params
        return 4 * n * p['alpha'] * (p['A'] + p['B'] + n * p['alpha'])

    def table_partner_potential(self, x):
        A = float(self.params['A'])
        B = float(self.params['B'])
        alpha = float(self.params['alpha'])
        return (
            -(A + B) ** 2
            + A * (A - alpha) / np.cos(alpha * x) ** 2
            + B * (B - alpha) / np.sin(alpha * x) ** 2
        )

    def table_coefficient(self, n):
        return -0.5 * math.sqrt((self._lambda + self._b + n) / n)

    def ground_factor(self, r):
        # (1 - y) = 2 sin^2(alpha r) and (1 + y) = 2 cos^2(alpha r)
        ar = float(self.params['alpha']) * r
        lam = self._lambda
        b = self._b
        return (
            2.0 ** ((b + lam) / 2)
            * np.sin(ar) ** b
            * np.cos(ar) ** lam
        )

    def change_of_variable(self, r):
        alpha = float(self.params['alpha'])
        return np.cos(2 * alpha * r), -2 * alpha * np.sin(2 * alpha * r)

    def polynomial_kind(self):
        return ClassicalKind.jacobi(self._b - 0.5, self._lambda - 0.5)

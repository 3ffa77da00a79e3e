import math

import numpy as np

from dunklsusy.constants import CASE_A
from dunklsusy.constants import CASE_B
from dunklsusy.constants import SPEC_SHIFTED_OSCILLATOR
from dunklsusy.constants import SPEC_THREE_D_OSCILLATOR
from dunklsusy.errors import ParameterDomainError
from dunklsusy.operators.dunkl_operator import OddPotential
from dunklsusy.polynomials.classical import ClassicalKind
from dunklsusy.potentials.shape_invariant import PotentialSpec


class ShiftedOscillator(PotentialSpec):
    """v = s^2 x, V_1 = s^4 x^2 - s^2; Hermite polynomials in y = s x."""

    name = SPEC_SHIFTED_OSCILLATOR
    display_name = 'shifted oscillator'
    case = CASE_A
    parameter_names = ('s',)

    def _validate(self):
        if not self.params['s'] > 0:
            raise ParameterDomainError(
                'Shifted oscillator requires s > 0, got {}'.format(
                    self.params['s'],
                ),
            )

    @property
    def window(self):
        return 4.0 / float(self.params['s'])

    @property
    def integration_half_width(self):
        return 12.0 / float(self.params['s'])

    def shifted(self):
        return ShiftedOscillator(validate=False, **self.params)

    def superpotential(self):
        return OddPotential.linear(float(self.params['s']))

    def energy_level(self, n):
        return 2 * n * self.params['s'] ** 2

    def table_partner_potential(self, x):
        s = float(self.params['s'])
        return s ** 4 * x ** 2 - s ** 2

    def table_coefficient(self, n):
        return 2 * math.sqrt(n)

    def ground_factor(self, r):
        return np.exp(-(float(self.params['s']) * r) ** 2 / 2)

    def change_of_variable(self, r):
        s = float(self.params['s'])
        return s * r, s + 0 * r

    def polynomial_kind(self):
        return ClassicalKind.hermite()


class ThreeDOscillator(PotentialSpec):
    """v = s^2 r - (l + 1) / r on r > 0, doubled to the real line;
    Laguerre polynomials L_n^(l + 1/2) in y = s^2 r^2."""

    name = SPEC_THREE_D_OSCILLATOR
    display_name = '3d oscillator'
    case = CASE_B
    parameter_names = ('s', 'l')

    def _validate(self):
        if not self.params['s'] > 0:
            raise ParameterDomainError(
                '3d oscillator requires s > 0, got {}'.format(
                    self.params['s'],
                ),
            )
        if not self.params['l'] >= 0:
            raise ParameterDomainError(
                '3d oscillator requires l >= 0, got {}'.format(
                    self.params['l'],
                ),
            )

    @property
    def window(self):
        return 4.0 / float(self.params['s'])

    @property
    def integration_half_width(self):
        return 12.0 / float(self.params['s'])

    def shifted(self):
        return ThreeDOscillator(
            validate=False, s=self.params['s'], l=self.params['l'] + 1,
        )

    def superpotential(self):
        return OddPotential.radial_linear(
            float(self.params['s']), float(self.params['l']) + 0.5,
        )

    def energy_level(self, n):
        return 4 * n * self.params['s'] ** 2

    def table_partner_potential(self, x):
        s = float(self.params['s'])
        l = float(self.params['l'])  # noqa: E741
        return s ** 4 * x ** 2 + l * (l + 1) / x ** 2 - (2 * l + 3) * s ** 2

    def table_coefficient(self, n):
        return -1 / math.sqrt(n)

    def ground_factor(self, r):
        sr = float(self.params['s']) * r
        return sr ** (float(self.params['l']) + 1) * np.exp(-sr ** 2 / 2)

    def change_of_variable(self, r):
        s = float(self.params['s'])
        return (s * r) ** 2, 2 * s * s * r

    def polynomial_kind(self):
        return ClassicalKind.laguerre(float(self.params['l']) + 0.5)

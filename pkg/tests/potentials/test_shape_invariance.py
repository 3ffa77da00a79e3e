import math

import numpy as np
import pytest

from dunklsusy.constants import LEVEL_PARTNER_1
from dunklsusy.constants import LEVEL_PARTNER_2
from dunklsusy.errors import ParameterDomainError
from dunklsusy.potentials.catalog import build_spec

from tests.constants import POTENTIAL_PARAMS

PARAMS = {
    'shifted-oscillator': {'s': 1},
    'scarf1': {'A': 2, 'alpha': 1},
    'scarf2': {'A': 2, 'alpha': 1},
    '3d-oscillator': {'s': 1, 'l': 0},
}


def example(name):
    return build_spec(name, **PARAMS[name])


def specs():
    return [build_spec(name, **p) for name, p in POTENTIAL_PARAMS.items()]


class TestShapeInvariance():

    def test_superpotential_values(self):
        oscillator = example('shifted-oscillator')
        assert oscillator.superpotential_value(0.5) == 0.5
        scarf = example('scarf1')
        assert scarf.superpotential_value(0.0) == 0
        radial = example('3d-oscillator')
        assert radial.superpotential_value(2.0) == 1.5

    def test_partner_potentials(self):
        oscillator = example('shifted-oscillator')
        assert oscillator.partner_potentials(1.0) == (0.0, 2.0)
        scarf = example('scarf1')
        v1, v2 = scarf.partner_potentials(0.0)
        assert (v1, v2) == (pytest.approx(-2), pytest.approx(2))
        for spec in specs():
            x = spec.grid(25)
            v1, v2 = spec.partner_potentials(x)
            np.testing.assert_allclose(
                v2 - v1, 2 * spec.superpotential().derivative(x),
                rtol=1e-12, atol=1e-12,
            )

    def test_table_partner_potential(self):
        for spec in specs():
            x = spec.grid(50)
            v1, _ = spec.partner_potentials(x)
            np.testing.assert_allclose(
                v1, spec.table_partner_potential(x), rtol=1e-10, atol=1e-10,
            )

    def test_shape_invariance(self):
        oscillator = example('shifted-oscillator')
        residual, shape_constant = oscillator.shape_invariance_residual(
            np.linspace(-3, 3, 13),
        )
        assert shape_constant == pytest.approx(2)
        assert np.max(residual) <= 1e-12

        radial = example('3d-oscillator')
        residual, shape_constant = radial.shape_invariance_residual(1.3)
        assert shape_constant == pytest.approx(4)
        assert residual <= 1e-12

        for spec in specs():
            report = spec.shape_invariance_report()
            assert report.passed, spec
            assert report.shape_constant == pytest.approx(
                float(spec.shape_constant()), rel=1e-10,
            )

    def test_energies(self):
        oscillator = example('shifted-oscillator')
        assert oscillator.energy(3, LEVEL_PARTNER_1) == 6
        assert oscillator.energy(3, LEVEL_PARTNER_2) == 8
        scarf = example('scarf2')
        assert scarf.energy(1, LEVEL_PARTNER_1) == 3
        for spec in specs():
            assert spec.energy(0) == 0
        with pytest.raises(ParameterDomainError):
            oscillator.energy(-1)
        with pytest.raises(ParameterDomainError):
            oscillator.energy(1, 3)

    def test_energy_identity(self):
        for spec in specs():
            for n in range(11):
                assert spec.energy_identity_holds(n), (spec, n)
        odd = build_spec('scarf1', A=0.1, alpha=0.3)
        assert all(odd.energy_identity_holds(n) for n in range(11))

    def test_shifted_parameters(self):
        assert build_spec('scarf2', A=3.0, alpha=1.0).shifted().params \
            == {'A': 2.0, 'alpha': 1.0}
        assert build_spec('scarf1', A=3.0, alpha=1.0).shifted().params \
            == {'A': 4.0, 'alpha': 1.0}
        assert build_spec('3d-oscillator', s=1.0, l=0.0).shifted().params \
            == {'s': 1.0, 'l': 1.0}
        shifted = build_spec(
            'poschl-teller', A=2.0, B=3.0, alpha=1.0,
        ).shifted()
        assert shifted.params == {'A': 3.0, 'B': 4.0, 'alpha': 1.0}

    def test_partner_intertwining(self):
        for spec in specs():
            for n in range(3):
                report = spec.partner_intertwining(n)
                assert report.passed, (spec, n, report)
                assert report.lowering * report.raising == pytest.approx(
                    float(spec.energy_level(n + 1)), rel=1e-7,
                )

    def test_grid_avoids_poles(self):
        spec = build_spec('poschl-teller', **POTENTIAL_PARAMS['poschl-teller'])
        grid = spec.grid(101)
        assert np.all(np.abs(grid) > 1e-6)
        assert np.all(np.abs(grid) < math.pi / 2)
        assert np.allclose(np.sort(grid), np.sort(-grid))

import math

import numpy as np
import pytest

from dunklsusy.constants import LEVEL_PARTNER_1
from dunklsusy.constants import PARITY_EVEN
from dunklsusy.constants import PARITY_ODD
from dunklsusy.errors import ParameterDomainError
from dunklsusy.errors import UnsupportedKindError
from dunklsusy.operators.dunkl_operator import eigencheck
from dunklsusy.operators.dunkl_operator import restricted_hamiltonian
from dunklsusy.potentials.catalog import build_spec

from tests.constants import POTENTIAL_PARAMS


def specs():
    return [build_spec(name, **p) for name, p in POTENTIAL_PARAMS.items()]


class TestWavefunctions():

    def test_oscillator_ground_state(self):
        spec = build_spec('shifted-oscillator', s=1)
        x = np.array([-1.5, 0.0, 0.8])
        np.testing.assert_allclose(
            spec.wavefunction(0, LEVEL_PARTNER_1, x), np.exp(-x ** 2 / 2),
        )

    def test_scarf1_ground_state(self):
        spec = build_spec('scarf1', A=1, alpha=1)
        assert spec.wavefunction(0, LEVEL_PARTNER_1, 0.0) == 1

    def test_radial_wavefunction(self):
        spec = build_spec('3d-oscillator', s=1, l=0)
        assert spec.wavefunction(1, LEVEL_PARTNER_1, 1.0) == pytest.approx(
            math.exp(-0.5) * 0.5,
        )
        with pytest.raises(ParameterDomainError):
            spec.wavefunction(1, LEVEL_PARTNER_1, -1.0)

    def test_domain(self):
        spec = build_spec('scarf1', A=2, alpha=1)
        with pytest.raises(ParameterDomainError):
            spec.wavefunction(0, LEVEL_PARTNER_1, 2.0)

    def test_parity(self):
        spec = build_spec('scarf1', A=2, alpha=1)
        assert spec.wavefunction_function(2).parity == PARITY_EVEN
        assert spec.wavefunction_function(3).parity == PARITY_ODD
        x = np.array([0.3, 0.9, 1.2])
        np.testing.assert_allclose(
            spec.wavefunction(3, LEVEL_PARTNER_1, -x),
            -spec.wavefunction(3, LEVEL_PARTNER_1, x),
        )

    def test_ground_state_is_annihilated(self):
        for spec in specs():
            report = spec.intertwining_check(0)
            assert report.passed, spec

    def test_analytic_derivatives(self):
        h = 1e-6
        for spec in specs():
            r = spec.reference_point()
            for n in range(3):
                function = spec.wavefunction_function(n).function
                numeric = (
                    function.value(r + h) - function.value(r - h)
                ) / (2 * h)
                assert function.derivative(r) == pytest.approx(
                    numeric, rel=1e-5, abs=1e-8,
                ), (spec, n)

    def test_ground_factor_solves_superpotential(self):
        for spec in specs():
            ground = spec.wavefunction_function(0)
            r = spec.reference_point()
            assert ground.derivative(r) == pytest.approx(
                -spec.superpotential_value(r) * ground(r), rel=1e-12,
            )


class TestDoubledFunctions():

    def test_parity_of_blocks(self):
        spec = build_spec('3d-oscillator', s=1, l=0)
        x = np.array([0.4, 1.1, 2.0])
        np.testing.assert_allclose(
            spec.doubled_wavefunction(2, -x), spec.doubled_wavefunction(2, x),
        )
        np.testing.assert_allclose(
            spec.doubled_wavefunction(1, x),
            spec.wavefunction(0, LEVEL_PARTNER_1, x),
        )
        np.testing.assert_allclose(
            spec.doubled_wavefunction(1, -x),
            -spec.wavefunction(0, LEVEL_PARTNER_1, x),
        )

    def test_whole_line_specs_are_not_doubled(self):
        spec = build_spec('shifted-oscillator', s=1)
        with pytest.raises(UnsupportedKindError):
            spec.doubled_function(1)


class TestEigenfunctions():

    def test_coefficients(self):
        oscillator = build_spec('shifted-oscillator', s=1)
        radial = build_spec('3d-oscillator', s=1, l=0)
        for n in range(1, 6):
            assert oscillator.table_coefficient(n) == pytest.approx(
                2 * math.sqrt(n),
            )
            assert radial.table_coefficient(n) == pytest.approx(
                -1 / math.sqrt(n),
            )
        with pytest.raises(ParameterDomainError):
            build_spec('scarf2', A=2, alpha=1).table_coefficient(2)

    def test_eigenvalues(self):
        oscillator = build_spec('shifted-oscillator', s=1)
        assert oscillator.eigenvalue(1) == 2
        assert oscillator.eigenvalue(-1) == -2
        assert oscillator.eigenfunction(0)[1] == 0

    def test_coefficient_consistency(self):
        for spec in specs():
            for n in range(1, 4):
                assert spec.coefficient_consistent(n), (spec, n)

    def test_intertwining(self):
        for spec in specs():
            for n in range(1, 4):
                report = spec.intertwining_check(n)
                assert report.passed, (spec, report)
        oscillator = build_spec('shifted-oscillator', s=1)
        report = oscillator.intertwining_check(1)
        assert report.ratio == pytest.approx(
            oscillator.table_coefficient(1) * 2,
        )

    def test_L_eigenfunctions(self):
        for spec in specs():
            for n in range(-5, 6):
                assert spec.eigen_residual(n) <= 1e-7, (spec, n)

    def test_Y_eigenfunctions(self):
        for spec in specs():
            for n in range(-3, 4):
                report = eigencheck(spec, n)
                assert report.passed, (spec, report)
                assert report.eigenvalue == spec.eigenvalue(n)

    def test_restricted_hamiltonian(self):
        for spec in specs():
            function, _ = spec.eigenfunction(2)
            even, odd = restricted_hamiltonian(
                spec.superpotential(), function, spec.grid(60),
            )
            assert even <= 1e-6
            assert odd <= 1e-6

    def test_assembly_needs_positive_index(self):
        with pytest.raises(ParameterDomainError):
            build_spec('shifted-oscillator', s=1).assemble_L_eigenfunctions(0)

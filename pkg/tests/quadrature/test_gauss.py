import math

import mpmath
import numpy as np
import pytest
from scipy import special

from dunklsusy.errors import ParameterDomainError
from dunklsusy.errors import PositivityError
from dunklsusy.polynomials.classical import ClassicalKind
from dunklsusy.polynomials.symmetric import MonicSymmetricSystem
from dunklsusy.polynomials.symmetric import WeightDescriptor
from dunklsusy.polynomials.symmetric import generalized_hermite_system
from dunklsusy.polynomials.symmetric import hermite_system
from dunklsusy.polynomials.symmetric import symmetric_jacobi_system
from dunklsusy.quadrature.gauss import RecurrenceCoefficients
from dunklsusy.quadrature.gauss import classical_gauss_rule
from dunklsusy.quadrature.gauss import classical_recurrence
from dunklsusy.quadrature.gauss import gauss_rule
from dunklsusy.quadrature.gauss import oracle_inner_product

from tests.constants import SQRT_PI


class TestGaussRule():

    def test_single_point(self):
        rule = gauss_rule(hermite_system(), 1)
        assert list(rule.nodes) == [0]
        assert rule.weights[0] == pytest.approx(SQRT_PI)

    def test_two_points(self):
        rule = gauss_rule(hermite_system(), 2)
        np.testing.assert_allclose(
            rule.nodes, [-1 / math.sqrt(2), 1 / math.sqrt(2)], rtol=1e-14,
        )
        np.testing.assert_allclose(rule.weights, [SQRT_PI / 2] * 2)

    def test_weights_sum_to_mass(self):
        for system in (
            hermite_system(),
            hermite_system(2.5),
            generalized_hermite_system(1, 0.5),
            symmetric_jacobi_system(1.5),
        ):
            for order in (1, 4, 9):
                rule = gauss_rule(system, order)
                assert np.sum(rule.weights) == pytest.approx(
                    system.k0, rel=1e-12,
                )
                assert np.all(np.diff(rule.nodes) > 0)
                np.testing.assert_array_equal(rule.nodes, -rule.nodes[::-1])

    def test_exactness_on_monomials(self):
        order = 6
        hermite = gauss_rule(hermite_system(), order)
        generalized = gauss_rule(generalized_hermite_system(1, 0.5), order)
        jacobi = gauss_rule(symmetric_jacobi_system(0.5), order)
        for j in range(0, 2 * order, 2):
            assert hermite.integrate(lambda x: x ** j) == pytest.approx(
                special.gamma((j + 1) / 2), rel=1e-11,
            )
            assert generalized.integrate(lambda x: x ** j) == pytest.approx(
                special.gamma((j + 3) / 2), rel=1e-11,
            )
            assert jacobi.integrate(lambda x: x ** j) == pytest.approx(
                special.beta((j + 1) / 2, 1.5), rel=1e-11,
            )
        for j in range(1, 2 * order, 2):
            assert hermite.integrate(lambda x: x ** j) \
                == pytest.approx(0, abs=1e-12)

    def test_scaled_rule(self):
        unit = gauss_rule(hermite_system(), 5)
        scaled = gauss_rule(hermite_system(2), 5)
        np.testing.assert_allclose(scaled.nodes, unit.nodes / 2)
        np.testing.assert_allclose(scaled.weights, unit.weights / 2)
        assert scaled.integrate(lambda x: x ** 2) == pytest.approx(
            SQRT_PI / 16,
        )

    def test_recurrence_coefficients_source(self):
        coefficients = RecurrenceCoefficients([0, 0, 0], [0.5, 1.0], SQRT_PI)
        rule = gauss_rule(coefficients, 3)
        np.testing.assert_allclose(
            rule.nodes, gauss_rule(hermite_system(), 3).nodes, atol=1e-13,
        )
        assert rule.weight_descriptor is None

    def test_errors(self):
        with pytest.raises(ParameterDomainError):
            gauss_rule(hermite_system(), 0)
        with pytest.raises(ParameterDomainError):
            gauss_rule('hermite', 3)
        weight = WeightDescriptor((-1, 1), 'custom', function=np.ones_like)
        broken = MonicSymmetricSystem([0, 0.5, -0.5], 1.0, weight, 'broken')
        with pytest.raises(PositivityError):
            gauss_rule(broken, 3)


class TestClassicalRules():

    def test_gauss_laguerre(self):
        rule = classical_gauss_rule(ClassicalKind.laguerre(0), 2)
        np.testing.assert_allclose(
            rule.nodes, [2 - math.sqrt(2), 2 + math.sqrt(2)],
        )
        assert np.sum(rule.weights) == pytest.approx(1)
        assert rule.integrate(lambda x: x ** 3) == pytest.approx(6)

    def test_gauss_legendre(self):
        rule = classical_gauss_rule(ClassicalKind.jacobi(0, 0), 2)
        np.testing.assert_allclose(
            rule.nodes, [-1 / math.sqrt(3), 1 / math.sqrt(3)],
        )
        np.testing.assert_allclose(rule.weights, [1, 1])

    def test_gauss_jacobi_moments(self):
        alpha, beta = 0.5, -0.25
        rule = classical_gauss_rule(ClassicalKind.jacobi(alpha, beta), 5)
        with mpmath.workdps(30):
            for j in range(10):
                expected = mpmath.quad(
                    lambda t: t ** j * (1 - t) ** alpha * (1 + t) ** beta,
                    [-1, 0, 1],
                )
                assert rule.integrate(lambda x: x ** j) == pytest.approx(
                    float(expected), rel=1e-11, abs=1e-13,
                )

    def test_gauss_hermite(self):
        rule = classical_gauss_rule(ClassicalKind.hermite(), 4)
        np.testing.assert_allclose(
            rule.nodes, gauss_rule(hermite_system(), 4).nodes,
        )
        assert rule.weight_descriptor == ClassicalKind.hermite()

    def test_formal_kinds_have_no_rule(self):
        with pytest.raises(ParameterDomainError):
            classical_recurrence(ClassicalKind.jacobi(-3, -3, formal=True), 3)


class TestOracle():

    def test_oracle_inner_product(self):
        weight = hermite_system().weight
        assert oracle_inner_product(weight, lambda t: 1, lambda t: 1) \
            == pytest.approx(SQRT_PI, rel=1e-14)
        assert oracle_inner_product(weight, lambda t: t, lambda t: t) \
            == pytest.approx(SQRT_PI / 2, rel=1e-14)

    def test_oracle_matches_generalized_hermite_norms(self):
        system = generalized_hermite_system(1, 0.5)
        assert oracle_inner_product(
            system.weight, lambda t: 1, lambda t: 1,
        ) == pytest.approx(system.k0, rel=1e-12)
        assert oracle_inner_product(
            system.weight, lambda t: t, lambda t: t,
        ) == pytest.approx(system.gamma(2) * system.k0, rel=1e-12)

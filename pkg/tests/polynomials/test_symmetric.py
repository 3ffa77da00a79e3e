import itertools
import math

import pytest
import sympy

from dunklsusy.errors import CoefficientSupplyError
from dunklsusy.errors import ParameterDomainError
from dunklsusy.errors import PositivityError
from dunklsusy.polynomials.classical import ClassicalKind
from dunklsusy.polynomials.classical import eval_classical
from dunklsusy.polynomials.symmetric import MonicSymmetricSystem
from dunklsusy.polynomials.symmetric import WeightDescriptor
from dunklsusy.polynomials.symmetric import coeffs_symmetric
from dunklsusy.polynomials.symmetric import eval_symmetric
from dunklsusy.polynomials.symmetric import from_classical
from dunklsusy.polynomials.symmetric import generalized_hermite_system
from dunklsusy.polynomials.symmetric import hermite_system
from dunklsusy.polynomials.symmetric import norms
from dunklsusy.polynomials.symmetric import symmetric_jacobi_system

from tests.constants import GRID
from tests.constants import SQRT_PI

CUSTOM_WEIGHT = WeightDescriptor(
    (-1, 1), 'custom', function=lambda x: 1 + 0 * x,
)


class TestSymmetric():

    def test_eval_symmetric(self):
        system = hermite_system()
        assert eval_symmetric(system, 0, 2.5) == 1
        assert eval_symmetric(system, 1, 0.3) == 0.3
        assert eval_symmetric(system, 2, 1.0) == 0.5

    def test_coeffs_symmetric(self):
        system = hermite_system()
        assert coeffs_symmetric(system, 3).coefficients == (0, -1.5, 0, 1)
        assert coeffs_symmetric(system, 4).coefficients == (
            0.75, 0, -3, 0, 1,
        )

    def test_monic_hermite_matches_classical(self):
        system = hermite_system()
        for n in range(8):
            for x in GRID:
                assert eval_symmetric(system, n, x) == pytest.approx(
                    eval_classical(ClassicalKind.hermite(), n, x) / 2 ** n,
                    abs=1e-12,
                )

    def test_norms(self):
        system = hermite_system()
        k = norms(system, 2)
        assert k[0] == pytest.approx(SQRT_PI)
        assert k[1] == pytest.approx(SQRT_PI / 2)
        assert k[2] == pytest.approx(SQRT_PI / 2)
        assert norms(system, 0) == [system.k0]

    def test_scaled_hermite(self):
        system = hermite_system(2)
        for m in range(2, 10):
            assert system.gamma(m) == pytest.approx((m - 1) / 8)
        assert system.k0 == pytest.approx(SQRT_PI / 2)
        assert system.unit_system().gamma(3) == 1.0
        assert system.unit_system().k0 == pytest.approx(SQRT_PI)

    def test_generalized_hermite_reduces_to_hermite(self):
        generalized = generalized_hermite_system(1, -0.5)
        hermite = hermite_system(1)
        for m in range(1, 20):
            assert generalized.gamma(m) == hermite.gamma(m)
        assert generalized.k0 == pytest.approx(hermite.k0)

    def test_generalized_hermite_even_members_are_laguerre(self):
        alpha = 0.5
        system = generalized_hermite_system(1, alpha)
        kind = ClassicalKind.laguerre(alpha)
        odd_kind = ClassicalKind.laguerre(alpha + 1)
        for k in range(4):
            scale = (-1) ** k * math.factorial(k)
            for x in GRID:
                assert eval_symmetric(system, 2 * k, x) == pytest.approx(
                    scale * eval_classical(kind, k, x * x), abs=1e-10,
                )
                assert eval_symmetric(system, 2 * k + 1, x) \
                    == pytest.approx(
                        scale * x * eval_classical(odd_kind, k, x * x),
                        abs=1e-10,
                    )

    def test_symmetric_jacobi_is_legendre_at_zero(self):
        system = symmetric_jacobi_system(0)
        assert system.k0 == pytest.approx(2)
        assert eval_symmetric(system, 2, 0.5) == pytest.approx(0.25 - 1 / 3)

    def test_exact_systems(self):
        system = hermite_system(1, exact=True)
        assert system.is_exact()
        assert coeffs_symmetric(system, 2).coefficients == (
            sympy.Rational(-1, 2), 0, 1,
        )
        jacobi = symmetric_jacobi_system(sympy.Rational(1, 2), exact=True)
        assert sympy.simplify(jacobi.k0 - sympy.pi / 2) == 0

    def test_from_classical(self):
        assert from_classical(ClassicalKind.hermite()).name == 'hermite'
        assert from_classical(ClassicalKind.laguerre(0.5)).name \
            == 'generalized-hermite'
        assert from_classical(ClassicalKind.jacobi(0.5, 0.5)).name \
            == 'symmetric-jacobi'
        with pytest.raises(ParameterDomainError):
            from_classical(ClassicalKind.jacobi(0.5, 1.5))
        with pytest.raises(ParameterDomainError):
            from_classical(ClassicalKind.jacobi(0.5, 0.5), s=2)

    def test_coefficient_supply(self):
        listed = MonicSymmetricSystem([0, 0.5, 1.0], 1.0, CUSTOM_WEIGHT, 'l')
        assert eval_symmetric(listed, 3, 1.0) == pytest.approx(-0.5)
        with pytest.raises(CoefficientSupplyError):
            eval_symmetric(listed, 4, 1.0)

        streamed = MonicSymmetricSystem(
            (0.5 * m for m in itertools.count()), 1.0, CUSTOM_WEIGHT, 's',
        )
        assert streamed.gamma(5) == 2.0
        assert streamed.gamma(2) == 0.5

        finite = MonicSymmetricSystem(iter([0, 0.5]), 1.0, CUSTOM_WEIGHT, 'f')
        with pytest.raises(CoefficientSupplyError):
            finite.gamma(3)

    def test_positivity(self):
        system = MonicSymmetricSystem([0, 0.5, -1.0], 1.0, CUSTOM_WEIGHT, 'p')
        with pytest.raises(PositivityError):
            eval_symmetric(system, 3, 0.2)
        with pytest.raises(PositivityError):
            MonicSymmetricSystem([0, 1], 0, CUSTOM_WEIGHT, 'z')

    def test_weight_descriptor(self):
        with pytest.raises(ParameterDomainError):
            WeightDescriptor((-1, 2), 'custom', function=abs)
        with pytest.raises(ParameterDomainError):
            WeightDescriptor((-1, 1), 'custom')
        assert CUSTOM_WEIGHT.half_width == 1
        weight = hermite_system(2).weight
        assert weight.density(0.5) == pytest.approx(math.exp(-1))
        with pytest.raises(ParameterDomainError):
            generalized_hermite_system(1, -1)

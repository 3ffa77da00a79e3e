"""Dense polynomials in the monomial basis."""

import numpy as np


def _trim(coefficients):
    coefficients = list(coefficients)
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


class DensePolynomial(object):
    """Immutable polynomial c_0 + c_1 x + ... + c_d x^d.

    Coefficients may be floats, complex numbers, Fractions or sympy numbers;
    arithmetic uses only the scalar operators so exact inputs stay exact.
    The highest stored coefficient is never zero; the zero polynomial has an
    empty coefficient tuple.
    """

    __slots__ = ('_coefficients',)

    def __init__(self, coefficients=()):
        self._coefficients = _trim(coefficients)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def monomial(cls, degree, coefficient=1):
        return cls((0,) * degree + (coefficient,))

    @property
    def coefficients(self):
        return self._coefficients

    @property
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coefficients) - 1

    def is_zero(self):
        return not self._coefficients

    def __len__(self):
        return len(self._coefficients)

    def __getitem__(self, i):
        if 0 <= i < len(self._coefficients):
            return self._coefficients[i]
        return 0

    def __iter__(self):
        return iter(self._coefficients)

    def __eq__(self, other):
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._coefficients)

    def __repr__(self):
        return 'DensePolynomial({})'.format(list(self._coefficients))

    def __call__(self, x):
        """Evaluate by Horner's scheme; x may be a scalar or numpy array."""
        result = 0
        for c in reversed(self._coefficients):
            result = result * x + c
        return result

    def evaluate_abs(self, x):
        """Sum of |c_i| |x|^i, the natural scale of evaluation roundoff."""
        result = 0
        ax = abs(x)
        for c in reversed(self._coefficients):
            result = result * ax + abs(c)
        return result

    # ============ Arithmetic ============

    def __neg__(self):
        return DensePolynomial(-c for c in self._coefficients)

    def __add__(self, other):
        other = _coerce(other)
        size = max(len(self), len(other))
        return DensePolynomial(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        size = max(len(self), len(other))
        return DensePolynomial(self[i] - other[i] for i in range(size))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, DensePolynomial):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return DensePolynomial.zero()
        product = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self._coefficients):
            for j, b in enumerate(other._coefficients):
                product[i + j] = product[i + j] + a * b
        return DensePolynomial(product)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, divisor):
        return DensePolynomial(c / divisor for c in self._coefficients)

    def scale(self, factor):
        return DensePolynomial(factor * c for c in self._coefficients)

    def map(self, function):
        """Apply function to every coefficient, e.g. sympy.expand."""
        return DensePolynomial(function(c) for c in self._coefficients)

    # ============ Structure ============

    def multiply_by_x(self, times=1):
        if self.is_zero():
            return self
        return DensePolynomial((0,) * times + self._coefficients)

    def divide_by_x(self):
        """Exact division by x; the constant term must vanish."""
        if self[0] != 0:
            raise ValueError(
                'Constant term {} is nonzero, x does not divide {}'.format(
                    self[0], self,
                ),
            )
        return DensePolynomial(self._coefficients[1:])

    def derivative(self):
        return DensePolynomial(
            i * c for i, c in enumerate(self._coefficients) if i > 0
        )

    def reflect(self):
        """The polynomial p(-x)."""
        return DensePolynomial(
            -c if i % 2 else c for i, c in enumerate(self._coefficients)
        )

    def even_part(self):
        return DensePolynomial(
            0 if i % 2 else c for i, c in enumerate(self._coefficients)
        )

    def odd_part(self):
        return DensePolynomial(
            c if i % 2 else 0 for i, c in enumerate(self._coefficients)
        )

    def leading_coefficient(self):
        if self.is_zero():
            return 0
        return self._coefficients[-1]

    # ============ Comparison ============

    def relative_difference(self, other):
        """max|c_i - d_i| relative to the largest coefficient of other."""
        other = _coerce(other)
        size = max(len(self), len(other), 1)
        mine = np.zeros(size, dtype=complex)
        theirs = np.zeros(size, dtype=complex)
        mine[:len(self)] = [complex(c) for c in self._coefficients]
        theirs[:len(other)] = [complex(c) for c in other.coefficients]
        scale = max(np.max(np.abs(theirs)), np.max(np.abs(mine)))
        if scale == 0:
            return 0.0
        return float(np.max(np.abs(mine - theirs)) / scale)

    def allclose(self, other, rtol=1e-11):
        return self.relative_difference(other) <= rtol


def _coerce(value):
    if isinstance(value, DensePolynomial):
        return value
    return DensePolynomial((value,))

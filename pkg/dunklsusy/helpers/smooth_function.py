from collections import namedtuple

import numpy as np

from dunklsusy.constants import FINITE_DIFFERENCE_STEP
from dunklsusy.constants import IMAGINARY_PART_TOLERANCE
from dunklsusy.errors import NumericalError

SmoothFunction = namedtuple(
    'SmoothFunction',
    [
        'value',
        'derivative',
        'second_derivative',
    ],
)
SmoothFunction.__new__.__defaults__ = (None, None)


def as_smooth_function(f):
    """Wrap a plain callable; derivatives then come from finite differences."""
    if isinstance(f, SmoothFunction):
        return f
    return SmoothFunction(f)


def central_difference(f, x):
    """Central difference with step 1e-6 * max(1, |x|)."""
    h = FINITE_DIFFERENCE_STEP * np.maximum(1.0, np.abs(x))
    return (f(x + h) - f(x - h)) / (2.0 * h)


def first_derivative(f, x):
    f = as_smooth_function(f)
    if f.derivative is not None:
        return f.derivative(x)
    return central_difference(f.value, x)


def second_derivative(f, x):
    f = as_smooth_function(f)
    if f.second_derivative is not None:
        return f.second_derivative(x)
    if f.derivative is not None:
        return central_difference(f.derivative, x)
    raise NumericalError(
        'A second derivative requires at least an analytic first derivative',
    )


def linear_combination(terms):
    """Combine [(coefficient, SmoothFunction), ...] into one SmoothFunction.

    Derivatives are carried only when every term carries them.
    """
    terms = list(terms)

    def combine(attribute):
        parts = [(c, getattr(f, attribute)) for c, f in terms]
        if any(part is None for _, part in parts):
            return None
        return lambda x: sum(c * part(x) for c, part in parts)

    return SmoothFunction(
        combine('value'),
        combine('derivative'),
        combine('second_derivative'),
    )


def reflected(f):
    """The function x -> f(-x) with its derivatives."""
    f = as_smooth_function(f)
    derivative = None
    second = None
    if f.derivative is not None:
        derivative = lambda x: -f.derivative(-x)  # noqa: E731
    if f.second_derivative is not None:
        second = lambda x: f.second_derivative(-x)  # noqa: E731
    return SmoothFunction(lambda x: f.value(-x), derivative, second)


def realify(values, tolerance=IMAGINARY_PART_TOLERANCE):
    """Drop an imaginary part that is negligible relative to the magnitude."""
    if not np.iscomplexobj(values):
        return values
    magnitude = np.max(np.abs(values))
    if magnitude == 0:
        return np.real(values)
    imaginary = np.max(np.abs(np.imag(values)))
    if imaginary > tolerance * magnitude:
        raise NumericalError(
            'Imaginary part {} exceeds {} relative to magnitude {}'.format(
                imaginary, tolerance, magnitude,
            ),
        )
    return np.real(values)

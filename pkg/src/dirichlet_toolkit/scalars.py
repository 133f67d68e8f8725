"""Coefficient scalars: exact Gaussian rationals and float complexes.

A series carries a scalar mode, either ``"exact"`` (arbitrary-precision
rational real and imaginary parts) or ``"float"`` (machine complex).
Modes never mix within one series.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ModeMismatchError

EXACT = "exact"
FLOAT = "float"

_MODES = (EXACT, FLOAT)


class ExactComplex:
    """Complex number with Fraction real and imaginary parts.

    Closed under +, -, *, / and integer powers; hashable and immutable.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("ExactComplex is immutable")

    @classmethod
    def coerce(cls, value) -> "ExactComplex":
        if isinstance(value, ExactComplex):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        if isinstance(value, str):
            return cls(Fraction(value))
        if isinstance(value, tuple) and len(value) == 2:
            return cls(Fraction(value[0]), Fraction(value[1]))
        raise TypeError(f"cannot coerce {value!r} to an exact complex scalar")

    def __add__(self, other):
        other = ExactComplex.coerce(other)
        return ExactComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = ExactComplex.coerce(other)
        return ExactComplex(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ExactComplex(-self.re, -self.im)

    def __mul__(self, other):
        other = ExactComplex.coerce(other)
        return ExactComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ExactComplex.coerce(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        return ExactComplex(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("only integer powers are exact")
        if k < 0:
            return ExactComplex(1) / self ** (-k)
        out = ExactComplex(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactComplex(other)
        if not isinstance(other, ExactComplex):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conjugate(self) -> "ExactComplex":
        return ExactComplex(self.re, -self.im)

    def abs_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.hypot(float(self.re), float(self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ExactComplex({self.re!s}, {self.im!s})"


def check_mode(mode: str) -> str:
    if mode not in _MODES:
        raise ValueError(f"unknown scalar mode {mode!r}")
    return mode


def require_same_mode(mode_a: str, mode_b: str) -> str:
    if mode_a != mode_b:
        raise ModeMismatchError(f"scalar modes differ: {mode_a!r} vs {mode_b!r}")
    return mode_a


def zero(mode: str):
    return ExactComplex() if mode == EXACT else 0j


def one(mode: str):
    return ExactComplex(1) if mode == EXACT else 1 + 0j


def coerce(value, mode: str):
    """Coerce a Python value into the scalar domain of the given mode."""
    if mode == EXACT:
        return ExactComplex.coerce(value)
    if isinstance(value, ExactComplex):
        return complex(value)
    return complex(value)


def is_zero(value) -> bool:
    if isinstance(value, ExactComplex):
        return not value
    return value == 0


def to_complex(value) -> complex:
    if isinstance(value, ExactComplex):
        return complex(value)
    return complex(value)


def scalar_to_json(value):
    if isinstance(value, ExactComplex):
        return [str(value.re), str(value.im)]
    value = complex(value)
    return [value.real, value.imag]


def scalar_from_json(pair, mode: str):
    re, im = pair
    if mode == EXACT:
        return ExactComplex(Fraction(re), Fraction(im))
    return complex(float(re), float(im))

"""
Exact Arithmetic
================
Rationals, Gaussian rationals and exact phase comparison on the half-plane

    H = {r * exp(i*pi*phi) : r > 0, 0 < phi <= 1}

All central charges in this package are Gaussian rationals, so every sign
decision (phase order, wall membership, boundary position) is made without
floating point. Floats only appear in the ``*_approx`` helpers and in reports.
"""
from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .errors import InvariantError

Rational = Fraction
RationalLike = Union[int, Fraction, str]


class Ordering(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class Sign(str, Enum):
    NEGATIVE = "negative"
    ZERO = "zero"
    POSITIVE = "positive"


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a canonical Fraction.

    Strings may be ``"p/q"``, integers or finite decimals. Floats are refused:
    their binary expansion would silently become the exact value.
    """
    if isinstance(value, bool):
        raise InvariantError("Rational", f"boolean {value!r} is not a rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvariantError("Rational", f"cannot parse {value!r}: {exc}") from None
    raise InvariantError("Rational", f"unsupported value {value!r} of type {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    return str(q)


def sign_of(q: Fraction) -> Sign:
    if q > 0:
        return Sign.POSITIVE
    if q < 0:
        return Sign.NEGATIVE
    return Sign.ZERO


@dataclass(frozen=True, slots=True)
class GaussianRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_rational(self.re))
        object.__setattr__(self, "im", as_rational(self.im))

    @classmethod
    def i(cls) -> GaussianRational:
        return cls(Fraction(0), Fraction(1))

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, numbers.Rational):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, (GaussianRational, numbers.Rational)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, numbers.Rational):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __abs__(self) -> float:
        return math.hypot(float(self.re), float(self.im))

    def in_half_plane(self) -> bool:
        return self.im > 0 or (self.im == 0 and self.re < 0)

    def to_json(self) -> list[str]:
        return [format_rational(self.re), format_rational(self.im)]

    @classmethod
    def from_json(cls, pair) -> GaussianRational:
        if isinstance(pair, GaussianRational):
            return pair
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise InvariantError("GaussianRational", f"expected [re, im], got {pair!r}")
        return cls(as_rational(pair[0]), as_rational(pair[1]))

    def __str__(self) -> str:
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


def cross(z1: GaussianRational, z2: GaussianRational) -> Fraction:
    """Determinant of the 2x2 matrix with columns (Re z1, Im z1), (Re z2, Im z2)."""
    return z1.re * z2.im - z1.im * z2.re


@dataclass(frozen=True, slots=True)
class HalfPlanePoint:
    value: GaussianRational

    def __post_init__(self):
        if not isinstance(self.value, GaussianRational):
            object.__setattr__(self, "value", GaussianRational.from_json(self.value))
        if not self.value.in_half_plane():
            raise InvariantError(
                "HalfPlanePoint",
                f"{self.value} must satisfy im > 0, or im = 0 and re < 0",
            )

    @property
    def on_negative_axis(self) -> bool:
        return self.value.im == 0


def _half_plane(z: HalfPlanePoint | GaussianRational) -> HalfPlanePoint:
    return z if isinstance(z, HalfPlanePoint) else HalfPlanePoint(z)


def phase_compare(z1: HalfPlanePoint | GaussianRational, z2: HalfPlanePoint | GaussianRational) -> Ordering:
    """Order the phases of two points of H exactly."""
    p1, p2 = _half_plane(z1), _half_plane(z2)
    if p1.on_negative_axis and p2.on_negative_axis:
        return Ordering.EQUAL
    if p1.on_negative_axis:
        return Ordering.GREATER
    if p2.on_negative_axis:
        return Ordering.LESS
    det = cross(p1.value, p2.value)
    if det > 0:
        return Ordering.LESS
    if det < 0:
        return Ordering.GREATER
    return Ordering.EQUAL


def phase_approx(z: HalfPlanePoint | GaussianRational) -> float:
    """Float phase arg(z)/pi in (0, 1]."""
    value = _half_plane(z).value
    if value.im == 0:
        return 1.0
    return math.atan2(float(value.im), float(value.re)) / math.pi


@dataclass(frozen=True, slots=True)
class Matrix2:
    """Real 2x2 matrix ((a, b), (c, d)) acting on C = R^2."""

    a: Fraction = Fraction(1)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def identity(cls) -> Matrix2:
        return cls()

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def is_identity(self) -> bool:
        return self == Matrix2.identity()

    def positive(self) -> Matrix2:
        if self.det <= 0:
            raise InvariantError("Matrix2", f"determinant {self.det} must be positive")
        return self

    def act(self, z: GaussianRational) -> GaussianRational:
        return GaussianRational(self.a * z.re + self.b * z.im, self.c * z.re + self.d * z.im)

    def to_json(self) -> list[list[str]]:
        return [[format_rational(self.a), format_rational(self.b)],
                [format_rational(self.c), format_rational(self.d)]]

    @classmethod
    def from_json(cls, rows) -> Matrix2:
        if len(rows) != 2 or any(len(row) != 2 for row in rows):
            raise InvariantError("Matrix2", f"expected [[a, b], [c, d]], got {rows!r}")
        (a, b), (c, d) = rows
        return cls(as_rational(a), as_rational(b), as_rational(c), as_rational(d))

"""
Projection Functors on K-theory
===============================
Images of the semiorthogonal projections lambda_1 and rho_2 on P1 classes,
and the conversions between Chern coordinates and dimension vectors of the
quiver hearts A(k)[j] on P1 and on Sigma_e.

The 4x4 conversion matrices depend on (e, k) and on whether the exceptional
collection is twisted by O(-C0).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

import sympy

from .arith import as_rational, format_rational
from .errors import InvariantError
from .ktheory import ChernVector, P1LineBundle, Surface


class Twist(str, Enum):
    UNTWISTED = "untwisted"
    MINUS_C0 = "minus_c0"


@dataclass(frozen=True, slots=True)
class P1Class:
    rank: Fraction
    deg: Fraction

    def __post_init__(self):
        object.__setattr__(self, "rank", as_rational(self.rank))
        object.__setattr__(self, "deg", as_rational(self.deg))

    def __add__(self, other: P1Class) -> P1Class:
        return P1Class(self.rank + other.rank, self.deg + other.deg)

    def __neg__(self) -> P1Class:
        return P1Class(-self.rank, -self.deg)

    def to_json(self) -> list[str]:
        return [format_rational(self.rank), format_rational(self.deg)]


@dataclass(frozen=True, slots=True)
class DimVector2:
    n0: Fraction
    n1: Fraction

    def __post_init__(self):
        object.__setattr__(self, "n0", as_rational(self.n0))
        object.__setattr__(self, "n1", as_rational(self.n1))

    def to_json(self) -> list[str]:
        return [format_rational(self.n0), format_rational(self.n1)]


@dataclass(frozen=True, slots=True)
class DimVector4:
    m0: Fraction
    m1: Fraction
    m2: Fraction
    m3: Fraction

    def __post_init__(self):
        for name in ("m0", "m1", "m2", "m3"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def of(cls, entries: Sequence) -> DimVector4:
        return cls(*entries)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.m0, self.m1, self.m2, self.m3)

    def to_json(self) -> list[str]:
        return [format_rational(x) for x in self.as_tuple()]


# ============================================================================
# P1 CLASSES
# ============================================================================

def lambda1_class(s: Surface, v: ChernVector) -> P1Class:
    return P1Class(-v.a, -v.ch2 + s.half_e * v.a)


def rho2_class(s: Surface, v: ChernVector) -> P1Class:
    return P1Class(v.a + v.r, v.ch2 + (-s.e * v.a + v.b) + s.half_e * v.a)


def p1_class_of(obj: P1LineBundle) -> P1Class:
    c = P1Class(1, obj.n)
    return c if obj.shift % 2 == 0 else -c


# ============================================================================
# CONVERSION MATRICES
# ============================================================================

E, K = sympy.symbols("e k", integer=True)
_H = E / 2

C_MATRIX = sympy.ImmutableMatrix([[-1, 1], [1 - K, K]])
C_INVERSE = sympy.ImmutableMatrix([[-K, 1], [1 - K, 1]])

# Rows map (rank, degC0, degf, ch2) to [m0, m1, m2, m3].
CHERN_TO_DIM = {
    Twist.UNTWISTED: sympy.ImmutableMatrix([
        [-K, 1, K + _H, -1],
        [1 - K, 1, K - 1 + _H, -1],
        [0, 0, -K - _H, 1],
        [0, 0, 1 - K - _H, 1],
    ]),
    Twist.MINUS_C0: sympy.ImmutableMatrix([
        [0, 0, K + _H, -1],
        [0, 0, K - 1 + _H, -1],
        [-K - E, 1, -K - _H, 1],
        [1 - K - E, 1, 1 - K - _H, 1],
    ]),
}

DIM_TO_CHERN = {
    Twist.UNTWISTED: sympy.ImmutableMatrix([
        [-1, 1, -1, 1],
        [1 - K, K, 1 - K, K],
        [0, 0, -1, 1],
        [0, 0, 1 - K - _H, K + _H],
    ]),
    Twist.MINUS_C0: sympy.ImmutableMatrix([
        [-1, 1, -1, 1],
        [1 - K - E, K + E, 1 - K - E, K + E],
        [1, -1, 0, 0],
        [K - 1 + _H, -K - _H, 0, 0],
    ]),
}


def c_matrix(k: int) -> sympy.ImmutableMatrix:
    """Dimension vector [n0, n1] -> (rank, deg) on P1."""
    return C_MATRIX.subs(K, k)


def c_inverse(k: int) -> sympy.ImmutableMatrix:
    return C_INVERSE.subs(K, k)


def chern_to_dim_matrix(e: int, k: int, twist: Twist) -> sympy.ImmutableMatrix:
    return CHERN_TO_DIM[twist].subs({E: e, K: k})


def dim_to_chern_matrix(e: int, k: int, twist: Twist) -> sympy.ImmutableMatrix:
    return DIM_TO_CHERN[twist].subs({E: e, K: k})


def conversion_is_inverse(twist: Twist) -> bool:
    """Checks the 4x4 pair for symbolic e and k, not a numeric grid."""
    residue = (CHERN_TO_DIM[twist] * DIM_TO_CHERN[twist] - sympy.eye(4)).applyfunc(sympy.expand)
    return residue == sympy.zeros(4, 4)


def _to_sympy(x) -> sympy.Rational:
    x = as_rational(x)
    return sympy.Rational(x.numerator, x.denominator)


def _to_fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def _apply(matrix: sympy.MatrixBase, vector: Sequence) -> tuple[Fraction, ...]:
    product = matrix * sympy.Matrix([_to_sympy(x) for x in vector])
    return tuple(_to_fraction(x) for x in product)


# ============================================================================
# P1 AND SIGMA_E CONVERSIONS
# ============================================================================

def dimvec2_of(k: int, c: P1Class) -> DimVector2:
    return DimVector2(c.deg - k * c.rank, c.deg + (1 - k) * c.rank)


def chern2_of(k: int, d: DimVector2) -> P1Class:
    return P1Class(d.n1 - d.n0, (1 - k) * d.n0 + k * d.n1)


def dimvec4_of(s: Surface, k: int, twist: Twist, c: Sequence) -> DimVector4:
    return DimVector4.of(_apply(chern_to_dim_matrix(s.e, k, twist), c))


def chern4_of(s: Surface, k: int, twist: Twist, m: DimVector4) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    return _apply(dim_to_chern_matrix(s.e, k, twist), m.as_tuple())


# ============================================================================
# HEART MEMBERSHIP
# ============================================================================

def proper_subvectors(m: DimVector4) -> list[DimVector4]:
    """Componentwise-smaller nonzero dimension vectors other than ``m``.

    Only a necessary condition for a subobject: not every vector returned
    is realized by a subrepresentation.
    """
    entries = m.as_tuple()
    if any(x < 0 or x.denominator != 1 for x in entries):
        raise InvariantError("DimVector4.subobject", f"entries of {m.to_json()} must be nonnegative integers")
    bounds = [range(int(x) + 1) for x in entries]
    result = []
    for candidate in itertools.product(*bounds):
        if any(candidate) and candidate != tuple(int(x) for x in entries):
            result.append(DimVector4.of(candidate))
    return result


def p1_heart_contains(k: int, j: int, obj: P1LineBundle) -> bool:
    """Membership of a shifted line bundle in the quiver heart A(k)[j]."""
    return (obj.shift == j + 1 and obj.n <= k - 1) or (obj.shift == j and obj.n >= k)

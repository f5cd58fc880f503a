"""
Numerical K-theory of Hirzebruch Surfaces
=========================================
Chern vectors on Sigma_e in the basis {1, C0, f, pt}, the intersection form
C0^2 = -e, C0.f = 1, f^2 = 0, the Mukai pairing, the catalog of named objects
and the divisorial central charge built from exp(B + i*omega).

Chern vectors are stored as (r, a, b, ch2) with c1 = a*C0 + b*f; the
(rank, degC0, degf, ch2) coordinates are only a view, see ``coords``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Annotated, Iterable, Literal, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter

from .arith import GaussianRational, as_rational, format_rational
from .errors import InvariantError


@dataclass(frozen=True, slots=True)
class Surface:
    e: int

    def __post_init__(self):
        if isinstance(self.e, bool) or not isinstance(self.e, int):
            raise InvariantError("Surface", f"degree e must be an integer, got {self.e!r}")
        if self.e < 0:
            raise InvariantError("Surface", f"degree e must be >= 0, got {self.e}")

    @property
    def half_e(self) -> Fraction:
        return Fraction(self.e, 2)


@dataclass(frozen=True, slots=True)
class ChernVector:
    r: Fraction
    a: Fraction
    b: Fraction
    ch2: Fraction

    def __post_init__(self):
        for name in ("r", "a", "b", "ch2"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def zero(cls) -> ChernVector:
        return cls(0, 0, 0, 0)

    @property
    def c1(self) -> tuple[Fraction, Fraction]:
        return (self.a, self.b)

    def __add__(self, other: ChernVector) -> ChernVector:
        return ChernVector(self.r + other.r, self.a + other.a, self.b + other.b, self.ch2 + other.ch2)

    def __neg__(self) -> ChernVector:
        return ChernVector(-self.r, -self.a, -self.b, -self.ch2)

    def __sub__(self, other: ChernVector) -> ChernVector:
        return self + (-other)

    def scale(self, t) -> ChernVector:
        t = as_rational(t)
        return ChernVector(t * self.r, t * self.a, t * self.b, t * self.ch2)

    def to_json(self) -> dict[str, str]:
        return {
            "r": format_rational(self.r),
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "ch2": format_rational(self.ch2),
        }

    @classmethod
    def from_json(cls, data: dict) -> ChernVector:
        try:
            return cls(*(as_rational(data[key]) for key in ("r", "a", "b", "ch2")))
        except KeyError as exc:
            raise InvariantError("ChernVector", f"missing field {exc.args[0]!r}") from None


# ============================================================================
# NAMED OBJECTS
# ============================================================================

class _Named(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class SkyscraperPoint(_Named):
    tag: Literal["skyscraper_point"] = "skyscraper_point"

    @property
    def label(self) -> str:
        return "O_x"


class Fiber(_Named):
    tag: Literal["fiber"] = "fiber"

    @property
    def label(self) -> str:
        return "O_f"


class FiberTwist(_Named):
    """The shifted twisted fiber sheaf O_f(-C0)[1]."""

    tag: Literal["fiber_twist"] = "fiber_twist"

    @property
    def label(self) -> str:
        return "O_f(-C0)[1]"


class LineBundle(_Named):
    """O(n*C0 + m*f)[shift]."""

    tag: Literal["line_bundle"] = "line_bundle"
    n: int
    m: int
    shift: int = 0

    @property
    def label(self) -> str:
        return f"O({self.n},{self.m})[{self.shift}]"


class P1LineBundle(_Named):
    tag: Literal["p1_line_bundle"] = "p1_line_bundle"
    n: int
    shift: int = 0

    @property
    def label(self) -> str:
        return f"O_P1({self.n})[{self.shift}]"


class DirectSum(_Named):
    tag: Literal["direct_sum"] = "direct_sum"
    summands: tuple["NamedObject", ...] = Field(min_length=1)

    @property
    def label(self) -> str:
        return " + ".join(summand.label for summand in self.summands)


NamedObject = Annotated[
    Union[SkyscraperPoint, Fiber, FiberTwist, LineBundle, P1LineBundle, DirectSum],
    Field(discriminator="tag"),
]

DirectSum.model_rebuild()

_named_object_adapter = TypeAdapter(NamedObject)

SHORTHANDS = {
    "O_x": SkyscraperPoint(),
    "O_f": Fiber(),
    "O_f(-C0)[1]": FiberTwist(),
}


def parse_named_object(data) -> NamedObject:
    """Parse a tagged JSON object or one of the shorthands in ``SHORTHANDS``."""
    if isinstance(data, str) and data in SHORTHANDS:
        return SHORTHANDS[data]
    return _named_object_adapter.validate_python(data)


def named_object_json(obj: NamedObject) -> dict:
    return obj.model_dump(mode="json")


# ============================================================================
# INTERSECTION THEORY
# ============================================================================

def intersect(s: Surface, c, c_prime):
    """Intersection number of a*C0 + b*f with a'*C0 + b'*f.

    The coefficients may be rationals or Gaussian rationals; the form is
    extended bilinearly.
    """
    a, b = c
    a2, b2 = c_prime
    return -s.e * a * a2 + a * b2 + a2 * b


def mukai_pair(s: Surface, v: ChernVector, w: ChernVector) -> Fraction:
    return intersect(s, v.c1, w.c1) - w.r * v.ch2 - v.r * w.ch2


def chern_of(s: Surface, obj: NamedObject) -> ChernVector:
    if isinstance(obj, SkyscraperPoint):
        return ChernVector(0, 0, 0, 1)
    if isinstance(obj, Fiber):
        return ChernVector(0, 0, 1, 0)
    if isinstance(obj, FiberTwist):
        return ChernVector(0, 0, -1, 1)
    if isinstance(obj, LineBundle):
        n, m = Fraction(obj.n), Fraction(obj.m)
        v = ChernVector(1, n, m, n * m - s.half_e * n * n)
        return v if obj.shift % 2 == 0 else -v
    if isinstance(obj, P1LineBundle):
        # pulled back along the projection Sigma_e -> P1
        return chern_of(s, LineBundle(n=0, m=obj.n, shift=obj.shift))
    if isinstance(obj, DirectSum):
        total = ChernVector.zero()
        for summand in obj.summands:
            total = total + chern_of(s, summand)
        return total
    raise InvariantError("NamedObject", f"unknown object {obj!r}")


def coords(s: Surface, v: ChernVector) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(rank, degC0, degf, ch2) coordinates of ``v``."""
    return (v.r, -s.e * v.a + v.b, v.a, v.ch2)


def from_coords(s: Surface, c: Sequence) -> ChernVector:
    rank, deg_c0, deg_f, ch2 = (as_rational(x) for x in c)
    return ChernVector(rank, deg_f, deg_c0 + s.e * deg_f, ch2)


def norm(v: ChernVector) -> Fraction:
    return max(abs(v.r), abs(v.a), abs(v.b), abs(v.ch2))


# ============================================================================
# DIVISORIAL DATA
# ============================================================================

def _complexified(B, omega) -> tuple[GaussianRational, GaussianRational]:
    x, y = (as_rational(t) for t in B)
    z, w = (as_rational(t) for t in omega)
    return GaussianRational(x, z), GaussianRational(y, w)


def exp_divisor(s: Surface, B, omega) -> tuple[GaussianRational, GaussianRational, GaussianRational, GaussianRational]:
    """Components of exp(B + i*omega) along 1, C0, f, pt in closed form."""
    x, y = (as_rational(t) for t in B)
    z, w = (as_rational(t) for t in omega)
    pt = GaussianRational(
        ((z * z - x * x) * s.e + 2 * (x * y - z * w)) / 2,
        y * z + x * w - x * z * s.e,
    )
    return (GaussianRational(1, 0), GaussianRational(x, z), GaussianRational(y, w), pt)


def half_square(s: Surface, B, omega) -> GaussianRational:
    """(B + i*omega)^2 / 2 expanded through the intersection form."""
    d = _complexified(B, omega)
    return intersect(s, d, d) * Fraction(1, 2)


def z_divisorial(s: Surface, B, omega, v: ChernVector) -> GaussianRational:
    """Z_{omega,B}(v) = -(ch2 + c1.(B + i*omega) + r*(B + i*omega)^2/2)."""
    pt = exp_divisor(s, B, omega)[3]
    return -(intersect(s, v.c1, _complexified(B, omega)) + v.r * pt + v.ch2)


def ample_cone_contains(s: Surface, omega) -> bool:
    z, w = (as_rational(t) for t in omega)
    return z > 0 and w > z * s.e


def line_bundle_catalog(bound: int = 3, shifts: Iterable[int] = range(3)) -> list[NamedObject]:
    catalog: list[NamedObject] = [SkyscraperPoint(), Fiber(), FiberTwist()]
    span = range(-bound, bound + 1)
    for shift, n, m in itertools.product(list(shifts), span, span):
        catalog.append(LineBundle(n=n, m=m, shift=shift))
    return catalog

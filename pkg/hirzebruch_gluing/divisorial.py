"""
Divisorial Cone and the pi(sigma) Vector
========================================
pi(sigma) = (xi0, xi1, xi2, xi3) along (1, C0, f, pt) is the vector whose
Mukai pairing with ch(E) reproduces the glued central charge:

    <pi, ch(E)> = (xi1*C0 + xi2*f).c1 - r*xi3 - ch2*xi0

Up to the GL+(2, R) action and a positive scale t, divisorial stability
conditions have pi = exp(B + i*omega), so the cone z > 0, w > z*e is read off
from the 2x2 determinants det(xi0, xi1) and det(xi0, xi2).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .arith import GaussianRational, Matrix2, cross, format_rational
from .gluing import GluingParams, charge_sign, wall_value
from .ktheory import ChernVector, Surface, ample_cone_contains, exp_divisor, intersect

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class PiSigma:
    xi0: GaussianRational
    xi1: GaussianRational
    xi2: GaussianRational
    xi3: GaussianRational

    @classmethod
    def of(cls, components: Sequence[GaussianRational]) -> PiSigma:
        return cls(*components)

    @property
    def components(self) -> tuple[GaussianRational, GaussianRational, GaussianRational, GaussianRational]:
        return (self.xi0, self.xi1, self.xi2, self.xi3)

    def to_json(self) -> list[list[str]]:
        return [xi.to_json() for xi in self.components]


class BoundaryTag(str, Enum):
    INTERIOR = "interior"
    BOUNDARY_Z = "boundary_z"
    VERTEX = "vertex"
    DEGENERATE = "degenerate"


@dataclass(frozen=True, slots=True)
class BoundaryPosition:
    det01: Fraction
    det02: Fraction
    tag: BoundaryTag

    def to_json(self) -> dict:
        return {
            "det01": format_rational(self.det01),
            "det02": format_rational(self.det02),
            "position": self.tag.value,
        }


def pi_mukai(s: Surface, p: PiSigma, v: ChernVector) -> GaussianRational:
    return intersect(s, (p.xi1, p.xi2), v.c1) - p.xi3 * v.r - p.xi0 * v.ch2


def pi_sigma(g: GluingParams) -> PiSigma:
    pi = _pi_default_shifts(g)
    if charge_sign(g) < 0:
        return PiSigma.of([-xi for xi in pi.components])
    return pi


def _pi_default_shifts(g: GluingParams) -> PiSigma:
    h = g.surface.half_e
    i = GaussianRational.i()
    if g.m == 1:
        k, z0, z1 = g.comp2.k, g.comp2.zeta0, g.comp2.zeta1
        return PiSigma(
            1 - z0 - z1,
            z0 + z1,
            h + i + (h - k) * z0 + (h - k + 1) * z1,
            k * z0 - (1 - k) * z1,
        )
    if g.m == 2:
        k, z0, z1 = g.comp1.k, g.comp1.zeta0, g.comp1.zeta1
        return PiSigma(
            1 - z0 - z1,
            GaussianRational(-1, 0),
            -h + i - (h + k) * z0 - (h + k - 1) * z1,
            -i,
        )
    if g.m == 3:
        k, z0, z1 = g.comp1.k, g.comp1.zeta0, g.comp1.zeta1
        kp, w0, w1 = g.comp2.k, g.comp2.zeta0, g.comp2.zeta1
        return PiSigma(
            -(z0 + z1 + w0 + w1),
            w0 + w1,
            -((h + k) * z0 + (h + k - 1) * z1) + (h - kp) * w0 + (h - kp + 1) * w1,
            # the primed twist k' goes with the primed parameters
            kp * w0 + (kp - 1) * w1,
        )
    M = g.M
    return PiSigma(
        GaussianRational(1 - M.a, -M.c),
        GaussianRational(-1, 0),
        GaussianRational(-h * (M.a + 1) - M.b, 1 - M.d - M.c * h),
        -i,
    )


def boundary_position(p: PiSigma | Sequence[GaussianRational], e: int) -> BoundaryPosition:
    xi0, xi1, xi2 = p.components[:3] if isinstance(p, PiSigma) else tuple(p)[:3]
    det01 = cross(xi0, xi1)
    det02 = cross(xi0, xi2)
    if det01 == 0:
        tag = BoundaryTag.VERTEX if det02 == 0 else BoundaryTag.BOUNDARY_Z
    elif (det02 - e * det01) / det01 > 0:
        tag = BoundaryTag.INTERIOR
    else:
        tag = BoundaryTag.DEGENERATE
    return BoundaryPosition(det01, det02, tag)


def vertex_condition_m3(zeta0: GaussianRational, zeta1: GaussianRational, zeta0_prime: GaussianRational) -> Fraction:
    """Vanishes exactly when the m=3 wall meets the vertex of the cone."""
    return cross(zeta0, zeta1) - cross(zeta0 + zeta1, zeta0_prime)


def act_on_pi(p: PiSigma, M: Matrix2) -> PiSigma:
    return PiSigma.of([M.act(xi) for xi in p.components])


def is_exp_image(p: PiSigma, M: Matrix2, s: Surface, B, omega) -> bool:
    """True when pi.M = exp(B + i*omega) with omega in the ample cone."""
    if not ample_cone_contains(s, omega):
        return False
    return act_on_pi(p, M).components == exp_divisor(s, B, omega)


@dataclass(frozen=True, slots=True)
class WallBoundaryReport:
    on_wall: bool
    wall_value: Fraction
    position: BoundaryPosition
    vertex_condition: Fraction | None
    pi: PiSigma
    point_charge_vanishes: bool = False

    def to_json(self) -> dict:
        report = {
            "on_wall": self.on_wall,
            "wall_value": format_rational(self.wall_value),
            **self.position.to_json(),
            "pi_sigma": self.pi.to_json(),
        }
        if self.point_charge_vanishes:
            report["point_charge_vanishes"] = True
        if self.vertex_condition is not None:
            report["vertex_condition"] = format_rational(self.vertex_condition)
        return report


def wall_boundary_report(g: GluingParams) -> WallBoundaryReport:
    value = wall_value(g)
    pi = pi_sigma(g)
    position = boundary_position(pi, g.surface.e)
    vertex = None
    if g.m == 3:
        vertex = vertex_condition_m3(g.comp1.zeta0, g.comp1.zeta1, g.comp2.zeta0)
    logger.debug("m=%d wall_value=%s position=%s", g.m, value, position.tag.value)
    # <pi, ch(O_x)> = -xi0
    vanishes = pi.xi0 == GaussianRational(0, 0)
    if vanishes:
        logger.info("pi(sigma) gives Z(O_x) = 0; the boundary position describes a degenerate charge")
    return WallBoundaryReport(value == 0, value, position, vertex, pi, vanishes)

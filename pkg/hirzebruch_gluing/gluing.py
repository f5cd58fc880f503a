"""
Glued Stability Conditions
==========================
Glued central charges Z_{gl,m} = (-1)^{j1} Z_1(lambda_1 E) + (-1)^{j2} Z_2(rho_2 E),
gluing perversity, the wall W_0, support-property constants and the
Jordan-Holder data of skyscraper sheaves.

Type m fixes which component is standard and which is a quiver stability:

    m=1  comp1 standard, comp2 quiver
    m=2  comp1 quiver,   comp2 standard
    m=3  both quiver
    m=4  both standard

comp1 lives on D_1 (reached through lambda_1), comp2 on D_2 (through rho_2).
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .adjoints import P1Class, dimvec2_of, lambda1_class, rho2_class
from .arith import (
    GaussianRational,
    HalfPlanePoint,
    Matrix2,
    Ordering,
    Sign,
    as_rational,
    cross,
    format_rational,
    phase_approx,
    phase_compare,
)
from .config import DEFAULT_SHIFTS, M4_SUPPORT_FLOOR, settings
from .errors import InvariantError
from .ktheory import (
    ChernVector,
    Fiber,
    FiberTwist,
    LineBundle,
    NamedObject,
    SkyscraperPoint,
    Surface,
    chern_of,
    named_object_json,
    norm,
)

logger = logging.getLogger(__name__)


class StabilityKind(str, Enum):
    STANDARD = "standard"
    QUIVER = "quiver"


class PerIndex(str, Enum):
    ZERO = "zero"
    NONZERO = "nonzero"


class StabilityVerdict(str, Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly_semistable"
    UNSTABLE = "unstable"


_KINDS_BY_TYPE = {
    1: (StabilityKind.STANDARD, StabilityKind.QUIVER),
    2: (StabilityKind.QUIVER, StabilityKind.STANDARD),
    3: (StabilityKind.QUIVER, StabilityKind.QUIVER),
    4: (StabilityKind.STANDARD, StabilityKind.STANDARD),
}


@dataclass(frozen=True, slots=True)
class ComponentStability:
    kind: StabilityKind
    k: int | None = None
    zeta0: GaussianRational | None = None
    zeta1: GaussianRational | None = None

    def __post_init__(self):
        if self.kind is StabilityKind.STANDARD:
            if self.k is not None or self.zeta0 is not None or self.zeta1 is not None:
                raise InvariantError("ComponentStability", "a standard component carries no k or zeta")
            return
        if self.k is None or self.zeta0 is None or self.zeta1 is None:
            raise InvariantError("ComponentStability", "a quiver component needs k, zeta0 and zeta1")
        if isinstance(self.k, bool) or not isinstance(self.k, int):
            raise InvariantError("ComponentStability", f"twist k must be an integer, got {self.k!r}")
        for name in ("zeta0", "zeta1"):
            point = HalfPlanePoint(getattr(self, name))
            object.__setattr__(self, name, point.value)

    @classmethod
    def standard(cls) -> ComponentStability:
        return cls(StabilityKind.STANDARD)

    @classmethod
    def quiver(cls, k: int, zeta0, zeta1) -> ComponentStability:
        return cls(StabilityKind.QUIVER, k, GaussianRational.from_json(zeta0), GaussianRational.from_json(zeta1))

    @property
    def is_quiver(self) -> bool:
        return self.kind is StabilityKind.QUIVER

    @property
    def zeta_sum(self) -> GaussianRational:
        return self.zeta0 + self.zeta1


def gluing_condition_holds(j1: int, j2: int) -> bool:
    """Hom^{<=0} vanishing between the shifted component hearts."""
    return j1 > j2


@dataclass(frozen=True, slots=True)
class GluingParams:
    surface: Surface
    m: int
    comp1: ComponentStability
    comp2: ComponentStability
    shifts: tuple[int, int] = DEFAULT_SHIFTS
    matrix: Matrix2 | None = None

    def __post_init__(self):
        if self.m not in _KINDS_BY_TYPE:
            raise InvariantError("GluingParams.m", f"type m must be one of 1..4, got {self.m!r}")
        expected = _KINDS_BY_TYPE[self.m]
        if (self.comp1.kind, self.comp2.kind) != expected:
            raise InvariantError(
                "GluingParams.m",
                f"type {self.m} needs components ({expected[0].value}, {expected[1].value}), "
                f"got ({self.comp1.kind.value}, {self.comp2.kind.value})",
            )
        j1, j2 = self.shifts
        if not gluing_condition_holds(j1, j2):
            raise InvariantError("GluingParams.shifts", f"gluing condition j1 > j2 fails for {self.shifts}")
        if j1 != j2 + 1:
            raise InvariantError("GluingParams.shifts", f"j1 must equal j2 + 1, got {self.shifts}")
        if self.matrix is not None:
            self.matrix.positive()
            if self.m != 4 and not self.matrix.is_identity():
                raise InvariantError("GluingParams.M", "a matrix M is only meaningful for type m=4")

    @classmethod
    def of_type(
        cls,
        e: int,
        m: int,
        *,
        k: int = 0,
        zeta: Sequence | None = None,
        k_prime: int | None = None,
        zeta_prime: Sequence | None = None,
        shifts: tuple[int, int] = DEFAULT_SHIFTS,
        matrix: Matrix2 | None = None,
    ) -> GluingParams:
        """Assemble parameters the way the JSON schema lists them.

        ``zeta`` belongs to the single quiver component for m=1 and m=2, and
        to comp1 for m=3; ``zeta_prime`` and ``k_prime`` belong to comp2 of m=3.
        """
        def quiver(twist, pair, field):
            if pair is None:
                raise InvariantError(f"GluingParams.{field}", f"type m={m} needs {field}")
            if len(pair) != 2:
                raise InvariantError(f"GluingParams.{field}", f"expected two quiver parameters, got {len(pair)}")
            return ComponentStability.quiver(twist, pair[0], pair[1])

        standard = ComponentStability.standard()
        if m == 1:
            comp1, comp2 = standard, quiver(k, zeta, "zeta")
        elif m == 2:
            comp1, comp2 = quiver(k, zeta, "zeta"), standard
        elif m == 3:
            twist = k if k_prime is None else k_prime
            comp1, comp2 = quiver(k, zeta, "zeta"), quiver(twist, zeta_prime, "zeta_prime")
        elif m == 4:
            comp1, comp2 = standard, standard
        else:
            raise InvariantError("GluingParams.m", f"type m must be one of 1..4, got {m!r}")
        return cls(Surface(e), m, comp1, comp2, tuple(shifts), matrix)

    @property
    def M(self) -> Matrix2:
        return self.matrix if self.matrix is not None else Matrix2.identity()

    @property
    def quiver_components(self) -> list[ComponentStability]:
        return [c for c in (self.comp1, self.comp2) if c.is_quiver]


# ============================================================================
# CENTRAL CHARGES
# ============================================================================

def _shift_sign(j: int) -> int:
    return -1 if j % 2 else 1


def charge_sign(g: GluingParams) -> int:
    """Sign of the glued charge relative to the default shifts (1, 0).

    With j1 = j2 + 1 the two component signs differ, so a shift pair only
    changes the charge by the overall factor (-1)^j2.
    """
    return _shift_sign(g.shifts[1])


def z_standard(p: P1Class) -> GaussianRational:
    return GaussianRational(-p.deg, p.rank)


def z_component(c: ComponentStability, p: P1Class) -> GaussianRational:
    if not c.is_quiver:
        return z_standard(p)
    d = dimvec2_of(c.k, p)
    return c.zeta0 * d.n0 + c.zeta1 * d.n1


def z_glued(g: GluingParams, v: ChernVector) -> GaussianRational:
    j1, j2 = g.shifts
    s = g.surface
    return (_shift_sign(j1) * z_component(g.comp1, lambda1_class(s, v))
            + _shift_sign(j2) * z_component(g.comp2, rho2_class(s, v)))


def z_twisted(g: GluingParams, v: ChernVector) -> GaussianRational:
    """(-1)^j2 (M . Z_st(lambda_1 E) + Z_st(rho_2 E)) for type m=4.

    Its Mukai vector is the matrix-parameterized pi(sigma); the glued charge
    z_glued is the member M = -I.
    """
    if g.m != 4:
        raise InvariantError("GluingParams.M", f"the M-acted charge is defined for m=4, got m={g.m}")
    s = g.surface
    charge = g.M.act(z_standard(lambda1_class(s, v))) + z_standard(rho2_class(s, v))
    return charge_sign(g) * charge


def skyscraper_charges(g: GluingParams) -> tuple[GaussianRational, GaussianRational]:
    """Signed component charges of lambda_1(O_x) and rho_2(O_x)."""
    j1, j2 = g.shifts
    z_lambda = _shift_sign(j1) * z_component(g.comp1, P1Class(0, -1))
    z_rho = _shift_sign(j2) * z_component(g.comp2, P1Class(0, 1))
    return z_lambda, z_rho


# ============================================================================
# PERVERSITY AND WALL
# ============================================================================

@dataclass(frozen=True, slots=True)
class PerversityReport:
    per_sign: Sign
    per_value: float
    per1_sign: PerIndex
    per2_sign: PerIndex
    phase_lambda1: float
    phase_rho2: float

    def to_json(self) -> dict:
        return {
            "per_sign": self.per_sign.value,
            "per_value": self.per_value,
            "per1_sign": self.per1_sign.value,
            "per2_sign": self.per2_sign.value,
            "phase_lambda1": self.phase_lambda1,
            "phase_rho2": self.phase_rho2,
        }


_SIGN_BY_ORDER = {Ordering.GREATER: Sign.POSITIVE, Ordering.EQUAL: Sign.ZERO, Ordering.LESS: Sign.NEGATIVE}


def _heart_charge_of_point(c: ComponentStability) -> GaussianRational:
    return c.zeta_sum if c.is_quiver else GaussianRational(-1, 0)


def _per_index(c: ComponentStability) -> PerIndex:
    if not c.is_quiver:
        return PerIndex.NONZERO
    return PerIndex.ZERO if phase_compare(c.zeta1, c.zeta0) is Ordering.EQUAL else PerIndex.NONZERO


def perversity(g: GluingParams) -> PerversityReport:
    z_lambda = _heart_charge_of_point(g.comp1)
    z_rho = _heart_charge_of_point(g.comp2)
    phase_lambda1 = phase_approx(z_lambda)
    phase_rho2 = phase_approx(z_rho)
    return PerversityReport(
        per_sign=_SIGN_BY_ORDER[phase_compare(z_lambda, z_rho)],
        per_value=phase_lambda1 - phase_rho2,
        per1_sign=_per_index(g.comp1),
        per2_sign=_per_index(g.comp2),
        phase_lambda1=phase_lambda1,
        phase_rho2=phase_rho2,
    )


def wall_value(g: GluingParams) -> Fraction:
    """Cross determinant of the component charges of O_x; zero exactly on W_0."""
    return cross(*skyscraper_charges(g))


# ============================================================================
# SUPPORT PROPERTY
# ============================================================================

@dataclass(frozen=True, slots=True)
class SupportConstant:
    exact: Fraction | None
    theta_zeta: GaussianRational | None
    theta: float | None
    constant: float | None

    def to_json(self) -> dict:
        return {
            "exact": None if self.exact is None else format_rational(self.exact),
            "theta_zeta": None if self.theta_zeta is None else self.theta_zeta.to_json(),
            "theta": self.theta,
            "constant": self.constant,
        }


def support_constant(g: GluingParams) -> SupportConstant:
    if g.m == 4:
        exact = max(Fraction(M4_SUPPORT_FLOOR), 1 + g.surface.half_e)
        return SupportConstant(exact, None, None, float(exact))
    quiver = g.comp1 if g.m == 2 else g.comp2
    z0, z1 = quiver.zeta0, quiver.zeta1
    theta_zeta = z1 if phase_compare(z0, z1) is Ordering.GREATER else z0
    theta = phase_approx(theta_zeta)
    if theta_zeta.im == 0:
        logger.warning("Both quiver parameters lie on the negative real axis; no finite support constant")
        return SupportConstant(None, theta_zeta, theta, None)
    return SupportConstant(None, theta_zeta, theta, 1 / math.sin(math.pi * theta))


def glued_support_constant(g: GluingParams, c1: float = 1.0, c2: float = 1.0) -> float | None:
    """Combine component constants C1, C2 for type m=2 as C1*C' + C2*(1 + C')."""
    if g.m != 2:
        raise InvariantError("GluingParams.m", f"the combined support constant applies to m=2, got m={g.m}")
    c_prime = support_constant(g).constant
    if c_prime is None:
        return None
    return c1 * c_prime + c2 * (1 + c_prime)


@dataclass(frozen=True, slots=True)
class SupportCheck:
    obj: NamedObject
    norm: Fraction
    modulus: float
    passed: bool

    def to_json(self) -> dict:
        return {
            "object": named_object_json(self.obj),
            "norm": format_rational(self.norm),
            "modulus": self.modulus,
            "pass": self.passed,
        }


def check_support_inequality(g: GluingParams, objects: Sequence[NamedObject], C: float) -> list[SupportCheck]:
    if not C > 0:
        raise InvariantError("SupportConstant", f"C must be positive, got {C!r}")
    checks = []
    for obj in objects:
        v = chern_of(g.surface, obj)
        size = norm(v)
        modulus = abs(z_glued(g, v))
        checks.append(SupportCheck(obj, size, modulus, float(size) <= C * modulus + settings.float_tolerance))
    return checks


def m4_degree_bounds(d1, r1, d2, r2) -> tuple[bool, bool]:
    d1, r1, d2, r2 = (as_rational(x) for x in (d1, r1, d2, r2))
    if r1 + r2 <= 0:
        raise InvariantError("M4Decomposition", f"r1 + r2 must be positive, got {r1 + r2}")
    total = abs(d1 + d2)
    return abs(d1) <= total, abs(d2) <= 2 * total


def m4_decompose(s: Surface, v: ChernVector) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(r1, d1, r2, d2) of the two P1 pieces E1, E2 of a class for type m=4."""
    lam = lambda1_class(s, v)
    rho = rho2_class(s, v)
    return -lam.rank, -lam.deg, rho.rank, rho.deg


def m4_slope(s: Surface, v: ChernVector) -> Fraction | None:
    r1, d1, r2, d2 = m4_decompose(s, v)
    if r1 + r2 <= 0:
        return None
    return (d1 + d2) / (r1 + r2)


# ============================================================================
# SKYSCRAPER SHEAVES
# ============================================================================

@dataclass(frozen=True, slots=True)
class JordanHolder:
    verdict: StabilityVerdict
    factors: tuple[NamedObject, ...]

    def chern_sum(self, s: Surface) -> ChernVector:
        total = ChernVector.zero()
        for factor in self.factors:
            total = total + chern_of(s, factor)
        return total

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "factors": [named_object_json(f) for f in self.factors]}


def _fiber_factors(c: ComponentStability, index: PerIndex) -> tuple[NamedObject, ...]:
    if c.is_quiver and index is PerIndex.ZERO:
        return (LineBundle(n=0, m=c.k, shift=0), LineBundle(n=0, m=c.k - 1, shift=1))
    return (Fiber(),)


def _fiber_twist_factors(c: ComponentStability, index: PerIndex) -> tuple[NamedObject, ...]:
    if c.is_quiver and index is PerIndex.ZERO:
        return (LineBundle(n=-1, m=c.k, shift=1), LineBundle(n=-1, m=c.k - 1, shift=2))
    return (FiberTwist(),)


def skyscraper_jh(g: GluingParams, report: PerversityReport | None = None) -> JordanHolder:
    """Jordan-Holder factors of O_x, or its HN factors when O_x is unstable."""
    report = report or perversity(g)
    if report.per_sign is Sign.POSITIVE:
        result = JordanHolder(StabilityVerdict.STABLE, (SkyscraperPoint(),))
    elif report.per_sign is Sign.NEGATIVE:
        result = JordanHolder(StabilityVerdict.UNSTABLE, (FiberTwist(), Fiber()))
    else:
        factors = _fiber_factors(g.comp2, report.per2_sign) + _fiber_twist_factors(g.comp1, report.per1_sign)
        result = JordanHolder(StabilityVerdict.STRICTLY_SEMISTABLE, factors)
    logger.debug("O_x for m=%d is %s with %d factors", g.m, result.verdict.value, len(result.factors))
    return result

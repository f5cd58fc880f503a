"""
Invariant Suites
================
Seeded property checks over every module. Each suite draws from its own
Sampler seeded by (seed, suite name), so suites are reproducible one by one
and the summary for a given seed is byte-identical across runs.
"""
from __future__ import annotations

import logging
from dataclasses import replace
from fractions import Fraction
from typing import Callable

import sympy

from ..adjoints import (
    DimVector2,
    DimVector4,
    P1Class,
    Twist,
    c_inverse,
    c_matrix,
    chern2_of,
    chern_to_dim_matrix,
    conversion_is_inverse,
    dim_to_chern_matrix,
    dimvec2_of,
    proper_subvectors,
)
from ..arith import GaussianRational, Ordering, Sign, phase_approx, phase_compare
from ..config import settings
from ..divisorial import BoundaryTag, boundary_position, pi_mukai, pi_sigma, vertex_condition_m3
from ..gluing import (
    GluingParams,
    check_support_inequality,
    m4_decompose,
    perversity,
    skyscraper_jh,
    support_constant,
    wall_value,
    z_glued,
    z_twisted,
)
from ..ktheory import ChernVector, exp_divisor, half_square, line_bundle_catalog
from ..moduli import ModuliSpace, classify
from ..sampling import Sampler
from .schemas import GluingParamsIn, SelfcheckSummary, SuiteResult

logger = logging.getLogger(__name__)

POINT_CLASS = ChernVector(0, 0, 0, 1)
MAX_REPORTED_FAILURES = 5


class _Tally:
    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failed = 0
        self.failures: list[str] = []

    def check(self, ok: bool, detail: Callable[[], str]):
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(detail())

    def result(self) -> SuiteResult:
        return SuiteResult(name=self.name, passed=self.failed == 0, checked=self.checked, failures=self.failures)


def _describe(g: GluingParams) -> str:
    return GluingParamsIn.from_params(g).model_dump_json()


# ============================================================================
# SUITES
# ============================================================================

def phase_order_matches_float(sampler: Sampler, tally: _Tally):
    for _ in range(settings.consistency_draws):
        z1, z2 = sampler.half_plane_point(), sampler.half_plane_point()
        order = phase_compare(z1, z2)
        diff = phase_approx(z1) - phase_approx(z2)
        if order is Ordering.EQUAL:
            ok = abs(diff) <= settings.float_tolerance
        elif order is Ordering.GREATER:
            ok = diff > -settings.float_tolerance
        else:
            ok = diff < settings.float_tolerance
        tally.check(ok, lambda: f"{z1} vs {z2}: {order.value} but float difference {diff}")


def exp_closed_form(sampler: Sampler, tally: _Tally):
    for _ in range(settings.consistency_draws):
        s = sampler.surface()
        B = (sampler.rational(), sampler.rational())
        omega = (sampler.rational(), sampler.rational())
        pt = exp_divisor(s, B, omega)[3]
        tally.check(pt == half_square(s, B, omega), lambda: f"e={s.e} B={B} omega={omega}: {pt}")


def conversion_matrix_inverses(sampler: Sampler, tally: _Tally):
    for twist in Twist:
        tally.check(conversion_is_inverse(twist), lambda: f"{twist.value}: symbolic product is not the identity")
    for e in range(0, 7):
        for k in range(-5, 6):
            for twist in Twist:
                product = chern_to_dim_matrix(e, k, twist) * dim_to_chern_matrix(e, k, twist)
                tally.check(product == sympy.eye(4), lambda: f"e={e} k={k} {twist.value}: product is not the identity")
    for k in range(-5, 6):
        tally.check(c_matrix(k) * c_inverse(k) == sympy.eye(2), lambda: f"k={k}: C.C^-1 is not the identity")


def p1_conversion_inverse(sampler: Sampler, tally: _Tally):
    for k in range(-10, 11):
        point = chern2_of(k, DimVector2(1, 1))
        tally.check(point == P1Class(0, 1), lambda: f"k={k}: [1,1] maps to {point.to_json()}")
        c = P1Class(sampler.rational(), sampler.rational())
        back = chern2_of(k, dimvec2_of(k, c))
        tally.check(back == c, lambda: f"k={k}: {c.to_json()} round-trips to {back.to_json()}")


def subobject_oracle(sampler: Sampler, tally: _Tally):
    found = proper_subvectors(DimVector4(1, 1, 0, 0))
    expected = [DimVector4(0, 1, 0, 0), DimVector4(1, 0, 0, 0)]
    tally.check(found == expected, lambda: f"subvectors of [1,1,0,0]: {[v.to_json() for v in found]}")


def skyscraper_charge_conservation(sampler: Sampler, tally: _Tally):
    for draw in range(settings.consistency_draws):
        m = 1 + draw % 4
        g = sampler.wall_params(m) if draw % 2 else sampler.params(m)
        jh = skyscraper_jh(g)
        total = jh.chern_sum(g.surface)
        tally.check(total == POINT_CLASS, lambda: f"{_describe(g)}: factors sum to {total.to_json()}")


def mukai_master_identity(sampler: Sampler, tally: _Tally):
    for m in (1, 2, 3, 4):
        draws = settings.twisted_mukai_draws if m == 4 else settings.mukai_parameter_draws
        for _ in range(draws):
            g = replace(sampler.params(m), shifts=sampler.shifts())
            pi = pi_sigma(g)
            charge = z_twisted if m == 4 else z_glued
            for _ in range(settings.mukai_vectors_per_draw):
                v = sampler.chern_vector()
                lhs, rhs = pi_mukai(g.surface, pi, v), charge(g, v)
                tally.check(lhs == rhs, lambda: f"{_describe(g)} v={v.to_json()}: <pi, v> = {lhs}, Z = {rhs}")


def m4_factorization(sampler: Sampler, tally: _Tally):
    for _ in range(settings.factorization_draws):
        g = sampler.params(4)
        v = sampler.chern_vector()
        r1, d1, r2, d2 = m4_decompose(g.surface, v)
        split = GaussianRational(-(d1 + d2), r1 + r2)
        glued = z_glued(g, v)
        tally.check(glued == split, lambda: f"e={g.surface.e} v={v.to_json()}: {glued} != {split}")
        rebuilt = ChernVector(r2 - r1, r1, d2 - d1, d1 + g.surface.half_e * r1)
        tally.check(rebuilt == v, lambda: f"e={g.surface.e} v={v.to_json()}: pieces rebuild {rebuilt.to_json()}")


def wall_position_theorems(sampler: Sampler, tally: _Tally):
    for m in (1, 2):
        for _ in range(settings.wall_draws_per_type):
            g = sampler.wall_params(m)
            position = boundary_position(pi_sigma(g), g.surface.e)
            tally.check(
                wall_value(g) == 0 and position.tag is BoundaryTag.BOUNDARY_Z,
                lambda: f"{_describe(g)}: {position.to_json()}",
            )
    for _ in range(settings.wall_draws_per_type):
        g = sampler.wall_params(3)
        position = boundary_position(pi_sigma(g), g.surface.e)
        vertex = vertex_condition_m3(g.comp1.zeta0, g.comp1.zeta1, g.comp2.zeta0)
        tally.check(
            position.det01 == 0 and (position.det02 == 0) == (vertex == 0),
            lambda: f"{_describe(g)}: {position.to_json()} vertex_condition={vertex}",
        )
    for r in (Fraction(1), Fraction(2), Fraction(7, 3)):
        g = GluingParams.of_type(
            sampler.surface().e, 3, k=sampler.k(),
            zeta=[GaussianRational(-r, r), GaussianRational(r, r)],
            k_prime=sampler.k(),
            zeta_prime=[GaussianRational(r, r), GaussianRational(-r, r)],
        )
        position = boundary_position(pi_sigma(g), g.surface.e)
        vertex = vertex_condition_m3(g.comp1.zeta0, g.comp1.zeta1, g.comp2.zeta0)
        tally.check(
            wall_value(g) == 0 and vertex == 0 and position.tag is BoundaryTag.VERTEX,
            lambda: f"vertex example r={r}: {position.to_json()} vertex_condition={vertex}",
        )


def vertex_condition_scaling(sampler: Sampler, tally: _Tally):
    for _ in range(settings.consistency_draws):
        z0, z1, w0 = (sampler.half_plane_point() for _ in range(3))
        r = sampler.positive_rational()
        scaled = vertex_condition_m3(z0 * r, z1 * r, w0 * r)
        base = vertex_condition_m3(z0, z1, w0)
        tally.check(scaled == r * r * base, lambda: f"r={r}: {scaled} != r^2 * {base}")


def exp_vector_interior(sampler: Sampler, tally: _Tally):
    for _ in range(settings.consistency_draws):
        s = sampler.surface()
        z = sampler.positive_rational()
        w = z * s.e + sampler.positive_rational()
        B = (sampler.rational(), sampler.rational())
        position = boundary_position(exp_divisor(s, B, (z, w)), s.e)
        tally.check(position.tag is BoundaryTag.INTERIOR, lambda: f"e={s.e} B={B} omega=({z},{w}): {position.to_json()}")


def wall_matches_perversity(sampler: Sampler, tally: _Tally):
    for draw in range(settings.consistency_draws):
        m = 1 + draw % 4
        g = sampler.wall_params(m) if draw % 3 == 0 else sampler.params(m)
        value, report = wall_value(g), perversity(g)
        tally.check(
            (value == 0) == (report.per_sign is Sign.ZERO),
            lambda: f"{_describe(g)}: wall_value={value} per={report.per_sign.value}",
        )
        if m in (1, 2) and report.per_sign is Sign.ZERO:
            quiver = g.comp2 if m == 1 else g.comp1
            tally.check(
                quiver.zeta0.im == 0 and quiver.zeta1.im == 0,
                lambda: f"{_describe(g)}: per=0 with a quiver parameter off the negative real axis",
            )


def m4_support_property(sampler: Sampler, tally: _Tally):
    catalog = line_bundle_catalog(bound=3, shifts=range(3))
    for e in (0, 1, 2, 4):
        g = GluingParams.of_type(e, 4)
        constant = support_constant(g).constant
        for check in check_support_inequality(g, catalog, constant):
            tally.check(check.passed, lambda: f"e={e} {check.obj.label}: norm {check.norm} > {constant} * {check.modulus}")


def classification_totality(sampler: Sampler, tally: _Tally):
    epsilon = Fraction(1, 1000)
    for draw in range(settings.consistency_draws):
        m = 1 + draw % 4
        g = sampler.wall_params(m) if draw % 2 else sampler.params(m)
        verdict = classify(g)
        expected = {
            Sign.POSITIVE: {ModuliSpace.SIGMA_E_FINE},
            Sign.NEGATIVE: {ModuliSpace.EMPTY},
            Sign.ZERO: {ModuliSpace.P1_COARSE, ModuliSpace.POINT},
        }[verdict.perversity.per_sign]
        tally.check(verdict.space in expected, lambda: f"{_describe(g)}: {verdict.space.value}")
        if verdict.perversity.per_sign is Sign.ZERO and m == 3:
            spaces = {_perturbed_space(g, epsilon), _perturbed_space(g, -epsilon)}
            if None in spaces:
                continue
            tally.check(
                spaces != {ModuliSpace.SIGMA_E_FINE} and spaces != {ModuliSpace.EMPTY},
                lambda: f"{_describe(g)}: both perturbations land in {sorted(s.value for s in spaces)}",
            )


def _perturbed_space(g: GluingParams, epsilon: Fraction) -> ModuliSpace | None:
    """Classify after moving comp1's zeta0 by epsilon*i, or None if that leaves H."""
    moved = g.comp1.zeta0 + GaussianRational(0, epsilon)
    if not moved.in_half_plane():
        return None
    shifted = GluingParams.of_type(
        g.surface.e, 3,
        k=g.comp1.k, zeta=[moved, g.comp1.zeta1],
        k_prime=g.comp2.k, zeta_prime=[g.comp2.zeta0, g.comp2.zeta1],
    )
    return classify(shifted).space


SUITES: list[tuple[str, Callable[[Sampler, _Tally], None]]] = [
    ("phase_order_matches_float", phase_order_matches_float),
    ("exp_closed_form", exp_closed_form),
    ("conversion_matrix_inverses", conversion_matrix_inverses),
    ("p1_conversion_inverse", p1_conversion_inverse),
    ("subobject_oracle", subobject_oracle),
    ("skyscraper_charge_conservation", skyscraper_charge_conservation),
    ("mukai_master_identity", mukai_master_identity),
    ("m4_factorization", m4_factorization),
    ("wall_position_theorems", wall_position_theorems),
    ("vertex_condition_scaling", vertex_condition_scaling),
    ("exp_vector_interior", exp_vector_interior),
    ("wall_matches_perversity", wall_matches_perversity),
    ("m4_support_property", m4_support_property),
    ("classification_totality", classification_totality),
]


def run_selfcheck(seed: int | None = None, only: list[str] | None = None) -> SelfcheckSummary:
    seed = settings.default_seed if seed is None else seed
    results = []
    for name, suite in SUITES:
        if only is not None and name not in only:
            continue
        tally = _Tally(name)
        suite(Sampler(f"{seed}/{name}"), tally)
        result = tally.result()
        logger.info("Suite %s: %s (%d checks)", name, "pass" if result.passed else "FAIL", result.checked)
        results.append(result)
    return SelfcheckSummary(seed=seed, passed=all(r.passed for r in results), suites=results)

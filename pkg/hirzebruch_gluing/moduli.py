"""
Moduli of Skyscraper Sheaves
============================
Classification of the moduli space of sigma-semistable objects of class [O_x]
for a glued stability condition. The decision uses only the sign of the gluing
perversity and the per_i flags of the quiver components, never the type label.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .arith import Sign, as_rational
from .errors import InvariantError
from .gluing import GluingParams, PerIndex, PerversityReport, perversity, skyscraper_jh
from .ktheory import NamedObject, named_object_json

logger = logging.getLogger(__name__)


class ModuliSpace(str, Enum):
    SIGMA_E_FINE = "sigma_e_fine"
    P1_COARSE = "p1_coarse"
    POINT = "point"
    EMPTY = "empty"


class CatalogSet(str, Enum):
    """Families of semistable objects of class [O_x]: skyscrapers, fiber extensions, line-bundle sums."""

    S_P = "S_p"
    S_F = "S_f"
    S_L = "S_l"


class SEquivalenceRule(str, Enum):
    BY_POINT = "by_point"
    BY_FIBER = "by_fiber"
    ALL_EQUIVALENT = "all_equivalent"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True, slots=True)
class ModuliVerdict:
    space: ModuliSpace
    semistable_catalog: frozenset[CatalogSet]
    gr_factors: tuple[NamedObject, ...]
    s_equiv_rule: SEquivalenceRule
    perversity: PerversityReport | None = None

    def __post_init__(self):
        catalog = self.semistable_catalog
        if self.space is ModuliSpace.SIGMA_E_FINE and catalog != {CatalogSet.S_P}:
            raise InvariantError("ModuliVerdict", "a fine moduli space Sigma_e has catalog {S_p}")
        if self.space is ModuliSpace.P1_COARSE and CatalogSet.S_F not in catalog:
            raise InvariantError("ModuliVerdict", "a coarse moduli space P1 needs S_f in the catalog")
        if self.space is ModuliSpace.POINT and CatalogSet.S_L not in catalog:
            raise InvariantError("ModuliVerdict", "a point moduli space needs S_l in the catalog")
        if self.space is ModuliSpace.EMPTY and catalog:
            raise InvariantError("ModuliVerdict", "an empty moduli space has an empty catalog")

    def to_json(self) -> dict:
        report = {
            "space": self.space.value,
            "semistable_catalog": sorted(c.value for c in self.semistable_catalog),
            "gr_factors": [named_object_json(f) for f in self.gr_factors],
            "s_equiv_rule": self.s_equiv_rule.value,
        }
        if self.perversity is not None:
            report["perversity"] = self.perversity.to_json()
        return report


def classify(g: GluingParams) -> ModuliVerdict:
    report = perversity(g)
    if report.per_sign is Sign.POSITIVE:
        verdict = ModuliVerdict(
            ModuliSpace.SIGMA_E_FINE,
            frozenset({CatalogSet.S_P}),
            skyscraper_jh(g, report).factors,
            SEquivalenceRule.BY_POINT,
            report,
        )
    elif report.per_sign is Sign.NEGATIVE:
        verdict = ModuliVerdict(ModuliSpace.EMPTY, frozenset(), (), SEquivalenceRule.NOT_APPLICABLE, report)
    elif report.per1_sign is PerIndex.ZERO and report.per2_sign is PerIndex.ZERO:
        verdict = ModuliVerdict(
            ModuliSpace.POINT,
            frozenset(CatalogSet),
            skyscraper_jh(g, report).factors,
            SEquivalenceRule.ALL_EQUIVALENT,
            report,
        )
    else:
        catalog = {CatalogSet.S_P, CatalogSet.S_F}
        if PerIndex.ZERO in (report.per1_sign, report.per2_sign):
            catalog.add(CatalogSet.S_L)
        verdict = ModuliVerdict(
            ModuliSpace.P1_COARSE,
            frozenset(catalog),
            skyscraper_jh(g, report).factors,
            SEquivalenceRule.BY_FIBER,
            report,
        )
    logger.debug("m=%d classified as %s", g.m, verdict.space.value)
    return verdict


@dataclass(frozen=True, slots=True)
class SurfacePoint:
    """A closed point of Sigma_e: the fiber it lies on and a coordinate along it."""

    fiber: Fraction
    position: Fraction

    def __post_init__(self):
        object.__setattr__(self, "fiber", as_rational(self.fiber))
        object.__setattr__(self, "position", as_rational(self.position))


def s_equivalent(verdict: ModuliVerdict, x1: SurfacePoint, x2: SurfacePoint) -> bool:
    """Whether O_{x1} and O_{x2} are S-equivalent under ``verdict``."""
    rule = verdict.s_equiv_rule
    if rule is SEquivalenceRule.BY_POINT:
        return x1 == x2
    if rule is SEquivalenceRule.BY_FIBER:
        return x1.fiber == x2.fiber
    if rule is SEquivalenceRule.ALL_EQUIVALENT:
        return True
    raise InvariantError("SEquivalence", "skyscraper sheaves are not semistable, S-equivalence is undefined")

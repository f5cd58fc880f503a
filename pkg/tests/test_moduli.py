from fractions import Fraction

import pytest
from hypothesis import given

from conftest import gluing_params, wall_params
from hirzebruch_gluing.arith import GaussianRational, Sign
from hirzebruch_gluing.errors import InvariantError
from hirzebruch_gluing.gluing import GluingParams
from hirzebruch_gluing.ktheory import Fiber, FiberTwist, LineBundle, SkyscraperPoint
from hirzebruch_gluing.moduli import (
    CatalogSet,
    ModuliSpace,
    ModuliVerdict,
    SEquivalenceRule,
    SurfacePoint,
    classify,
    s_equivalent,
)

I = GaussianRational(0, 1)
ALLOWED = {
    Sign.POSITIVE: {ModuliSpace.SIGMA_E_FINE},
    Sign.NEGATIVE: {ModuliSpace.EMPTY},
    Sign.ZERO: {ModuliSpace.P1_COARSE, ModuliSpace.POINT},
}


class TestClassify:
    def test_fine_moduli(self):
        verdict = classify(GluingParams.of_type(1, 1, zeta=[I, I]))
        assert verdict.space is ModuliSpace.SIGMA_E_FINE
        assert verdict.semistable_catalog == {CatalogSet.S_P}
        assert verdict.gr_factors == (SkyscraperPoint(),)
        assert verdict.s_equiv_rule is SEquivalenceRule.BY_POINT

    def test_empty_moduli(self):
        verdict = classify(GluingParams.of_type(1, 2, zeta=[GaussianRational(-1, 1), GaussianRational(1, 1)]))
        assert verdict.space is ModuliSpace.EMPTY
        assert verdict.semistable_catalog == frozenset()
        assert verdict.gr_factors == ()

    def test_coarse_moduli_with_standard_components(self, m4_params, vertex_params):
        for g in (m4_params, vertex_params):
            verdict = classify(g)
            assert verdict.space is ModuliSpace.P1_COARSE
            assert verdict.semistable_catalog == {CatalogSet.S_P, CatalogSet.S_F}
            assert verdict.gr_factors == (Fiber(), FiberTwist())
            assert verdict.s_equiv_rule is SEquivalenceRule.BY_FIBER

    def test_coarse_moduli_with_degenerate_quiver(self, m1_wall_params):
        verdict = classify(m1_wall_params)
        assert verdict.space is ModuliSpace.P1_COARSE
        assert verdict.semistable_catalog == {CatalogSet.S_P, CatalogSet.S_F, CatalogSet.S_L}
        assert len(verdict.gr_factors) == 3

    def test_point_moduli(self):
        g = GluingParams.of_type(2, 3, k=1, zeta=[I, I], k_prime=-1, zeta_prime=[I, I])
        verdict = classify(g)
        assert verdict.space is ModuliSpace.POINT
        assert verdict.semistable_catalog == set(CatalogSet)
        assert verdict.s_equiv_rule is SEquivalenceRule.ALL_EQUIVALENT
        assert verdict.gr_factors == (
            LineBundle(n=0, m=-1, shift=0),
            LineBundle(n=0, m=-2, shift=1),
            LineBundle(n=-1, m=1, shift=1),
            LineBundle(n=-1, m=0, shift=2),
        )

    def test_json(self, m1_wall_params):
        data = classify(m1_wall_params).to_json()
        assert data["space"] == "p1_coarse"
        assert data["semistable_catalog"] == ["S_f", "S_l", "S_p"]
        assert data["s_equiv_rule"] == "by_fiber"
        assert data["perversity"]["per_sign"] == "zero"

    @given(gluing_params())
    def test_total_and_consistent_with_perversity(self, g):
        verdict = classify(g)
        assert verdict.space in ALLOWED[verdict.perversity.per_sign]

    @given(wall_params(3))
    def test_walls_are_never_fine_or_empty(self, g):
        assert classify(g).space in {ModuliSpace.P1_COARSE, ModuliSpace.POINT}

    def test_crossing_the_wall_changes_the_verdict(self):
        zeta_prime = [GaussianRational(Fraction(1, 2), 1), GaussianRational(Fraction(1, 2), 1)]

        def space(zeta0):
            g = GluingParams.of_type(1, 3, zeta=[zeta0, GaussianRational(2, 1)], zeta_prime=zeta_prime)
            return classify(g).space

        epsilon = GaussianRational(0, Fraction(1, 1000))
        zeta0 = GaussianRational(-1, 1)
        assert space(zeta0) is ModuliSpace.P1_COARSE
        assert space(zeta0 + epsilon) is ModuliSpace.SIGMA_E_FINE
        assert space(zeta0 - epsilon) is ModuliSpace.EMPTY


class TestVerdictInvariants:
    @pytest.mark.parametrize(
        "space, catalog",
        [
            (ModuliSpace.SIGMA_E_FINE, {CatalogSet.S_P, CatalogSet.S_F}),
            (ModuliSpace.P1_COARSE, {CatalogSet.S_P}),
            (ModuliSpace.POINT, {CatalogSet.S_P, CatalogSet.S_F}),
            (ModuliSpace.EMPTY, {CatalogSet.S_P}),
        ],
    )
    def test_rejects_inconsistent_catalogs(self, space, catalog):
        with pytest.raises(InvariantError) as info:
            ModuliVerdict(space, frozenset(catalog), (), SEquivalenceRule.BY_POINT)
        assert info.value.invariant == "ModuliVerdict"


class TestSEquivalence:
    def test_rules(self, m4_params):
        x, y, z = SurfacePoint(0, 0), SurfacePoint(0, 1), SurfacePoint(1, 0)
        fine = classify(GluingParams.of_type(1, 1, zeta=[I, I]))
        assert s_equivalent(fine, x, x)
        assert not s_equivalent(fine, x, y)
        coarse = classify(m4_params)
        assert s_equivalent(coarse, x, y)
        assert not s_equivalent(coarse, x, z)
        point = classify(GluingParams.of_type(1, 3, zeta=[I, I], zeta_prime=[I, I]))
        assert s_equivalent(point, x, z)

    def test_undefined_when_unstable(self):
        empty = classify(GluingParams.of_type(1, 2, zeta=[GaussianRational(-1, 1), GaussianRational(1, 1)]))
        with pytest.raises(InvariantError) as info:
            s_equivalent(empty, SurfacePoint(0, 0), SurfacePoint(0, 0))
        assert info.value.invariant == "SEquivalence"

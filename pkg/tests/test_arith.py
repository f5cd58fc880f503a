import itertools
from fractions import Fraction
from functools import cmp_to_key

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import half_plane_points, positive_rationals, rationals
from hirzebruch_gluing.arith import (
    GaussianRational,
    HalfPlanePoint,
    Matrix2,
    Ordering,
    Sign,
    as_rational,
    cross,
    phase_approx,
    phase_compare,
    sign_of,
)
from hirzebruch_gluing.errors import InvariantError

STEP = {Ordering.LESS: -1, Ordering.EQUAL: 0, Ordering.GREATER: 1}


class TestRational:
    def test_strings_are_canonicalized(self):
        assert as_rational("3/6") == Fraction(1, 2)
        assert as_rational(" -4 ") == Fraction(-4)
        assert str(as_rational("10/4")) == "5/2"

    @pytest.mark.parametrize("value", [0.5, True, None, "1/0", "x"])
    def test_rejects_non_rationals(self, value):
        with pytest.raises(InvariantError) as info:
            as_rational(value)
        assert info.value.invariant == "Rational"

    def test_sign_of(self):
        assert sign_of(Fraction(-1, 3)) is Sign.NEGATIVE
        assert sign_of(Fraction(0)) is Sign.ZERO
        assert sign_of(Fraction(2)) is Sign.POSITIVE


class TestGaussianRational:
    def test_product(self):
        assert GaussianRational(1, 2) * GaussianRational(3, -1) == GaussianRational(5, 5)

    def test_mixed_scalar_arithmetic(self):
        z = GaussianRational(1, 1)
        assert 1 - z == GaussianRational(0, -1)
        assert Fraction(1, 2) * z == GaussianRational(Fraction(1, 2), Fraction(1, 2))
        assert z + 2 == GaussianRational(3, 1)
        assert -z == GaussianRational(-1, -1)

    def test_json(self):
        assert GaussianRational(Fraction(-1, 2), 3).to_json() == ["-1/2", "3"]
        assert GaussianRational.from_json(["-1/2", "3"]) == GaussianRational(Fraction(-1, 2), 3)

    @given(rationals, rationals)
    def test_json_round_trip(self, re, im):
        z = GaussianRational(re, im)
        assert GaussianRational.from_json(z.to_json()) == z

    def test_cross(self):
        assert cross(GaussianRational(-1, 1), GaussianRational(1, 1)) == -2


class TestHalfPlane:
    @pytest.mark.parametrize("z", [GaussianRational(1, 0), GaussianRational(0, 0), GaussianRational(1, -1)])
    def test_rejects_points_outside(self, z):
        with pytest.raises(InvariantError) as info:
            HalfPlanePoint(z)
        assert info.value.invariant == "HalfPlanePoint"

    def test_phase_compare_rules(self):
        assert phase_compare(GaussianRational(-1, 0), GaussianRational(-5, 0)) is Ordering.EQUAL
        assert phase_compare(GaussianRational(-1, 0), GaussianRational(-1, 1)) is Ordering.GREATER
        assert phase_compare(GaussianRational(3, 1), GaussianRational(-2, 0)) is Ordering.LESS
        assert phase_compare(GaussianRational(0, 1), GaussianRational(1, 1)) is Ordering.GREATER
        assert phase_compare(GaussianRational(1, 1), GaussianRational(2, 2)) is Ordering.EQUAL

    def test_phase_compare_rejects_malformed_charge(self):
        with pytest.raises(InvariantError):
            phase_compare(GaussianRational(1, -1), GaussianRational(0, 1))

    def test_phase_approx(self):
        assert phase_approx(GaussianRational(-1, 0)) == 1.0
        assert phase_approx(GaussianRational(0, 2)) == pytest.approx(0.5)
        assert phase_approx(GaussianRational(1, 1)) == pytest.approx(0.25)

    @given(half_plane_points(), half_plane_points())
    def test_exact_order_matches_float_phases(self, z1, z2):
        diff = phase_approx(z1) - phase_approx(z2)
        assume(abs(diff) > 1e-9)
        expected = Ordering.GREATER if diff > 0 else Ordering.LESS
        assert phase_compare(z1, z2) is expected

    @given(half_plane_points(), half_plane_points())
    def test_order_is_antisymmetric(self, z1, z2):
        flipped = {Ordering.LESS: Ordering.GREATER, Ordering.GREATER: Ordering.LESS, Ordering.EQUAL: Ordering.EQUAL}
        assert phase_compare(z2, z1) is flipped[phase_compare(z1, z2)]

    @given(half_plane_points(), half_plane_points(), half_plane_points())
    def test_order_is_transitive(self, z1, z2, z3):
        if phase_compare(z1, z2) is not Ordering.GREATER and phase_compare(z2, z3) is not Ordering.GREATER:
            assert phase_compare(z1, z3) is not Ordering.GREATER

    @given(half_plane_points(), positive_rationals, positive_rationals, half_plane_points())
    def test_equal_phases_are_transitive(self, z, r, t, other):
        assert phase_compare(z * r, z * t) is Ordering.EQUAL
        assert phase_compare(z * r, other) is phase_compare(z * t, other)

    @given(st.lists(half_plane_points(), min_size=3, max_size=8))
    def test_sorting_by_phase_is_consistent(self, points):
        ordered = sorted(points, key=cmp_to_key(lambda a, b: STEP[phase_compare(a, b)]))
        for left, right in itertools.combinations(ordered, 2):
            assert phase_compare(left, right) is not Ordering.GREATER


class TestMatrix2:
    def test_action_and_determinant(self):
        M = Matrix2(1, 2, 3, 4)
        assert M.det == -2
        assert M.act(GaussianRational(1, 1)) == GaussianRational(3, 7)

    def test_positive_rejects_orientation_reversal(self):
        with pytest.raises(InvariantError) as info:
            Matrix2(0, 1, 1, 0).positive()
        assert info.value.invariant == "Matrix2"

    @given(rationals, rationals)
    def test_identity_acts_trivially(self, x, y):
        z = GaussianRational(x, y)
        assert Matrix2.identity().act(z) == z
        assert Matrix2(-1, 0, 0, -1).act(z) == -z

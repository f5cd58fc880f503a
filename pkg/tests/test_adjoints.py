import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import chern_vectors, rationals, surfaces, twists
from hirzebruch_gluing import adjoints
from hirzebruch_gluing.adjoints import (
    DimVector2,
    DimVector4,
    P1Class,
    Twist,
    c_inverse,
    c_matrix,
    chern2_of,
    chern4_of,
    chern_to_dim_matrix,
    conversion_is_inverse,
    dim_to_chern_matrix,
    dimvec2_of,
    dimvec4_of,
    lambda1_class,
    p1_class_of,
    p1_heart_contains,
    proper_subvectors,
    rho2_class,
)
from hirzebruch_gluing.errors import InvariantError
from hirzebruch_gluing.ktheory import ChernVector, P1LineBundle, Surface

POINT = ChernVector(0, 0, 0, 1)
FIBER = ChernVector(0, 0, 1, 0)
FIBER_TWIST = ChernVector(0, 0, -1, 1)
STRUCTURE_SHEAF = ChernVector(1, 0, 0, 0)


class TestProjections:
    @pytest.mark.parametrize("e", [0, 1, 4])
    def test_lambda1_examples(self, e):
        s = Surface(e)
        assert lambda1_class(s, POINT) == P1Class(0, -1)
        assert lambda1_class(s, FIBER) == P1Class(0, 0)
        assert lambda1_class(s, STRUCTURE_SHEAF) == P1Class(0, 0)

    @pytest.mark.parametrize("e", [0, 1, 4])
    def test_rho2_examples(self, e):
        s = Surface(e)
        assert rho2_class(s, POINT) == P1Class(0, 1)
        assert rho2_class(s, FIBER_TWIST) == P1Class(0, 0)
        assert rho2_class(s, STRUCTURE_SHEAF) == P1Class(1, 0)

    @given(surfaces, chern_vectors, chern_vectors)
    def test_projections_are_additive(self, s, v, w):
        assert lambda1_class(s, v + w) == lambda1_class(s, v) + lambda1_class(s, w)
        assert rho2_class(s, v + w) == rho2_class(s, v) + rho2_class(s, w)

    @given(surfaces, twists, chern_vectors)
    def test_lambda1_dimension_vector_coefficient(self, s, k, v):
        n0 = dimvec2_of(k, lambda1_class(s, v)).n0
        assert n0 == -v.ch2 + (s.half_e + k) * v.a


class TestP1Conversions:
    def test_dimvec2_examples(self):
        assert dimvec2_of(5, P1Class(0, 1)) == DimVector2(1, 1)
        assert dimvec2_of(0, P1Class(1, 0)) == DimVector2(0, 1)
        assert dimvec2_of(2, P1Class(1, 1)) == DimVector2(-1, 0)

    def test_chern2_examples(self):
        assert chern2_of(-3, DimVector2(1, 1)) == P1Class(0, 1)
        assert chern2_of(3, DimVector2(1, 0)) == P1Class(-1, -2)

    @given(twists, rationals, rationals)
    def test_round_trip(self, k, rank, deg):
        c = P1Class(rank, deg)
        assert chern2_of(k, dimvec2_of(k, c)) == c

    @pytest.mark.parametrize("k", range(-10, 11))
    def test_point_class_from_triangle(self, k):
        assert chern2_of(k, DimVector2(1, 1)) == P1Class(0, 1)

    @pytest.mark.parametrize("k", range(-5, 6))
    def test_c_matrix_inverse(self, k):
        assert c_matrix(k) * c_inverse(k) == sympy.eye(2)

    def test_p1_class_of_shifted_line_bundle(self):
        assert p1_class_of(P1LineBundle(n=2, shift=1)) == P1Class(-1, -2)


class TestSurfaceConversions:
    @pytest.mark.parametrize("twist", list(Twist))
    def test_matrices_are_inverse_symbolically(self, twist):
        assert conversion_is_inverse(twist)

    def test_corrupted_entry_is_caught(self, monkeypatch):
        corrupted = dict(adjoints.CHERN_TO_DIM)
        corrupted[Twist.UNTWISTED] = corrupted[Twist.UNTWISTED].subs(adjoints.K, adjoints.K + 1)
        monkeypatch.setattr(adjoints, "CHERN_TO_DIM", corrupted)
        assert not conversion_is_inverse(Twist.UNTWISTED)
        assert conversion_is_inverse(Twist.MINUS_C0)

    @pytest.mark.parametrize("e", range(0, 7))
    @pytest.mark.parametrize("k", range(-5, 6))
    @pytest.mark.parametrize("twist", list(Twist))
    def test_matrices_are_inverse(self, e, k, twist):
        assert chern_to_dim_matrix(e, k, twist) * dim_to_chern_matrix(e, k, twist) == sympy.eye(4)

    def test_dimvec4_examples(self):
        s = Surface(3)
        assert dimvec4_of(s, 2, Twist.UNTWISTED, (0, 1, 0, 0)) == DimVector4(1, 1, 0, 0)
        assert dimvec4_of(s, 2, Twist.MINUS_C0, (0, 1, 0, -1)) == DimVector4(1, 1, 0, 0)
        assert dimvec4_of(s, 2, Twist.MINUS_C0, (0, -1, 0, 1)) == DimVector4(-1, -1, 0, 0)
        assert dimvec4_of(s, 2, Twist.UNTWISTED, (0, 0, 0, 1)) == DimVector4(-1, -1, 1, 1)

    def test_chern4_examples(self):
        s = Surface(1)
        assert chern4_of(s, 0, Twist.UNTWISTED, DimVector4(1, 1, 0, 0)) == (0, 1, 0, 0)
        assert chern4_of(s, 0, Twist.MINUS_C0, DimVector4(0, 0, 0, 0)) == (0, 0, 0, 0)

    @given(surfaces, twists, st.sampled_from(list(Twist)), rationals, rationals, rationals, rationals)
    def test_round_trip(self, s, k, twist, m0, m1, m2, m3):
        m = DimVector4(m0, m1, m2, m3)
        assert dimvec4_of(s, k, twist, chern4_of(s, k, twist, m)) == m


class TestSubobjects:
    def test_examples(self):
        assert proper_subvectors(DimVector4(1, 1, 0, 0)) == [DimVector4(0, 1, 0, 0), DimVector4(1, 0, 0, 0)]
        assert proper_subvectors(DimVector4(1, 0, 0, 0)) == []
        assert proper_subvectors(DimVector4(2, 1, 0, 0)) == [
            DimVector4(0, 1, 0, 0),
            DimVector4(1, 0, 0, 0),
            DimVector4(1, 1, 0, 0),
            DimVector4(2, 0, 0, 0),
        ]

    @given(st.tuples(*[st.integers(0, 3)] * 4).filter(any))
    def test_count(self, entries):
        assert len(proper_subvectors(DimVector4(*entries))) == math.prod(x + 1 for x in entries) - 2

    @pytest.mark.parametrize("entries", [(-1, 0, 0, 0), (Fraction(1, 2), 0, 0, 0)])
    def test_rejects_formal_classes(self, entries):
        with pytest.raises(InvariantError) as info:
            proper_subvectors(DimVector4(*entries))
        assert info.value.invariant == "DimVector4.subobject"


class TestHeartMembership:
    def test_examples(self):
        assert p1_heart_contains(0, 0, P1LineBundle(n=-1, shift=1))
        assert p1_heart_contains(0, 0, P1LineBundle(n=1, shift=0))
        assert not p1_heart_contains(0, 0, P1LineBundle(n=-1, shift=0))

    @given(twists, st.integers(-3, 3))
    def test_generators_belong(self, k, j):
        assert p1_heart_contains(k, j, P1LineBundle(n=k - 1, shift=j + 1))
        assert p1_heart_contains(k, j, P1LineBundle(n=k, shift=j))

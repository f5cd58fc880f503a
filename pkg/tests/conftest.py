from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hirzebruch_gluing.arith import GaussianRational, Matrix2
from hirzebruch_gluing.gluing import GluingParams
from hirzebruch_gluing.ktheory import (
    ChernVector,
    DirectSum,
    Fiber,
    FiberTwist,
    LineBundle,
    P1LineBundle,
    SkyscraperPoint,
    Surface,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=8)
positive_rationals = st.fractions(min_value=Fraction(1, 8), max_value=20, max_denominator=8)
twists = st.integers(min_value=-4, max_value=4)
degrees = st.integers(min_value=0, max_value=6)
surfaces = degrees.map(Surface)
chern_vectors = st.builds(ChernVector, rationals, rationals, rationals, rationals)
negative_reals = positive_rationals.map(lambda x: GaussianRational(-x, 0))
shift_pairs = st.integers(min_value=0, max_value=3).map(lambda j2: (j2 + 1, j2))
small_ints = st.integers(min_value=-6, max_value=6)
object_shifts = st.integers(min_value=0, max_value=3)
named_objects = st.recursive(
    st.one_of(
        st.sampled_from([SkyscraperPoint(), Fiber(), FiberTwist()]),
        st.builds(LineBundle, n=small_ints, m=small_ints, shift=object_shifts),
        st.builds(P1LineBundle, n=small_ints, shift=object_shifts),
    ),
    lambda children: st.lists(children, min_size=1, max_size=3).map(lambda xs: DirectSum(summands=tuple(xs))),
    max_leaves=6,
)


@st.composite
def half_plane_points(draw):
    if draw(st.booleans()) and draw(st.booleans()):
        return draw(negative_reals)
    return GaussianRational(draw(rationals), draw(positive_rationals))


@st.composite
def positive_matrices(draw):
    entries = draw(st.tuples(rationals, rationals, rationals, rationals))
    M = Matrix2(*entries)
    if M.det <= 0:
        M = Matrix2(M.b, M.a, M.d, M.c)
    if M.det <= 0:
        M = Matrix2.identity()
    return M


@st.composite
def gluing_params(draw, m=None):
    m = draw(st.integers(min_value=1, max_value=4)) if m is None else m
    return GluingParams.of_type(
        draw(degrees),
        m,
        k=draw(twists),
        zeta=[draw(half_plane_points()), draw(half_plane_points())],
        k_prime=draw(twists),
        zeta_prime=[draw(half_plane_points()), draw(half_plane_points())],
        matrix=draw(positive_matrices()) if m == 4 else None,
        shifts=draw(shift_pairs),
    )


@st.composite
def wall_params(draw, m):
    """Parameters whose skyscraper charges have equal phase."""
    e, k = draw(degrees), draw(twists)
    if m in (1, 2):
        return GluingParams.of_type(e, m, k=k, zeta=[draw(negative_reals), draw(negative_reals)])
    zeta = [draw(half_plane_points()), draw(half_plane_points())]
    target = (zeta[0] + zeta[1]) * draw(positive_rationals)
    weight = draw(st.fractions(min_value=Fraction(1, 10), max_value=Fraction(9, 10), max_denominator=10))
    if target.im == 0:
        first = target * weight
    else:
        first = GaussianRational(weight * target.re + draw(rationals), weight * target.im)
    return GluingParams.of_type(e, 3, k=k, zeta=zeta, k_prime=draw(twists), zeta_prime=[first, target - first])


def vertex_example(r=1, e=1, k=0, k_prime=0):
    return GluingParams.of_type(
        e, 3, k=k,
        zeta=[GaussianRational(-r, r), GaussianRational(r, r)],
        k_prime=k_prime,
        zeta_prime=[GaussianRational(r, r), GaussianRational(-r, r)],
    )


@pytest.fixture
def vertex_params():
    return vertex_example()


@pytest.fixture
def m1_wall_params():
    return GluingParams.of_type(1, 1, k=0, zeta=[GaussianRational(-1, 0), GaussianRational(-1, 0)])


@pytest.fixture
def m4_params():
    return GluingParams.of_type(1, 4)

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropcyl.classes import (
    class_from_profile,
    compatibility_intersections,
    divisor_class,
    exceptional_class,
    intersect,
    intersection_matrix,
    make_class,
    pullback_class,
    zero_class,
)
from tropcyl.errors import NonRepresentable, RayIndexOutOfRange
from tropcyl.model import F1_RAYS, P1XP1_RAYS, P2_RAYS, build_model, cubic_model, refine_model


def test_intersection_matrix_p2():
    assert intersection_matrix(P2_RAYS) == ((1, 1, 1), (1, 1, 1), (1, 1, 1))


def test_intersection_matrix_p1xp1():
    m = intersection_matrix(P1XP1_RAYS)
    for i in range(4):
        assert m[i][i] == 0
        assert m[i][(i + 1) % 4] == 1
        assert m[i][(i + 2) % 4] == 0


def test_intersection_matrix_f1():
    m = intersection_matrix(F1_RAYS)
    # (1,0) + (0,1) = 1 * (1,1), so the (1,1) divisor has self-intersection -1.
    assert m[1][1] == -1


def test_intersect_strict_transform(cubic):
    beta = divisor_class(cubic.fan, 1) - exceptional_class(cubic, 3, 1)
    prof = intersect(cubic, beta)
    assert prof.dD == (1, 1, 0)
    assert prof.dE_map == {(3, 1): 1}


def test_intersect_exceptional_class(cubic):
    prof = intersect(cubic, exceptional_class(cubic, 1, 1))
    assert prof.dD == (1, 0, 0)
    assert prof.dE_map == {(1, 1): -1}


def test_intersect_zero(cubic):
    prof = intersect(cubic, zero_class(cubic))
    assert prof.dD == (0, 0, 0)
    assert prof.dE == ()


def test_class_from_profile_inverts(cubic):
    beta = class_from_profile(cubic, (1, 1, 0), {(3, 1): 1})
    assert beta == divisor_class(cubic.fan, 1) - exceptional_class(cubic, 3, 1)


def test_class_from_profile_zero(cubic):
    assert class_from_profile(cubic, (0, 0, 0), {}) == zero_class(cubic)


def test_class_from_profile_non_representable(cubic):
    with pytest.raises(NonRepresentable):
        class_from_profile(cubic, (1, 0, 0), {})


def test_compatibility_intersections(cubic):
    assert compatibility_intersections(cubic, [(1, 1), (2, 1)]) == (1, 1, 0)
    assert compatibility_intersections(cubic, []) == (0, 0, 0)
    assert compatibility_intersections(cubic, [(3, 2)]) == (0, 0, 2)


def test_compatibility_bad_ray(cubic):
    with pytest.raises(RayIndexOutOfRange):
        compatibility_intersections(cubic, [(4, 1)])


def test_pullback_preserves_profile(cubic):
    refined = refine_model(cubic, (1, 1))
    beta = divisor_class(cubic.fan, 2) - exceptional_class(cubic, 1, 2)
    pulled = pullback_class(cubic, refined, beta)
    prof = intersect(refined, pulled)
    for u in cubic.fan.rays:
        k = refined.fan.ray_index(u)
        orig = intersect(cubic, beta).dD[cubic.fan.ray_index(u) - 1]
        assert prof.dD[k - 1] == orig
    assert prof.dD[refined.fan.ray_index((1, 1)) - 1] == 0


MODELS = [
    cubic_model(),
    build_model(P1XP1_RAYS, (2, 1, 2, 1)),
    build_model(F1_RAYS, (1, 2, 1, 1)),
]


@st.composite
def model_and_class(draw):
    model = draw(st.sampled_from(MODELS))
    toric = tuple(
        draw(st.integers(min_value=-4, max_value=4)) for _ in range(model.m)
    )
    exc = {}
    for pair in model.exceptional_pairs:
        c = draw(st.integers(min_value=-2, max_value=2))
        if c:
            exc[pair] = c
    return model, make_class(model.fan.rays, toric, exc)


@given(model_and_class())
def test_profile_round_trip(mc):
    model, beta = mc
    prof = intersect(model, beta)
    assert class_from_profile(model, prof.dD, prof.dE_map) == beta


@given(model_and_class(), model_and_class())
def test_intersect_is_linear(mc1, mc2):
    model, a = mc1
    model2, b = mc2
    if model is not model2:
        return
    pa, pb, ps = intersect(model, a), intersect(model, b), intersect(model, a + b)
    assert ps.dD == tuple(x + y for x, y in zip(pa.dD, pb.dD))
    combined = dict(pa.dE_map)
    for k, v in pb.dE_map.items():
        combined[k] = combined.get(k, 0) + v
    assert {k: v for k, v in combined.items() if v} == ps.dE_map


@given(model_and_class())
def test_pullback_orthogonal_to_inserted_rays(mc):
    model, beta = mc
    refined = refine_model(model, (3, 1)) if model.fan.ray_index((3, 1)) is None else model
    pulled = pullback_class(model, refined, beta)
    prof = intersect(refined, pulled)
    for k, u in enumerate(refined.fan.rays, start=1):
        if model.fan.ray_index(u) is None:
            assert prof.dD[k - 1] == 0

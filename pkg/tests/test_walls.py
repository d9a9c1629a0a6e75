import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropcyl.errors import ZeroVector
from tropcyl.model import P2_RAYS, build_model, cubic_model
from tropcyl.walls import generate_walls, is_wall_direction


def test_step0_is_exceptional_directions(cubic):
    walls = generate_walls(cubic, 0, 10)
    assert walls.step_set(0) == {(1, 0), (0, 1), (-1, -1)}


def test_step1_additions(cubic):
    walls = generate_walls(cubic, 1, 10)
    assert walls.step_set(1) == {(1, 1), (-1, 0), (0, -1)}


def test_step2_pair_sum_rule(cubic):
    walls = generate_walls(cubic, 2, 3, rule="pair_sum")
    step2 = walls.step_set(2)
    assert {(2, 1), (1, 2), (-2, -1), (-1, -2)} <= step2
    # The literal pair-sum rule also produces the two diagonal rays.
    assert (1, -1) in step2 and (-1, 1) in step2


def test_step2_support_rule(cubic):
    # (-1,1) = 2(0,1) + (-1,-1) is a supported combination with coefficient
    # sum 3, so the diagonals are genuine step-2 walls under this rule too.
    walls = generate_walls(cubic, 2, 3, rule="support")
    assert walls.step_set(2) == {
        (2, 1), (1, 2), (-2, -1), (-1, -2), (1, -1), (-1, 1),
    }


def test_single_wall_never_scatters():
    m = build_model(P2_RAYS, (1, 0, 0))
    for rule in ("pair_sum", "support"):
        walls = generate_walls(m, 5, 10, rule=rule)
        assert [d for d, _ in walls.directions] == [(1, 0)]


def test_toric_model_has_no_walls():
    m = build_model(P2_RAYS, (0, 0, 0))
    assert generate_walls(m, 3, 10).directions == ()


def test_membership_examples(cubic):
    assert is_wall_direction(cubic, (2, 1))
    assert is_wall_direction(cubic, (-2, -1))
    m = build_model(P2_RAYS, (1, 0, 0))
    assert not is_wall_direction(m, (0, 1))
    m2 = build_model(P2_RAYS, (1, 1, 0))
    assert is_wall_direction(m2, (-1, -1))


def test_membership_zero_rejected(cubic):
    with pytest.raises(ZeroVector):
        is_wall_direction(cubic, (0, 0))


def test_determinism(cubic):
    a = generate_walls(cubic, 3, 8, rule="pair_sum")
    b = generate_walls(cubic, 3, 8, rule="pair_sum")
    assert a.directions == b.directions


@settings(deadline=None, max_examples=25)
@given(
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=2, max_value=8),
    st.sampled_from(["pair_sum", "support"]),
)
def test_monotone_in_steps_and_bound(n, bound, rule):
    model = cubic_model()
    small = set(generate_walls(model, n, bound, rule).by_direction)
    more_steps = set(generate_walls(model, n + 1, bound, rule).by_direction)
    bigger_bound = set(generate_walls(model, n, bound + 2, rule).by_direction)
    assert small <= more_steps
    assert small <= bigger_bound


@settings(deadline=None, max_examples=25)
@given(st.integers(min_value=0, max_value=3), st.sampled_from(["pair_sum", "support"]))
def test_generated_walls_are_supported(n, rule):
    model = cubic_model()
    walls = generate_walls(model, n, 8, rule)
    for d, _ in walls.directions:
        assert is_wall_direction(model, d)

import pytest

from tropcyl.model import F1_RAYS, P1XP1_RAYS, P2_RAYS, build_model, cubic_model


@pytest.fixture
def cubic():
    return cubic_model()


@pytest.fixture
def p2_plain():
    return build_model(P2_RAYS, (1, 1, 1))


@pytest.fixture
def p1xp1():
    return build_model(P1XP1_RAYS, (2, 1, 2, 1))


@pytest.fixture
def f1():
    return build_model(F1_RAYS, (1, 2, 1, 1))

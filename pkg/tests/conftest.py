import pytest
from hypothesis import strategies as st

from afrob import ArgumentationFramework

NAMES = ("a", "b", "c", "d")


@st.composite
def frameworks(draw, max_args=4, min_args=0):
    names = sorted(draw(st.sets(st.sampled_from(NAMES), min_size=min_args, max_size=max_args)))
    pairs = [(s, t) for s in names for t in names]
    if pairs:
        attacks = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs)))
    else:
        attacks = set()
    return ArgumentationFramework(names, attacks)


@pytest.fixture
def g3():
    return ArgumentationFramework(["1", "2", "3", "4"], [("1", "2"), ("2", "3")])


@pytest.fixture
def mutual():
    return ArgumentationFramework(["a", "b"], [("a", "b"), ("b", "a")])


@pytest.fixture
def self_loop():
    return ArgumentationFramework(["a"], [("a", "a")])


@pytest.fixture
def empty_af():
    return ArgumentationFramework()

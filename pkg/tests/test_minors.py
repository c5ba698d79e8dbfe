"""Tests for minor models, minor search and subdivisions."""
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minorhost.core.exceptions import BudgetExhausted, PreconditionError
from minorhost.graphs.families import FamilySpec, generate
from minorhost.graphs.graph import induced, make_graph, normalize
from minorhost.minors.bruteforce import has_minor_brute_force
from minorhost.minors.engine import (
    MinorModel,
    build_model,
    circumference_at_least,
    find_minor_model,
    find_subdivision,
    identity_model,
    is_minor_free,
    model_from_document,
    model_to_document,
    verify_model,
)
from minorhost.tasks.generators import random_graph, random_tree


def named(label):
    return generate(FamilySpec.parse(label))


K4 = normalize(nx.complete_graph(4))


def test_identity_model_verifies():
    """Singleton branch sets model a graph in itself."""
    assert verify_model(identity_model(K4)).valid


def test_arc_model_of_c4_in_c8():
    """Contracting alternate edges of C_8 gives C_4."""
    model = build_model(named("C4"), named("C8"), {0: {0, 1}, 1: {2, 3}, 2: {4, 5}, 3: {6, 7}})
    assert verify_model(model).valid


def test_disconnected_branch_set_reported():
    """A disconnected branch set is named in the violations."""
    host = named("P3")
    model = MinorModel(
        pattern=named("P1"),
        host=host,
        branch_sets={0: frozenset({0, 2}), 1: frozenset({1})},
        edge_witnesses={(0, 1): (0, 1)},
    )
    report = verify_model(model)
    assert not report.valid
    assert "branch set 0 is disconnected" in report.violations


def test_model_document_round_trip_verifies():
    """A model read back from its document still verifies."""
    model = find_minor_model(named("C4"), named("O5"))
    assert model is not None
    assert verify_model(model_from_document(model_to_document(model))).valid


@pytest.mark.parametrize(
    "pattern,host,expected",
    [
        (named("C4"), K4, True),
        (K4, named("C5"), False),
        (named("C3"), random_tree(random.Random(3), 12), False),
        (named("W5"), induced(named("D6"), set(range(7))), True),
    ],
)
def test_find_minor_model(pattern, host, expected):
    """Search finds exactly the minors that exist, with valid models."""
    model = find_minor_model(pattern, host)
    assert (model is not None) == expected
    if model is not None:
        assert verify_model(model).valid


def test_find_minor_model_budget():
    """A tiny budget gives an inconclusive outcome, never a silent no."""
    with pytest.raises(BudgetExhausted):
        find_minor_model(normalize(nx.complete_graph(5)), named("O5"), budget=5)


def test_disconnected_pattern_rejected():
    """Disconnected patterns are refused."""
    with pytest.raises(PreconditionError):
        find_minor_model(make_graph([0, 1], []), K4)


def test_is_minor_free():
    """Trees exclude C_3; K_4 contains W_3; long cycles contain C_4."""
    assert is_minor_free(random_tree(random.Random(1), 10), [named("C3")]).free
    assert is_minor_free(K4, [named("W3")]).status == "model_found"
    assert is_minor_free(named("C9"), [named("C4")]).status == "model_found"


def test_subdivision_of_triangle():
    """A subdivided triangle holds C_3 with one path of length 2."""
    host = make_graph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)])
    sub = find_subdivision(named("C3"), host)
    assert sub is not None
    assert sub.verify().valid
    assert sorted(len(p) - 1 for p in sub.paths.values()) == [1, 1, 2]


def test_subdivisions():
    """C_{3,3} subdivides into W_4; K_{1,4} does not fit in C_6."""
    sub = find_subdivision(named("C3,3"), named("W4"))
    assert sub is not None and sub.verify().valid
    assert verify_model(sub.to_model()).valid
    assert find_subdivision(named("K1,4"), named("C6")) is None


def test_circumference_at_least():
    """Cycles of at least the requested length, or None."""
    assert len(circumference_at_least(named("C7"), 5)) == 7
    assert circumference_at_least(random_tree(random.Random(2), 9), 3) is None
    assert len(circumference_at_least(named("C3,3"), 4)) == 4


@settings(max_examples=30, derandomize=True, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000), n=st.integers(min_value=1, max_value=6))
def test_search_agrees_with_contraction_oracle(seed, n):
    """Branch-set search and exhaustive contraction agree on small graphs."""
    g = random_graph(random.Random(seed), n)
    for pattern in (named("C3"), named("C4"), K4):
        assert (find_minor_model(pattern, g) is not None) == has_minor_brute_force(pattern, g)

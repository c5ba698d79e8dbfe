"""Tests for tree-decompositions, long-path lifting, minor parts, blocks and Tutte splits."""
import random

import networkx as nx
import pytest

from minorhost.core.exceptions import PreconditionError
from minorhost.decomposition.blocks import blocks
from minorhost.decomposition.longpath import ell, lift_long_path
from minorhost.decomposition.minor_part import locate_minor_part
from minorhost.decomposition.tree import TreeDecomposition, verify_decomposition
from minorhost.decomposition.tutte import TorsoKind, torso_model_sets, tutte_decomposition, verify_tutte
from minorhost.graphs.families import FamilySpec, generate
from minorhost.graphs.graph import make_graph, normalize
from minorhost.minors.engine import build_model, verify_model
from minorhost.tasks.generators import random_graph


def named(label):
    return generate(FamilySpec.parse(label))


def path_decomposition(length):
    return TreeDecomposition.from_bags([{i, i + 1} for i in range(length)], [(i, i + 1) for i in range(length - 1)])


def two_k4s():
    edges = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    edges += [(a, b) for a in range(3, 7) for b in range(a + 1, 7)]
    return make_graph(range(7), edges)


def subdivided_k4():
    edges = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 1)]
    return make_graph(range(5), edges)


@pytest.mark.parametrize("w,k,value", [(2, 2, 7), (3, 3, 46), (1, 1, 1), (5, 1, 1), (1, 3, 10)])
def test_ell(w, k, value):
    """The recurrence gives exact integers."""
    assert ell(w, k) == value


def test_ell_rejects_zero():
    """w and k start at 1."""
    with pytest.raises(PreconditionError):
        ell(0, 1)


def test_path_decomposition_is_valid():
    """Consecutive-pair bags decompose a path with width 1 and adhesion 1."""
    report = verify_decomposition(named("P3"), path_decomposition(3))
    assert report.valid
    assert (report.width, report.adhesion) == (1, 1)


def test_single_bag_width():
    """One bag holding K_4 has width 3 and no adhesion."""
    k4 = normalize(nx.complete_graph(4))
    report = verify_decomposition(k4, TreeDecomposition.from_bags([set(range(4))], []))
    assert report.valid
    assert (report.width, report.adhesion) == (3, 0)


def test_connectivity_violation_has_witness():
    """A vertex in two bags but not the bag between them is reported."""
    td = TreeDecomposition.from_bags([{0, 1}, {1, 2}, {0, 2}], [(0, 1), (1, 2)])
    report = verify_decomposition(named("P2"), td)
    assert not report.valid
    assert len(report.witnesses) == 1
    v, x, y, z = report.witnesses[0]
    assert (v, y) == (0, 1)
    assert {x, z} == {0, 2}


def test_missing_edge_reported():
    """Every graph edge must sit in some bag."""
    td = TreeDecomposition.from_bags([{0, 1}, {1, 2}], [(0, 1)])
    report = verify_decomposition(named("C3"), td)
    assert "edge 0-2 is in no bag" in report.violations


def test_lift_long_path():
    """A path of length 7 under width 1 forces a tree path of length 2."""
    result = lift_long_path(named("P7"), path_decomposition(7), k=2, w=2)
    assert result.length >= 2
    assert len(result.trace) == 1
    assert result.trace[0].piece_length >= result.trace[0].required


def test_lift_long_path_rejects_short_paths():
    """The graph path has to reach ell(w, k)."""
    with pytest.raises(PreconditionError) as info:
        lift_long_path(named("P5"), path_decomposition(5), k=2, w=2)
    assert info.value.measurements["required"] == 7


def test_lift_long_path_rejects_one_node_tree():
    """A single bag has no tree path of positive length."""
    with pytest.raises(PreconditionError):
        lift_long_path(named("P3"), TreeDecomposition.from_bags([set(range(4))], []), k=1)


def test_locate_minor_part():
    """The walk follows the branch sets into the second K_4 bag."""
    g = two_k4s()
    td = TreeDecomposition.from_bags([{0, 1, 2, 3}, {3, 4, 5, 6}], [(0, 1)])
    k4 = normalize(nx.complete_graph(4))
    model = build_model(k4, g, {0: {3}, 1: {4}, 2: {5}, 3: {6}})
    part = locate_minor_part(g, td, k4, model)
    assert part.node == 1
    assert part.walk == [0, 1]
    assert verify_model(part.model).valid


def test_locate_minor_part_needs_complete_adhesion():
    """Adhesion sets that are not cliques are refused."""
    g = named("C4")
    td = TreeDecomposition.from_bags([{0, 1, 2}, {0, 2, 3}], [(0, 1)])
    model = build_model(named("C3"), g, {0: {0}, 1: {1}, 2: {2, 3}})
    with pytest.raises(PreconditionError) as info:
        locate_minor_part(g, td, named("C3"), model)
    assert info.value.measurements["missing_edge"] == [0, 2]


def test_blocks():
    """Blocks come in a prefix-connected order with their attachments."""
    structure = blocks(make_graph(range(4), [(0, 1), (1, 2), (2, 0), (2, 3)]))
    assert [sorted(b.vertices) for b in structure.blocks] == [[0, 1, 2], [2, 3]]
    assert [b.attachment for b in structure.blocks] == [None, 2]
    assert structure.cutvertices == {2}
    assert len(blocks(named("P3")).blocks) == 3
    assert len(blocks(named("C3,3")).blocks) == 1


def test_tutte_of_cycle():
    """A cycle is a single Cycle torso."""
    tutte = tutte_decomposition(named("C5"))
    assert list(tutte.torso_kind.values()) == [TorsoKind.CYCLE]
    assert verify_tutte(named("C5"), tutte).valid


def test_tutte_of_edge():
    """K_2 is a single K2 torso."""
    tutte = tutte_decomposition(named("P1"))
    assert list(tutte.torso_kind.values()) == [TorsoKind.K2]


def test_tutte_of_subdivided_k4():
    """Splitting at the subdivided pair gives K_4 and a triangle sharing a virtual edge."""
    g = subdivided_k4()
    tutte = tutte_decomposition(g)
    assert sorted(k.value for k in tutte.torso_kind.values()) == ["Cycle", "ThreeConnected"]
    assert tutte.decomposition.adhesion == 2
    assert all(es == {(0, 1)} for es in tutte.virtual_edges.values())
    assert verify_tutte(g, tutte).valid
    for t in tutte.bags:
        model = build_model(tutte.torsos[t], g, torso_model_sets(tutte, t))
        assert verify_model(model).valid


def test_tutte_of_disconnected_graph():
    """Components join with empty adhesion."""
    g = make_graph(range(6), [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    tutte = tutte_decomposition(g)
    assert len(tutte.bags) == 2
    assert tutte.decomposition.adhesion == 0
    assert verify_tutte(g, tutte).valid


def test_tutte_rejects_empty_graph():
    """The empty graph has no torso to report."""
    with pytest.raises(PreconditionError):
        tutte_decomposition(make_graph([], []))


def test_tutte_random_graphs_verify():
    """Seeded random graphs always give a valid decomposition."""
    rng = random.Random(11)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 9))
        assert verify_tutte(g, tutte_decomposition(g)).valid

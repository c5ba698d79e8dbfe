"""Tests for the colored graph type, families, search and codecs."""
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minorhost.core.exceptions import PreconditionError, SizeCapExceeded, UnsupportedFamily
from minorhost.graphs.canonical import canonical_form, vertex_orbits
from minorhost.graphs.families import FamilySpec, cone, generate
from minorhost.graphs.formats import (
    from_json,
    read_edge_list,
    read_graph6,
    read_graphs,
    to_dot,
    to_graph6,
    to_json,
)
from minorhost.graphs.graph import make_graph, normalize, relabel
from minorhost.graphs.search import (
    are_isomorphic,
    circumference,
    find_induced_embedding,
    is_k4_minor_free,
    longest_path,
    path_length,
    vertex_connectivity,
)
from minorhost.tasks.generators import random_graph, random_series_parallel


def named(label):
    return generate(FamilySpec.parse(label))


@pytest.mark.parametrize(
    "label,vertices,edges",
    [("W5", 6, 10), ("C3,4", 5, 6), ("O5", 10, 15), ("D5", 7, 15), ("M4", 8, 12), ("K3,4", 7, 12)],
)
def test_family_sizes(label, vertices, edges):
    """Named families have the expected orders and sizes."""
    g = named(label)
    assert g.number_of_nodes() == vertices
    assert g.number_of_edges() == edges


def test_double_wheel_apexes_not_adjacent():
    """The two apexes of D_k are not joined."""
    g = named("D5")
    assert not g.has_edge(5, 6)
    assert g.degree(5) == g.degree(6) == 5


def test_family_out_of_range():
    """Parameters below the family minimum are rejected with measurements."""
    with pytest.raises(PreconditionError) as info:
        generate(FamilySpec.of("W", 2))
    assert info.value.measurements["minimum"] == 3


def test_family_unknown_name():
    """Unparseable names raise UnsupportedFamily."""
    with pytest.raises(UnsupportedFamily):
        FamilySpec.parse("X9")


def test_cone():
    """Coning a cycle gives the wheel; coning nothing gives K_1."""
    assert are_isomorphic(cone(named("C5")), named("W5"))
    assert cone(make_graph([], [])).number_of_nodes() == 1
    assert are_isomorphic(cone(named("C3")), normalize(nx.complete_graph(4)))


def test_make_graph_rejects_bad_input():
    """Loops and out-of-palette colors are refused."""
    with pytest.raises(PreconditionError):
        make_graph([0], [(0, 0)])
    with pytest.raises(PreconditionError):
        make_graph([0, 1], [(0, 1)], c=1, edge_colors={(0, 1): 1})


@pytest.mark.parametrize("label,length", [("C6", 5), ("K1,4", 2), ("O5", 9)])
def test_longest_path(label, length):
    """Exact longest paths on small named graphs."""
    assert path_length(longest_path(named(label))) == length


def test_longest_path_cap_is_per_component():
    """Two components under the cap are fine; one above it is refused."""
    two = nx.disjoint_union(nx.path_graph(20), nx.path_graph(20))
    assert path_length(longest_path(normalize(two), cap=25)) == 19
    with pytest.raises(SizeCapExceeded):
        longest_path(normalize(nx.path_graph(30)), cap=25)


def test_circumference():
    """Circumference is 0 on trees and the cycle length on cycles."""
    assert circumference(normalize(nx.path_graph(6))) == 0
    assert circumference(named("C7")) == 7


@pytest.mark.parametrize("g,expected", [(named("C5"), 2), (named("W4"), 3), (make_graph([0, 1], []), 0)])
def test_vertex_connectivity(g, expected):
    """Exact connectivity, 0 for disconnected graphs."""
    assert vertex_connectivity(g) == expected


def test_induced_embedding():
    """An edge sits induced in a triangle; C_4 does not sit induced in K_4."""
    assert find_induced_embedding(named("P1"), named("C3")) is not None
    assert find_induced_embedding(named("C4"), normalize(nx.complete_graph(4))) is None


def test_induced_embedding_respects_colors():
    """Vertex colors must match."""
    red = make_graph([0], [], d=2, vertex_colors={0: 1})
    blue = make_graph([0, 1], [(0, 1)], d=2)
    assert find_induced_embedding(red, blue) is None


def test_canonical_form():
    """Labels are invariant under relabeling and separate non-isomorphic graphs."""
    c5 = named("C5")
    rotated = relabel(c5, {v: (v + 2) % 5 for v in c5.nodes})
    assert canonical_form(c5) == canonical_form(rotated)
    assert canonical_form(named("P2")) == canonical_form(named("K1,2"))
    assert canonical_form(named("P3")) != canonical_form(named("K1,3"))


@settings(max_examples=40, derandomize=True, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000), n=st.integers(min_value=1, max_value=8))
def test_canonical_form_relabel_invariant(seed, n):
    """Random relabelings never change the canonical label."""
    rng = random.Random(seed)
    g = random_graph(rng, n)
    order = list(g.nodes)
    rng.shuffle(order)
    shuffled = relabel(g, dict(zip(sorted(g.nodes), order)))
    assert canonical_form(g) == canonical_form(shuffled)


def test_vertex_orbits():
    """The wheel hub is alone; the rim is one orbit."""
    assert vertex_orbits(named("W5")) == [[0], [1, 2, 3, 4, 5]]


def test_k4_minor_free():
    """Series-parallel graphs pass, K_4 and O_5 do not."""
    assert is_k4_minor_free(random_series_parallel(random.Random(7), 20))
    assert not is_k4_minor_free(normalize(nx.complete_graph(4)))
    assert not is_k4_minor_free(named("O5"))


def test_dot_lists_every_vertex():
    """The DOT text of W_5 has 6 node lines and 10 edge lines."""
    lines = to_dot(named("W5")).splitlines()
    assert sum(1 for line in lines if "[label=" in line and "--" not in line) == 6
    assert sum(1 for line in lines if "--" in line) == 10


def test_graph6_and_json():
    """graph6 keeps the structure; JSON keeps colors too."""
    back = read_graph6(to_graph6(named("C3,4")))[0]
    assert (back.number_of_nodes(), back.number_of_edges()) == (5, 6)

    g = make_graph([0, 1, 2], [(0, 1), (1, 2)], c=2, d=3, vertex_colors={2: 2}, edge_colors={(1, 2): 1})
    h = from_json(to_json(g))
    assert h.nodes[2]["color"] == 2
    assert h.edges[1, 2]["color"] == 1
    assert h.graph["c"] == 2 and h.graph["d"] == 3


def test_edge_list_rejects_short_line():
    """An edge line with one endpoint is a precondition error naming the line."""
    with pytest.raises(PreconditionError) as info:
        read_edge_list("3 2\n0 1\n2\n")
    assert info.value.measurements["line"] == 2


def test_edge_list_rejects_non_integers():
    with pytest.raises(PreconditionError):
        read_edge_list("3 1\n0 x\n")


@pytest.mark.parametrize("text,fmt", [("{not json", "json"), ('{"n": "many"}', "json"), ("!!", "g6")])
def test_malformed_input_is_a_precondition_error(text, fmt):
    """Decoder failures surface as PreconditionError, not raw ValueError."""
    with pytest.raises(PreconditionError):
        read_graphs(text, fmt)

"""Tests for forbidden families, pinned transforms, saturation and universal hosts."""
import random

import networkx as nx
import pytest

from minorhost.core.exceptions import (
    CatalogLimitExceeded,
    NotInClass,
    PreconditionError,
    UnsupportedFamily,
)
from minorhost.graphs.canonical import canonical_form
from minorhost.graphs.families import FamilySpec, generate
from minorhost.graphs.graph import edge_color, edge_key, make_graph, normalize
from minorhost.graphs.search import are_isomorphic, find_induced_embedding
from minorhost.minors.engine import verify_model
from minorhost.tasks.generators import random_tree
from minorhost.universal.families import path_family
from minorhost.universal.host import Backend, Piece, build_host, load_host, materialize, save_host
from minorhost.universal.embedding import embed
from minorhost.universal.models import check_class_equivalence, enumerate_forbidden_models
from minorhost.universal.saturation import (
    OMEGA,
    CatalogLimits,
    Pinned,
    build_catalog,
    expand,
    minimal_unfold,
    saturate,
)
from minorhost.universal.transform import PinnedTransform, transform_t, transform_t_inv
from minorhost.universal.verify import verify_host


def named(label):
    return generate(FamilySpec.parse(label))


def k23():
    return make_graph(range(5), [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])


def test_forbidden_models_of_triangle():
    """Without P_3 the only minimal triangle model is the triangle."""
    models = enumerate_forbidden_models(named("C3"), 3)
    assert len(models) == 1
    assert are_isomorphic(models[0], named("C3"))


def test_forbidden_models_empty_when_pattern_too_long():
    """A triangle already holds P_2, so no model survives n = 2."""
    assert enumerate_forbidden_models(named("C3"), 2) == []


def test_forbidden_models_of_edge():
    """An edge is its own only minimal model."""
    models = enumerate_forbidden_models(named("P1"), 3)
    assert len(models) == 1
    assert are_isomorphic(models[0], named("P1"))


def test_forbidden_models_reject_disconnected_pattern():
    """Patterns must be connected."""
    with pytest.raises(PreconditionError):
        enumerate_forbidden_models(make_graph([0, 1], []), 3)


@pytest.mark.parametrize("label", ["C4", "K1,3", "P5"])
def test_class_equivalence(label):
    """Minor-freeness and subgraph-freeness agree."""
    result = check_class_equivalence(named(label), named("C3"), 3)
    assert result.status == "ok"
    assert result.equal is True


def test_pinned_transform_codes():
    """Attachment digits pack into one color and unpack again."""
    pt = PinnedTransform.from_path(named("P1"), [0, 1])
    assert pt.d_prime == 4
    assert pt.encode(0, [1, 0]) == 1
    assert pt.decode(2) == (0, [0, 1])
    with pytest.raises(PreconditionError):
        pt.decode(4)


def test_transform_inverse_restores_graph():
    """Pinning an edge of C_4 and undoing it gives C_4 back."""
    c4 = named("C4")
    pt = PinnedTransform.from_path(c4, [0, 1])
    rest = transform_t(c4, pt)
    assert sorted(rest.nodes) == [2, 3]
    back = transform_t_inv(rest, pt)
    assert {edge_key(u, v) for u, v in back.edges} == {edge_key(u, v) for u, v in c4.edges}


def test_transform_inverse_rejects_overlap():
    """The inverse needs a graph disjoint from the pin."""
    pt = PinnedTransform.from_path(named("C4"), [0, 1])
    with pytest.raises(PreconditionError):
        transform_t_inv(make_graph([1], [], d=4), pt)


def test_saturate_star():
    """Three equal leaves of K_{1,5} reach the threshold and become omega."""
    star = named("K1,5")
    omega = saturate(star, path_family(3), 3)
    root = omega.components[0].node
    assert isinstance(root, Pinned)
    assert len(root.inner.components) == 1
    inner = root.inner.components[0]
    assert inner.multiplicity == OMEGA
    assert inner.observed == 3
    assert minimal_unfold(omega) == 3
    assert are_isomorphic(expand(omega, 3), star)
    bigger = expand(omega, 5)
    assert bigger.number_of_nodes() == 8
    assert path_family(3).is_free(bigger)


def test_saturate_rejects_forbidden_guest():
    """A guest that already holds P_3 cannot be saturated against it."""
    with pytest.raises(PreconditionError):
        saturate(named("P4"), path_family(3), 3)


def test_saturate_needs_path_member():
    """The family has to exclude every coloring of P_n."""
    with pytest.raises(PreconditionError):
        saturate(named("P1"), [named("C3")], 3)


def test_catalog_for_short_paths():
    """Without P_2 the connected graphs are K_1 and K_2 and the catalog closes."""
    catalog = build_catalog(path_family(2), 1, 1, 2)
    assert catalog.complete
    assert len(catalog.members) == 2


def test_catalog_refuses_stable_stop_by_default():
    """Stars never run out, so a P_3-free catalog only stabilizes; that is refused."""
    with pytest.raises(CatalogLimitExceeded):
        build_catalog(path_family(3), 1, 1, 3, CatalogLimits(stable_levels=1))


def test_stable_catalog_covers_larger_graphs():
    """An accepted stable catalog still hosts stars bigger than anything it enumerated."""
    catalog = build_catalog(path_family(3), 1, 1, 3, CatalogLimits(stable_levels=1, accept_stable=True))
    assert catalog.stable
    assert not catalog.complete
    star = named("K1,9")
    assert star.number_of_nodes() > catalog.max_vertices
    assert any(find_induced_embedding(star, expand(m, 9)) is not None for m in catalog.members)


def test_fresh_host_is_a_single_vertex():
    """A new host is just its root."""
    assert materialize(build_host("C3")).number_of_nodes() == 1


def test_embed_edge():
    """One edge makes one piece; embedding it again reuses that piece."""
    host = build_host("C3")
    cert = embed(named("P1"), host)
    assert cert.verify()
    assert materialize(host).number_of_nodes() == 2
    again = embed(named("P1"), host)
    assert again.verify()
    assert len(host.pieces) == 1


def test_embed_rejects_guest_outside_class():
    """K_4 is not K_4-minor-free; the violating model comes back."""
    with pytest.raises(NotInClass) as info:
        embed(normalize(nx.complete_graph(4)), build_host("W3"))
    assert verify_model(info.value.model).valid


def test_unsupported_host_family():
    """Only cycles, cycle pairs and wheels have hosts."""
    with pytest.raises(UnsupportedFamily):
        build_host("D5")


def test_padded_cycle_host_is_a_forest():
    """Padding a triangle-free host keeps it a forest and verifiable."""
    host = build_host("C3")
    rng = random.Random(5)
    for _ in range(5):
        embed(random_tree(rng, 15), host)
    truncation = materialize(host, 500)
    assert truncation.number_of_nodes() >= 500
    assert nx.is_forest(truncation)
    assert verify_host(host, 500).free


def test_corrupted_cycle_host_reported():
    """Two pieces sharing two vertices break the gluing shape."""
    host = build_host("C3")
    host.pieces.append(Piece(index=0, tag=2, graph=make_graph([0, 1], [(0, 1)]), glue=(0,)))
    host.pieces.append(Piece(index=1, tag=2, graph=make_graph([0, 1, 2], [(0, 2), (2, 1)]), glue=(0,), parent=0))
    host.next_vertex = 3
    report = verify_host(host)
    assert not report.free
    assert "pieces 0 and 1 share 2 vertices" in report.violations
    assert not report.checks["piece_structure"]


def test_wheel_host_records_virtual_edges():
    """K_{2,3} splits at its degree-3 pair; the pair maps onto a virtual host edge."""
    host = build_host("W3")
    cert = embed(k23(), host)
    assert cert.verify()
    a, b = cert.map[0], cert.map[1]
    assert cert.virtual_images == [edge_key(a, b)]
    star = materialize(host, star=True)
    assert edge_color(star, a, b) == 1
    assert not materialize(host).has_edge(a, b)
    assert verify_host(host).free


def test_save_and_load_host(tmp_path):
    """A saved host reloads with the same pieces and truncation."""
    host = build_host("C4")
    embed(named("K1,3"), host)
    embed(named("P3"), host)
    target = tmp_path / "host.json"
    save_host(host, target)
    loaded = load_host(target)
    assert loaded.forbidden.label == "C4"
    assert loaded.next_vertex == host.next_vertex
    assert len(loaded.pieces) == len(host.pieces)
    assert canonical_form(materialize(loaded)) == canonical_form(materialize(host))


def test_catalog_backend_embeds_trees():
    """Pieces drawn from saturations host random trees and keep the host free."""
    host = build_host("C4", Backend.CATALOG.value)
    rng = random.Random(8)
    for _ in range(4):
        cert = embed(random_tree(rng, 6), host)
        assert cert.verify()
    assert host.backend == Backend.CATALOG
    assert verify_host(host).free

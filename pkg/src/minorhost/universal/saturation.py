"""Saturation: finite descriptions of the infinite graphs that absorb a connected guest.

A description is a tree of nodes. A leaf is a finite colored graph. A
pinned node holds a ``PinnedTransform`` and an ``OmegaGraph`` of inner
components; the graph it stands for is the pin plus those components,
each reattached by decoding its colors. Inner components that occurred at
least ``k - 1`` times (``k`` being the largest forbidden vertex count) are
repeated without bound (multiplicity ``"omega"``).
"""
import json
from itertools import combinations, count, product
from typing import Any, Iterator, Literal, Optional, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from minorhost.core.config import settings
from minorhost.core.exceptions import CatalogLimitExceeded, PreconditionError
from minorhost.core.logging import get_logger
from minorhost.graphs.canonical import canonical_form
from minorhost.graphs.graph import edge_color, induced, make_graph, palette, relabel, vertex_color
from minorhost.graphs.search import longest_path, path_length
from minorhost.universal.families import Forbidden, LocalFamily, as_family
from minorhost.universal.transform import PinnedTransform, transform_t, transform_t_inv

logger = get_logger(__name__)

OMEGA = "omega"
Multiplicity = Union[int, Literal["omega"]]


class Leaf(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["leaf"] = "leaf"
    graph: Any


class Pinned(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["pinned"] = "pinned"
    transform: PinnedTransform
    inner: "OmegaGraph"


SaturationNode = Union[Leaf, Pinned]


class OmegaComponent(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    node: SaturationNode
    multiplicity: Multiplicity
    observed: int = Field(1, description="copies present in the graph that was saturated")


class OmegaGraph(BaseModel):
    """Disjoint union of described components, with multiplicities."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    c: int = 1
    d: int = 1
    components: list[OmegaComponent] = Field(default_factory=list)

    def key(self) -> str:
        return json.dumps(
            sorted([node_key(comp.node), _mult_key(comp.multiplicity)] for comp in self.components),
            separators=(",", ":"),
        )


Pinned.model_rebuild()
OmegaComponent.model_rebuild()
OmegaGraph.model_rebuild()


def _mult_key(m: Multiplicity) -> int:
    return -1 if m == OMEGA else int(m)


def _pin_signature(pt: PinnedTransform) -> list:
    position = {p: i for i, p in enumerate(pt.path)}
    colors = [vertex_color(pt.pin, p) for p in pt.path]
    edges = sorted(
        [min(position[u], position[v]), max(position[u], position[v]), edge_color(pt.pin, u, v)]
        for u, v in pt.pin.edges
    )
    return [pt.c, pt.d, colors, edges]


def node_key(node: SaturationNode) -> str:
    """Structural key; equal keys describe isomorphic graphs."""
    if isinstance(node, Leaf):
        return json.dumps(["leaf", canonical_form(node.graph).decode()], separators=(",", ":"))
    return json.dumps(["pinned", _pin_signature(node.transform), node.inner.key()], separators=(",", ":"))


def add_multiplicities(a: Multiplicity, b: Multiplicity) -> Multiplicity:
    if a == OMEGA or b == OMEGA:
        return OMEGA
    return int(a) + int(b)


def merge_components(components: list[OmegaComponent]) -> list[OmegaComponent]:
    """Merge entries with equal structural keys; anything plus omega is omega."""
    merged: dict[str, OmegaComponent] = {}
    for comp in components:
        key = node_key(comp.node)
        if key in merged:
            old = merged[key]
            comp = OmegaComponent(
                node=old.node,
                multiplicity=add_multiplicities(old.multiplicity, comp.multiplicity),
                observed=old.observed + comp.observed,
            )
        merged[key] = comp
    return [merged[k] for k in sorted(merged)]


class _Saturator:
    def __init__(self, member_cap: int):
        self.member_cap = member_cap
        self.nodes = 0

    def run(self, g: nx.Graph, family: Forbidden, n: int, depth: int = 0) -> SaturationNode:
        self.nodes += 1
        if g.number_of_nodes() > self.member_cap:
            raise CatalogLimitExceeded(
                "saturation refused a component above the member cap",
                {"vertices": g.number_of_nodes(), "cap": self.member_cap, "depth": depth, "n": n},
            )
        if n <= 1:
            return Leaf(graph=g)

        p = longest_path(g, cap=self.member_cap)
        if path_length(p) < n - 1:
            return self.run(g, family.with_paths(n - 1), n - 1, depth + 1)

        pt = PinnedTransform.from_path(g, p)
        rest = transform_t(g, pt)
        threshold = max(family.k - 1, 1)
        found: list[OmegaComponent] = []
        for comp in sorted(nx.connected_components(rest), key=min):
            part = induced(rest, comp)
            local = LocalFamily(template=part, size=family.k, c=pt.c, d=pt.d_prime)
            child = self.run(part, local, n - 1, depth + 1)
            found.append(OmegaComponent(node=child, multiplicity=1, observed=1))

        inner = [
            comp.model_copy(update={"multiplicity": OMEGA if comp.observed >= threshold else comp.observed})
            for comp in merge_components(found)
        ]
        return Pinned(transform=pt, inner=OmegaGraph(c=pt.c, d=pt.d_prime, components=inner))


def saturate(g: nx.Graph, forbidden: Any, n: int, member_cap: Optional[int] = None) -> OmegaGraph:
    """Describe a forbidden-free graph that contains ``g`` and absorbs its repeated parts.

    ``forbidden`` must exclude every coloring of ``P_n``; ``g`` must be
    connected and forbidden-free.
    """
    c, d = palette(g)
    family = as_family(forbidden, c, d)
    if g.number_of_nodes() == 0 or not nx.is_connected(g):
        raise PreconditionError("saturation needs a connected non-empty graph", {"vertices": g.number_of_nodes()})
    bound = family.path_bound()
    if bound is None or bound > n:
        raise PreconditionError("family must forbid every coloring of P_n", {"n": n, "path_bound": bound})
    witness = family.witness(g)
    if witness is not None:
        raise PreconditionError("graph contains a forbidden subgraph", {"witness": _plain(witness)})

    saturator = _Saturator(settings.catalog_member_cap if member_cap is None else member_cap)
    root = saturator.run(g, family, n)
    logger.debug("saturated", extra={"vertices": g.number_of_nodes(), "n": n, "nodes": saturator.nodes})
    return OmegaGraph(c=c, d=d, components=[OmegaComponent(node=root, multiplicity=1, observed=1)])


def _plain(witness: dict[str, Any]) -> dict[str, Any]:
    return {k: ({str(a): b for a, b in v.items()} if isinstance(v, dict) else v) for k, v in witness.items()}


def _expand_node(node: SaturationNode, unfold: int, ids: Iterator[int]) -> nx.Graph:
    if isinstance(node, Leaf):
        return relabel(node.graph, {v: next(ids) for v in sorted(node.graph.nodes)})
    pt = node.transform
    mapping = {v: next(ids) for v in pt.path}
    moved = PinnedTransform(
        path=tuple(mapping[v] for v in pt.path), pin=relabel(pt.pin, mapping), c=pt.c, d=pt.d
    )
    return transform_t_inv(_expand(node.inner, unfold, ids), moved)


def _expand(omega: OmegaGraph, unfold: int, ids: Iterator[int]) -> nx.Graph:
    g = nx.Graph()
    for comp in omega.components:
        copies = unfold if comp.multiplicity == OMEGA else int(comp.multiplicity)
        for _ in range(copies):
            g.update(_expand_node(comp.node, unfold, ids))
    g.graph.update(c=omega.c, d=omega.d)
    return nx.freeze(g)


def expand(omega: OmegaGraph, unfold: int = 1) -> nx.Graph:
    """Finite expansion: every omega multiplicity becomes ``unfold`` copies."""
    if unfold < 1:
        raise PreconditionError("unfold must be positive", {"unfold": unfold})
    return _expand(omega, unfold, count())


def minimal_unfold(omega: OmegaGraph) -> int:
    """Smallest unfold whose expansion still holds every copy that was observed."""
    best = 1
    for comp in omega.components:
        if comp.multiplicity == OMEGA:
            best = max(best, comp.observed)
        if isinstance(comp.node, Pinned):
            best = max(best, minimal_unfold(comp.node.inner))
    return best


class CatalogLimits(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_vertices: int = Field(default_factory=lambda: settings.catalog_max_vertices)
    max_graphs: int = Field(default_factory=lambda: settings.catalog_max_graphs)
    stable_levels: int = 2
    accept_stable: bool = False


class Catalog(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    members: list[OmegaGraph]
    complete: bool = Field(..., description="every connected free graph was enumerated")
    stable: bool = Field(False, description="the last levels produced no new description")
    max_vertices: int
    graphs: int


_CATALOGS: dict[tuple, Catalog] = {}


def _extensions(g: nx.Graph, c: int, d: int) -> Iterator[nx.Graph]:
    """Connected one-vertex extensions of ``g`` over the full palette."""
    new = g.number_of_nodes()
    old = sorted(g.nodes)
    for size in range(1, len(old) + 1):
        for nbrs in combinations(old, size):
            for colors in product(range(c), repeat=size):
                for vcol in range(d):
                    yield make_graph(
                        [*old, new],
                        [*g.edges, *((new, w) for w in nbrs)],
                        c=c,
                        d=d,
                        vertex_colors={**{v: vertex_color(g, v) for v in old}, new: vcol},
                        edge_colors={
                            **{(u, v): edge_color(g, u, v) for u, v in g.edges},
                            **{(new, w): col for w, col in zip(nbrs, colors)},
                        },
                    )


def build_catalog(
    forbidden: Any, c: int, d: int, n: int, limits: Optional[CatalogLimits] = None
) -> Catalog:
    """Saturations of every connected forbidden-free ``(c, d)``-graph, level by level.

    Stops when a level is empty (complete) or after ``stable_levels``
    levels without a new description (stable). A stable stop has not seen
    every free graph, so it is refused unless ``limits.accept_stable`` is
    set; reaching ``max_vertices`` first is always refused.
    """
    family = as_family(forbidden, c, d)
    limits = limits or CatalogLimits()
    bound = family.path_bound()
    if bound is None or bound > n:
        raise PreconditionError("family must forbid every coloring of P_n", {"n": n, "path_bound": bound})
    cache_key = (repr(family.key()), c, d, n, *limits.model_dump().values())
    if cache_key in _CATALOGS:
        return _CATALOGS[cache_key]

    members: dict[str, OmegaGraph] = {}
    level = [make_graph([0], [], c=c, d=d, vertex_colors={0: col}) for col in range(d)]
    level = [g for g in level if family.is_free(g)]
    total = 0
    quiet = 0
    size = 1
    complete = stable = False
    while True:
        fresh = 0
        for g in level:
            omega = saturate(g, family, n)
            key = omega.key()
            if key not in members:
                members[key] = omega
                fresh += 1
        total += len(level)
        quiet = 0 if fresh else quiet + 1
        logger.debug("catalog level", extra={"vertices": size, "graphs": len(level), "new": fresh})
        if quiet >= limits.stable_levels and size > 1:
            if not limits.accept_stable:
                raise CatalogLimitExceeded(
                    "catalog stabilized without closing; pass accept_stable for a partial catalog",
                    {"vertices": size, "graphs": total, "members": len(members), "quiet_levels": quiet},
                )
            stable = True
            break
        if size >= limits.max_vertices:
            raise CatalogLimitExceeded(
                "catalog did not close within the vertex limit",
                {"vertices": size, "graphs": total, "members": len(members), "limit": limits.max_vertices},
            )
        seen: dict[bytes, nx.Graph] = {}
        for g in level:
            for h in _extensions(g, c, d):
                form = canonical_form(h)
                if form in seen or not family.is_free(h):
                    continue
                seen[form] = h
                if total + len(seen) > limits.max_graphs:
                    raise CatalogLimitExceeded(
                        "catalog enumeration exceeded the graph limit",
                        {"vertices": size + 1, "graphs": total + len(seen), "limit": limits.max_graphs},
                    )
        level = [seen[k] for k in sorted(seen)]
        size += 1
        if not level:
            complete = True
            break

    catalog = Catalog(
        members=[members[k] for k in sorted(members)],
        complete=complete,
        stable=stable,
        max_vertices=size,
        graphs=total,
    )
    _CATALOGS[cache_key] = catalog
    return catalog

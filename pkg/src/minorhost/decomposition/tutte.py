"""Tree-decompositions of adhesion at most two with 3-connected, cycle, K1 or K2 torsos.

Each block is split recursively at 2-separations: the lexicographically
least separating pair ``{a, b}`` is chosen, the side holding the least
remaining vertex comes first, and both sides receive the edge ``ab``
(virtual when ``ab`` is not a graph edge). Blocks are then joined at their
cutvertices and components with empty adhesion.
"""
from enum import Enum
from itertools import combinations
from typing import Any

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from minorhost.core.exceptions import CounterexampleCandidate, PreconditionError
from minorhost.core.logging import get_logger
from minorhost.decomposition.blocks import blocks
from minorhost.decomposition.tree import TreeDecomposition, torso, verify_decomposition
from minorhost.graphs.graph import Edge, edge_key
from minorhost.graphs.search import vertex_connectivity
from minorhost.schemas.schemas import TreeDecompositionDocument

logger = get_logger(__name__)


class TorsoKind(str, Enum):
    THREE_CONNECTED = "ThreeConnected"
    CYCLE = "Cycle"
    K1 = "K1"
    K2 = "K2"


class TutteDecomposition(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    decomposition: TreeDecomposition
    torsos: dict[int, Any]
    torso_kind: dict[int, TorsoKind]
    virtual_edges: dict[int, frozenset[Edge]]
    path_witnesses: dict[tuple[int, Edge], tuple[int, ...]]

    @property
    def tree(self) -> nx.Graph:
        return self.decomposition.tree

    @property
    def bags(self) -> dict[int, frozenset[int]]:
        return self.decomposition.bags

    def to_document(self) -> TreeDecompositionDocument:
        doc = self.decomposition.to_document()
        doc.torso_kind = {str(t): k.value for t, k in sorted(self.torso_kind.items())}
        doc.virtual_edges = {str(t): sorted([list(e) for e in es]) for t, es in sorted(self.virtual_edges.items())}
        doc.path_witnesses = {
            f"{t}:{a}-{b}": list(p) for (t, (a, b)), p in sorted(self.path_witnesses.items())
        }
        return doc


def classify(h: nx.Graph) -> TorsoKind:
    """Kind of a torso; raises if it is none of the four."""
    n = h.number_of_nodes()
    if n == 1:
        return TorsoKind.K1
    if n == 2 and h.number_of_edges() == 1:
        return TorsoKind.K2
    if n >= 3 and nx.is_connected(h) and all(d == 2 for _, d in h.degree):
        return TorsoKind.CYCLE
    if n >= 4 and vertex_connectivity(h) >= 3:
        return TorsoKind.THREE_CONNECTED
    raise CounterexampleCandidate("torso is not 3-connected, a cycle, K1 or K2", {"vertices": sorted(h.nodes)})


def _is_leaf(h: nx.Graph) -> bool:
    if h.number_of_nodes() <= 3:
        return True
    if all(d == 2 for _, d in h.degree):
        return True
    return vertex_connectivity(h) >= 3


def _separation(h: nx.Graph) -> tuple[int, int, set[int]]:
    """Least separating pair and the first side's extra vertices."""
    for a, b in combinations(sorted(h.nodes), 2):
        rest = h.subgraph(set(h.nodes) - {a, b})
        comps = list(nx.connected_components(rest))
        if len(comps) > 1:
            first = min(comps, key=min)
            return a, b, set(first)
    raise CounterexampleCandidate("2-connected graph without a 2-separation is not 3-connected", {"vertices": sorted(h.nodes)})


class _Builder:
    def __init__(self) -> None:
        self.bags: dict[int, frozenset[int]] = {}
        self.edges: list[tuple[int, int]] = []

    def node(self, bag: set[int]) -> int:
        t = len(self.bags)
        self.bags[t] = frozenset(bag)
        return t

    def holder(self, nodes: list[int], vertices: set[int]) -> int:
        return min(t for t in nodes if vertices <= self.bags[t])

    def split(self, h: nx.Graph) -> list[int]:
        """Decompose a 2-connected torso graph; returns its tree nodes."""
        if _is_leaf(h):
            return [self.node(set(h.nodes))]
        a, b, first = _separation(h)
        side1 = nx.Graph(h.subgraph(first | {a, b}))
        side2 = nx.Graph(h.subgraph(set(h.nodes) - first))
        side1.add_edge(a, b)
        side2.add_edge(a, b)
        left = self.split(side1)
        right = self.split(side2)
        self.edges.append((self.holder(left, {a, b}), self.holder(right, {a, b})))
        return left + right


def tutte_decomposition(g: nx.Graph) -> TutteDecomposition:
    """Decompose ``g``; torsos are 3-connected, cycles, K1 or K2 and adhesion is at most 2."""
    if g.number_of_nodes() == 0:
        raise PreconditionError("the empty graph has no tree-decomposition with a torso", {"vertices": 0})

    builder = _Builder()
    structure = blocks(g)
    component_roots: list[int] = []
    nodes_by_component: dict[int, list[int]] = {}
    for block in structure.blocks:
        h = nx.Graph(g.subgraph(block.vertices))
        if len(block.vertices) <= 2:
            new = [builder.node(set(block.vertices))]
        else:
            new = builder.split(h)
        earlier = nodes_by_component.setdefault(block.component, [])
        if block.attachment is not None:
            builder.edges.append(
                (builder.holder(earlier, {block.attachment}), builder.holder(new, {block.attachment}))
            )
        elif not earlier:
            component_roots.append(new[0])
        earlier.extend(new)
    for root in component_roots[1:]:
        builder.edges.append((component_roots[0], root))

    td = TreeDecomposition.from_bags(dict(builder.bags), builder.edges)
    torsos: dict[int, nx.Graph] = {}
    kinds: dict[int, TorsoKind] = {}
    virtual: dict[int, frozenset[Edge]] = {}
    witnesses: dict[tuple[int, Edge], tuple[int, ...]] = {}
    for t in sorted(td.bags):
        h = torso(g, td, t)
        torsos[t] = h
        kinds[t] = classify(h)
        extra = frozenset(edge_key(u, v) for u, v in h.edges if not g.has_edge(u, v))
        virtual[t] = extra
        for a, b in sorted(extra):
            avoid = nx.Graph(g)
            avoid.remove_nodes_from(td.bags[t] - {a, b})
            try:
                witnesses[(t, (a, b))] = tuple(nx.shortest_path(avoid, a, b))
            except nx.NetworkXNoPath as e:
                raise CounterexampleCandidate(
                    "virtual edge without an outside path", {"node": t, "edge": [a, b]}
                ) from e

    logger.debug("tutte decomposition built", extra={"vertices": g.number_of_nodes(), "nodes": len(td.bags)})
    return TutteDecomposition(
        decomposition=td, torsos=torsos, torso_kind=kinds, virtual_edges=virtual, path_witnesses=witnesses
    )


class TutteReport(BaseModel):
    valid: bool
    violations: list[str] = Field(default_factory=list)

    def __bool__(self) -> bool:
        return self.valid


def verify_tutte(g: nx.Graph, tutte: TutteDecomposition) -> TutteReport:
    """Re-check every Tutte invariant independently of how it was built."""
    violations: list[str] = []
    report = verify_decomposition(g, tutte.decomposition)
    violations += report.violations
    if report.adhesion > 2:
        violations.append(f"adhesion {report.adhesion} exceeds 2")
    for t in sorted(tutte.bags):
        h = torso(g, tutte.decomposition, t)
        try:
            kind = classify(h)
        except CounterexampleCandidate:
            violations.append(f"torso {t} has no valid kind")
            continue
        if kind != tutte.torso_kind.get(t):
            violations.append(f"torso {t} declared {tutte.torso_kind.get(t)} but is {kind.value}")
        expected = {edge_key(u, v) for u, v in h.edges if not g.has_edge(u, v)}
        if expected != set(tutte.virtual_edges.get(t, ())):
            violations.append(f"torso {t} virtual edges mismatch")
        for a, b in sorted(expected):
            path = tutte.path_witnesses.get((t, (a, b)))
            if not path or {path[0], path[-1]} != {a, b}:
                violations.append(f"virtual edge {a}-{b} at {t} has no witness")
                continue
            if len(set(path)) != len(path) or any(not g.has_edge(x, y) for x, y in zip(path, path[1:])):
                violations.append(f"witness for {a}-{b} at {t} is not a path of the graph")
            if set(path[1:-1]) & tutte.bags[t]:
                violations.append(f"witness for {a}-{b} at {t} enters the part")
    return TutteReport(valid=not violations, violations=violations)


def torso_model_sets(tutte: TutteDecomposition, t: int) -> dict[int, set[int]]:
    """Branch sets showing the torso at ``t`` is a minor of the graph.

    Each virtual edge's witness interior joins the branch set of one end;
    interiors for different virtual edges of one torso are disjoint because
    they lie in different components outside the part.
    """
    sets = {v: {v} for v in tutte.bags[t]}
    for a, b in sorted(tutte.virtual_edges[t]):
        sets[a] |= set(tutte.path_witnesses[(t, (a, b))][1:-1])
    return sets

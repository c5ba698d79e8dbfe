"""Canonical labels by color refinement plus individualization.

The label is the lexicographically largest adjacency encoding over all
leaves of the individualization-refinement tree. Swapping two twin
vertices is an automorphism, so only one twin per class is individualized.
"""
import json
from typing import Optional

import networkx as nx

from minorhost.core.config import settings
from minorhost.core.exceptions import BudgetExhausted
from minorhost.graphs.graph import edge_color, make_graph, palette, vertex_color

Coloring = dict[int, int]


def _rank(signatures: dict[int, tuple]) -> Coloring:
    ranks = {sig: i for i, sig in enumerate(sorted(set(signatures.values())))}
    return {v: ranks[sig] for v, sig in signatures.items()}


def refine(g: nx.Graph, coloring: Coloring) -> Coloring:
    """Refine until stable; colors stay isomorphism-invariant integers."""
    current = coloring
    while True:
        signatures = {
            v: (current[v], tuple(sorted((edge_color(g, v, w), current[w]) for w in g[v])))
            for v in g.nodes
        }
        refined = _rank(signatures)
        if len(set(refined.values())) == len(set(current.values())):
            return refined
        current = refined


def _individualize(coloring: Coloring, v: int) -> Coloring:
    return _rank({w: (col, 0 if w == v else 1) for w, col in coloring.items()})


def _twin_classes(g: nx.Graph) -> dict[int, int]:
    """Map each vertex to the least vertex of its twin class."""

    def profile(v: int, other: int) -> tuple:
        return (
            vertex_color(g, v),
            tuple(sorted((w, edge_color(g, v, w)) for w in g[v] if w != other)),
        )

    rep: dict[int, int] = {}
    members: dict[int, list[int]] = {}
    for v in sorted(g.nodes):
        for r, group in members.items():
            if all(profile(v, u) == profile(u, v) for u in group):
                rep[v] = r
                group.append(v)
                break
        else:
            rep[v] = v
            members[v] = [v]
    return rep


class _Canonizer:
    def __init__(self, g: nx.Graph, budget: Optional[int]):
        self.g = g
        self.budget = settings.canonical_budget if budget is None else budget
        self.nodes = 0
        self.twins = _twin_classes(g)
        self.best: Optional[tuple] = None

    def encode(self, coloring: Coloring) -> tuple:
        position = coloring
        vcols = [0] * len(position)
        for v, i in position.items():
            vcols[i] = vertex_color(self.g, v)
        edges = sorted(
            (min(position[u], position[v]), max(position[u], position[v]), edge_color(self.g, u, v))
            for u, v in self.g.edges
        )
        return (len(position), tuple(vcols), tuple(edges))

    def search(self, coloring: Coloring) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted("canonical_form", self.nodes, self.budget)
        cells: dict[int, list[int]] = {}
        for v, col in coloring.items():
            cells.setdefault(col, []).append(v)
        open_cells = [(len(vs), col) for col, vs in cells.items() if len(vs) > 1]
        if not open_cells:
            leaf = self.encode(coloring)
            if self.best is None or leaf > self.best:
                self.best = leaf
            return
        _, target = min(open_cells)
        tried: set[int] = set()
        for v in sorted(cells[target]):
            if self.twins[v] in tried:
                continue
            tried.add(self.twins[v])
            self.search(refine(self.g, _individualize(coloring, v)))


def canonical_form(g: nx.Graph, budget: Optional[int] = None) -> bytes:
    """Canonical label: equal iff the colored graphs are isomorphic.

    The palette sizes ``c`` and ``d`` are not part of the label.
    """
    if g.number_of_nodes() == 0:
        return b"[0,[],[]]"
    start = _rank({v: (vertex_color(g, v), g.degree(v)) for v in g.nodes})
    canon = _Canonizer(g, budget)
    canon.search(refine(g, start))
    assert canon.best is not None
    n, vcols, edges = canon.best
    return json.dumps([n, list(vcols), [list(e) for e in edges]], separators=(",", ":")).encode()


def canonical_graph(g: nx.Graph, budget: Optional[int] = None) -> nx.Graph:
    """The canonical representative, relabeled 0..n-1, palette kept."""
    n, vcols, edges = json.loads(canonical_form(g, budget))
    c, d = palette(g)
    return make_graph(
        range(n),
        [(u, v) for u, v, _ in edges],
        c=c,
        d=d,
        vertex_colors=dict(enumerate(vcols)),
        edge_colors={(u, v): col for u, v, col in edges},
    )


def vertex_orbits(g: nx.Graph, budget: Optional[int] = None) -> list[list[int]]:
    """Vertex symmetry classes, each sorted, ordered by least member."""
    c, d = palette(g)
    labels: dict[bytes, list[int]] = {}
    for v in sorted(g.nodes):
        marked = nx.Graph(g)
        marked.graph["d"] = d + 1
        marked.nodes[v]["color"] = d
        labels.setdefault(canonical_form(marked, budget), []).append(v)
    return sorted(labels.values(), key=lambda orbit: orbit[0])

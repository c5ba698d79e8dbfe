"""Colored graph value type.

A graph is a frozen ``networkx.Graph`` with integer vertex ids. Vertex and
edge colors live in the ``color`` attribute (missing means 0) and the
palette sizes ``c`` (edge colors) and ``d`` (vertex colors) live in
``graph.graph``. An uncolored graph is simply the c = 1, d = 1 case.
"""
from typing import Iterable, Mapping, Optional

import networkx as nx

from minorhost.core.exceptions import PreconditionError

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Return the unordered edge ``uv`` as a sorted tuple."""
    return (u, v) if u <= v else (v, u)


def make_graph(
    vertices: Iterable[int],
    edges: Iterable[tuple[int, int]],
    c: int = 1,
    d: int = 1,
    vertex_colors: Optional[Mapping[int, int]] = None,
    edge_colors: Optional[Mapping[Edge, int]] = None,
    frozen: bool = True,
) -> nx.Graph:
    """Build a simple colored graph, rejecting loops, parallel edges and bad colors."""
    if c < 1 or d < 1:
        raise PreconditionError("palette sizes must be positive", {"c": c, "d": d})
    vcol = dict(vertex_colors or {})
    ecol = {edge_key(*e): col for e, col in (edge_colors or {}).items()}

    g = nx.Graph(c=c, d=d)
    for v in vertices:
        g.add_node(int(v), color=int(vcol.get(v, 0)))
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise PreconditionError("self-loops are not allowed", {"vertex": u})
        if u not in g or v not in g:
            raise PreconditionError("edge endpoint is not a vertex", {"edge": [u, v]})
        if g.has_edge(u, v):
            raise PreconditionError("parallel edges are not allowed", {"edge": [u, v]})
        g.add_edge(u, v, color=int(ecol.get(edge_key(u, v), 0)))

    validate_colors(g)
    return nx.freeze(g) if frozen else g


def validate_colors(g: nx.Graph) -> None:
    """Raise if any color lies outside the declared palette."""
    c, d = palette(g)
    for v, col in g.nodes(data="color", default=0):
        if not 0 <= col < d:
            raise PreconditionError("vertex color out of range", {"vertex": v, "color": col, "d": d})
    for u, v, col in g.edges(data="color", default=0):
        if not 0 <= col < c:
            raise PreconditionError(
                "edge color out of range", {"edge": [u, v], "color": col, "c": c}
            )


def palette(g: nx.Graph) -> tuple[int, int]:
    """Return ``(c, d)`` for ``g``."""
    return int(g.graph.get("c", 1)), int(g.graph.get("d", 1))


def vertex_color(g: nx.Graph, v: int) -> int:
    return int(g.nodes[v].get("color", 0))


def edge_color(g: nx.Graph, u: int, v: int) -> int:
    return int(g.edges[u, v].get("color", 0))


def normalize(h: nx.Graph, c: Optional[int] = None, d: Optional[int] = None) -> nx.Graph:
    """Turn any simple networkx graph into a frozen colored graph.

    Missing colors become 0; ``c``/``d`` default to the graph's own values,
    widened to fit the colors actually present.
    """
    if h.is_directed() or h.is_multigraph():
        raise PreconditionError("only simple undirected graphs are supported")
    vcol = {v: int(col) for v, col in h.nodes(data="color", default=0)}
    ecol = {edge_key(u, v): int(col) for u, v, col in h.edges(data="color", default=0)}
    c0, d0 = palette(h)
    c = c if c is not None else max([c0, *(col + 1 for col in ecol.values())])
    d = d if d is not None else max([d0, *(col + 1 for col in vcol.values())])
    return make_graph(h.nodes, h.edges, c=c, d=d, vertex_colors=vcol, edge_colors=ecol)


def induced(g: nx.Graph, vertices: Iterable[int]) -> nx.Graph:
    """Induced subgraph with colors and palette, as a frozen copy."""
    return nx.freeze(g.subgraph(list(vertices)).copy())


def spanning(g: nx.Graph, edges: Iterable[tuple[int, int]]) -> nx.Graph:
    """Spanning subgraph of ``g`` keeping every vertex and the given edges."""
    h = nx.Graph(**g.graph)
    h.add_nodes_from(g.nodes(data=True))
    h.add_edges_from((u, v, g.edges[u, v]) for u, v in edges)
    return nx.freeze(h)


def uncolored(g: nx.Graph) -> nx.Graph:
    """Drop all colors: the c = 1, d = 1 version of ``g``."""
    return make_graph(g.nodes, g.edges)


def relabel(g: nx.Graph, mapping: Mapping[int, int]) -> nx.Graph:
    """Relabel vertices, keeping colors and palette."""
    return nx.freeze(nx.relabel_nodes(g, dict(mapping), copy=True))


def is_subgraph_of(small: nx.Graph, big: nx.Graph) -> bool:
    """True iff ``small`` is literally contained in ``big`` with identical colors."""
    for v in small.nodes:
        if v not in big or vertex_color(big, v) != vertex_color(small, v):
            return False
    for u, v in small.edges:
        if not big.has_edge(u, v) or edge_color(big, u, v) != edge_color(small, u, v):
            return False
    return True

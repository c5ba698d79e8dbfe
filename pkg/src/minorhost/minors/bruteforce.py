"""Independent minor oracle by exhaustive edge contraction.

H is a minor of G iff H is a subgraph of some graph obtained from G by
contracting edges. Contractions are explored breadth-first and deduplicated
by canonical label. Used only to cross-check the branch-set search.
"""
import networkx as nx

from minorhost.graphs.canonical import canonical_form
from minorhost.graphs.graph import make_graph, uncolored
from minorhost.graphs.search import find_subgraph_embedding


def _contract(g: nx.Graph, u: int, v: int) -> nx.Graph:
    h = nx.contracted_nodes(g, u, v, self_loops=False, copy=True)
    return make_graph(h.nodes, h.edges)


def has_minor_brute_force(pattern: nx.Graph, host: nx.Graph) -> bool:
    pattern = uncolored(pattern)
    level = {canonical_form(uncolored(host)): uncolored(host)}
    while level:
        nxt: dict[bytes, nx.Graph] = {}
        for g in level.values():
            if g.number_of_edges() < pattern.number_of_edges():
                continue
            if find_subgraph_embedding(pattern, g) is not None:
                return True
            if g.number_of_nodes() <= pattern.number_of_nodes():
                continue
            for u, v in g.edges:
                h = _contract(g, u, v)
                nxt.setdefault(canonical_form(h), h)
        level = nxt
    return False

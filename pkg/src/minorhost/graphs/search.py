"""Exact small-scale search: longest paths and cycles, connectivity, embeddings.

Everything here is exponential in the worst case. Searches either refuse
inputs above a size cap (``SizeCapExceeded``) or count search-tree nodes
against a budget (``BudgetExhausted``); neither ever turns into a silent
negative answer.
"""
from typing import Iterable, Optional

import networkx as nx

from minorhost.core.config import settings
from minorhost.core.exceptions import BudgetExhausted, SizeCapExceeded
from minorhost.core.logging import get_logger
from minorhost.graphs.graph import edge_color, vertex_color

logger = get_logger(__name__)


def path_length(path: list[int]) -> int:
    """Number of edges on a vertex sequence."""
    return max(len(path) - 1, 0)


class _Masks:
    """Bitmask adjacency over a fixed vertex order."""

    def __init__(self, g: nx.Graph, vertices: Iterable[int]):
        self.order = sorted(vertices)
        self.index = {v: i for i, v in enumerate(self.order)}
        self.adj = [0] * len(self.order)
        for v in self.order:
            i = self.index[v]
            for w in g[v]:
                j = self.index.get(w)
                if j is not None:
                    self.adj[i] |= 1 << j

    def reach(self, start: int, blocked: int) -> int:
        """Mask of vertices reachable from ``start`` avoiding ``blocked``."""
        seen = self.adj[start] & ~blocked
        frontier = seen
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= self.adj[low.bit_length() - 1]
                frontier ^= low
            nxt &= ~blocked & ~seen
            seen |= nxt
            frontier = nxt
        return seen


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_cap(size: int, cap: Optional[int], operation: str) -> None:
    cap = settings.longest_path_cap if cap is None else cap
    if size > cap:
        raise SizeCapExceeded(
            f"{operation}: exact search refused above {cap} vertices",
            {"vertices": size, "cap": cap},
        )


def longest_path(g: nx.Graph, cap: Optional[int] = None) -> list[int]:
    """Return a longest path of ``g`` as a vertex sequence (exact).

    The size cap applies to each connected component.
    """
    best: list[int] = []
    for comp in sorted(nx.connected_components(g), key=min):
        if len(comp) <= len(best):
            continue
        _check_cap(len(comp), cap, "longest_path")
        path = _longest_path_in(g, comp)
        if len(path) > len(best):
            best = path
    return best


def _longest_path_in(g: nx.Graph, comp: set[int]) -> list[int]:
    masks = _Masks(g, comp)
    n = len(masks.order)
    best = [0]

    def extend(path: list[int], visited: int) -> bool:
        if len(path) > len(best):
            best[:] = path
            if len(best) == n:
                return True
        last = path[-1]
        if len(path) + masks.reach(last, visited).bit_count() <= len(best):
            return False
        for j in _bits(masks.adj[last] & ~visited):
            path.append(j)
            if extend(path, visited | (1 << j)):
                return True
            path.pop()
        return False

    for start in range(n):
        if extend([start], 1 << start):
            break
    return [masks.order[i] for i in best]


def longest_cycle(g: nx.Graph, cap: Optional[int] = None) -> list[int]:
    """Return a longest cycle (vertex sequence, closing edge implied) or ``[]``.

    The size cap applies to each block.
    """
    for block in nx.biconnected_components(g):
        _check_cap(len(block), cap, "longest_cycle")
    return _cycle_search(g, target=None)


def circumference(g: nx.Graph, cap: Optional[int] = None) -> int:
    """Length of a longest cycle; 0 for forests."""
    return len(longest_cycle(g, cap))


def cycle_of_length_at_least(g: nx.Graph, n: int) -> list[int]:
    """First cycle of length >= ``n`` found block by block, or ``[]``."""
    return _cycle_search(g, target=n)


def _cycle_search(g: nx.Graph, target: Optional[int]) -> list[int]:
    best: list[int] = []
    blocks = sorted(
        (b for b in nx.biconnected_components(g) if len(b) >= 3), key=lambda b: (-len(b), min(b))
    )
    for block in blocks:
        if len(block) <= len(best):
            continue
        if target is not None and len(block) < target:
            continue
        cycle = _longest_cycle_in(g, block, target)
        if len(cycle) > len(best):
            best = cycle
        if target is not None and len(best) >= target:
            return best
    return best if target is None or len(best) >= target else []


def _longest_cycle_in(g: nx.Graph, block: set[int], target: Optional[int]) -> list[int]:
    masks = _Masks(g, block)
    n = len(masks.order)
    goal = n if target is None else min(n, target)
    best: list[int] = []

    def extend(path: list[int], visited: int, allowed: int, start: int) -> bool:
        last = path[-1]
        if len(path) >= 3 and masks.adj[last] >> start & 1 and len(path) > len(best):
            best[:] = path
            if len(best) >= goal:
                return True
        # the cycle must come back to start, so only count what start can still use
        room = masks.reach(last, visited | ~allowed).bit_count()
        if len(path) + room <= len(best):
            return False
        for j in _bits(masks.adj[last] & allowed & ~visited):
            path.append(j)
            if extend(path, visited | (1 << j), allowed, start):
                return True
            path.pop()
        return False

    full = (1 << n) - 1
    for start in range(n):
        # cycles whose least index is ``start``
        allowed = full & ~((1 << start) - 1)
        if allowed.bit_count() <= len(best):
            break
        if extend([start], 1 << start, allowed, start):
            break
    return [masks.order[i] for i in best]


def vertex_connectivity(g: nx.Graph) -> int:
    """Exact vertex connectivity (Menger); 0 for graphs that are trivial or disconnected."""
    if g.number_of_nodes() <= 1 or not nx.is_connected(g):
        return 0
    return int(nx.node_connectivity(g))


def is_k_connected(g: nx.Graph, k: int) -> bool:
    """``g`` has more than ``k`` vertices and connectivity at least ``k``."""
    return g.number_of_nodes() > k and vertex_connectivity(g) >= k


def is_k4_minor_free(g: nx.Graph) -> bool:
    """Series-parallel recognition by reduction.

    Repeatedly delete vertices of degree at most one and suppress vertices
    of degree two (parallel edges collapse). A graph is K_4-minor-free iff
    this empties it, since minimum degree three forces a K_4 minor.
    """
    h = nx.Graph()
    h.add_nodes_from(g.nodes)
    h.add_edges_from(g.edges)
    stack = [v for v in h.nodes if h.degree(v) <= 2]
    while stack:
        v = stack.pop()
        if v not in h or h.degree(v) > 2:
            continue
        nbrs = list(h[v])
        h.remove_node(v)
        if len(nbrs) == 2:
            h.add_edge(*nbrs)
        stack.extend(w for w in nbrs if h.degree(w) <= 2)
    return h.number_of_nodes() == 0


def find_induced_embedding(
    pattern: nx.Graph, host: nx.Graph, budget: Optional[int] = None
) -> Optional[dict[int, int]]:
    """Injective color-preserving map keeping edges and non-edges, or ``None``."""
    return _Embedder(pattern, host, induced=True, budget=budget).run()


def find_subgraph_embedding(
    pattern: nx.Graph, host: nx.Graph, budget: Optional[int] = None
) -> Optional[dict[int, int]]:
    """Injective color-preserving map keeping edges (non-edges unconstrained), or ``None``."""
    return _Embedder(pattern, host, induced=False, budget=budget).run()


def extend_induced_embedding(
    pattern: nx.Graph,
    host: nx.Graph,
    fixed: dict[int, int],
    allowed: Optional[set[int]] = None,
    budget: Optional[int] = None,
) -> Optional[dict[int, int]]:
    """Induced embedding that agrees with ``fixed``; other images come from ``allowed``."""
    return _Embedder(pattern, host, induced=True, budget=budget, fixed=fixed, allowed=allowed).run()


def is_embedding(pattern: nx.Graph, host: nx.Graph, mapping: dict[int, int], induced: bool) -> bool:
    """Replay a map: injective, total, color- and (non-)edge-preserving."""
    if set(mapping) != set(pattern.nodes) or len(set(mapping.values())) != len(mapping):
        return False
    if any(x not in host for x in mapping.values()):
        return False
    for v in pattern.nodes:
        if vertex_color(pattern, v) != vertex_color(host, mapping[v]):
            return False
    verts = sorted(pattern.nodes)
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            in_pattern = pattern.has_edge(u, v)
            in_host = host.has_edge(mapping[u], mapping[v])
            if in_pattern:
                if not in_host or edge_color(pattern, u, v) != edge_color(host, mapping[u], mapping[v]):
                    return False
            elif induced and in_host:
                return False
    return True


class _Embedder:
    """Backtracking embedding search with color and degree filters."""

    def __init__(
        self,
        pattern: nx.Graph,
        host: nx.Graph,
        induced: bool,
        budget: Optional[int],
        fixed: Optional[dict[int, int]] = None,
        allowed: Optional[set[int]] = None,
    ):
        self.pattern = pattern
        self.host = host
        self.induced = induced
        self.budget = settings.embedding_budget if budget is None else budget
        self.fixed = dict(fixed or {})
        self.allowed = allowed
        self.nodes = 0
        self.order = self._order()

    def _order(self) -> list[int]:
        """Fixed vertices first, then greedily the most-connected next vertex."""
        placed = [v for v in sorted(self.fixed)]
        seen = set(placed)
        rest = set(self.pattern.nodes) - seen
        while rest:
            v = max(
                rest,
                key=lambda x: (
                    sum(1 for w in self.pattern[x] if w in seen),
                    self.pattern.degree(x),
                    -x,
                ),
            )
            placed.append(v)
            seen.add(v)
            rest.discard(v)
        return placed

    def run(self) -> Optional[dict[int, int]]:
        if self.pattern.number_of_nodes() > self.host.number_of_nodes():
            return None
        mapping: dict[int, int] = {}
        for v, x in self.fixed.items():
            if not self._consistent(v, x, mapping):
                return None
            mapping[v] = x
        used = set(mapping.values())
        found = self._extend(len(self.fixed), mapping, used)
        logger.debug(
            "embedding search finished",
            extra={"nodes": self.nodes, "found": found is not None, "induced": self.induced},
        )
        return found

    def _candidates(self, v: int, mapping: dict[int, int]) -> list[int]:
        anchors = [mapping[w] for w in self.pattern[v] if w in mapping]
        if anchors:
            pool = set(self.host[anchors[0]])
            for a in anchors[1:]:
                pool &= set(self.host[a])
        else:
            pool = set(self.host.nodes)
        if self.allowed is not None:
            pool &= self.allowed
        return sorted(pool)

    def _consistent(self, v: int, x: int, mapping: dict[int, int]) -> bool:
        if x not in self.host:
            return False
        if vertex_color(self.pattern, v) != vertex_color(self.host, x):
            return False
        if self.host.degree(x) < self.pattern.degree(v):
            return False
        for w, y in mapping.items():
            if y == x:
                return False
            if self.pattern.has_edge(v, w):
                if not self.host.has_edge(x, y):
                    return False
                if edge_color(self.pattern, v, w) != edge_color(self.host, x, y):
                    return False
            elif self.induced and self.host.has_edge(x, y):
                return False
        return True

    def _extend(self, depth: int, mapping: dict[int, int], used: set[int]) -> Optional[dict[int, int]]:
        if depth == len(self.order):
            return dict(mapping)
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted("embedding", self.nodes, self.budget)
        v = self.order[depth]
        for x in self._candidates(v, mapping):
            if x in used or not self._consistent(v, x, mapping):
                continue
            mapping[v] = x
            used.add(x)
            found = self._extend(depth + 1, mapping, used)
            if found is not None:
                return found
            del mapping[v]
            used.discard(x)
        return None


def are_isomorphic(g1: nx.Graph, g2: nx.Graph) -> bool:
    """Color-preserving isomorphism test (networkx VF2)."""
    return nx.is_isomorphic(
        g1,
        g2,
        node_match=nx.algorithms.isomorphism.categorical_node_match("color", 0),
        edge_match=nx.algorithms.isomorphism.categorical_edge_match("color", 0),
    )

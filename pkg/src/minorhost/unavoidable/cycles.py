"""Long cycles and C_{n,m} minors in 2-connected graphs."""
from typing import Optional

import networkx as nx

from minorhost.core.config import settings
from minorhost.core.exceptions import BudgetExhausted, CounterexampleCandidate, PreconditionError
from minorhost.core.logging import get_logger
from minorhost.graphs.families import FamilySpec, two_cycles
from minorhost.graphs.search import is_k_connected, longest_cycle, longest_path, path_length
from minorhost.minors.engine import Subdivision, find_subdivision
from minorhost.unavoidable.certificates import ExtractionCertificate, Route

logger = get_logger(__name__)


def _require_two_connected(g: nx.Graph) -> None:
    if not is_k_connected(g, 2):
        raise PreconditionError("graph must be 2-connected", {"vertices": g.number_of_nodes()})


def find_long_cycle(g: nx.Graph, n: int) -> list[int]:
    """A cycle of length >= ``n`` in a 2-connected graph with a path of length n^2."""
    if n < 3:
        raise PreconditionError("n must be at least 3", {"n": n})
    _require_two_connected(g)
    longest = path_length(longest_path(g))
    if longest < n * n:
        raise PreconditionError(
            "graph has no path of length n^2", {"longest_path": longest, "required": n * n}
        )
    cycle = longest_cycle(g)
    if len(cycle) < n:
        logger.error("long-path graph without a long cycle", extra={"n": n, "circumference": len(cycle)})
        raise CounterexampleCandidate(
            "2-connected graph with a path of length n^2 but no cycle of length n",
            {"n": n, "longest_path": longest, "circumference": len(cycle)},
        )
    return cycle


def _cycle_in_range(g: nx.Graph, lo: int, hi: int, budget: int) -> list[int]:
    """Some cycle with ``lo <= length <= hi`` (exhaustive, least-start order)."""
    order = sorted(g.nodes)
    nodes = [0]

    def extend(path: list[int], on_path: set[int], start: int) -> Optional[list[int]]:
        nodes[0] += 1
        if nodes[0] > budget:
            raise BudgetExhausted("cycle_in_range", nodes[0], budget)
        last = path[-1]
        if lo <= len(path) <= hi and len(path) >= 3 and g.has_edge(last, start):
            return list(path)
        if len(path) >= hi:
            return None
        for w in sorted(g[last]):
            if w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                found = extend(path, on_path, start)
                if found:
                    return found
                path.pop()
                on_path.discard(w)
        return None

    for s in order:
        found = extend([s], {s}, s)
        if found:
            return found
    return []


def _arcs(cycle: list[int], x: int, y: int) -> tuple[list[int], list[int]]:
    """The two x-y paths along ``cycle``, shorter first."""
    i, j = cycle.index(x), cycle.index(y)
    rotated = cycle[i:] + cycle[:i]
    j = rotated.index(y)
    forward = rotated[: j + 1]
    backward = [x] + list(reversed(rotated[j:]))
    return (forward, backward) if len(forward) <= len(backward) else (backward, forward)


def theta_subdivision(
    g: nx.Graph, n: int, m: int, shared: list[int], long_n: list[int], long_m: list[int]
) -> Subdivision:
    """Place C_{n,m} on three internally disjoint u-v paths.

    ``shared`` stands in for the common edge, ``long_n`` must have at least
    n - 1 edges and ``long_m`` at least m - 1.
    """
    if path_length(long_n) < n - 1 or path_length(long_m) < m - 1:
        raise CounterexampleCandidate(
            "theta paths too short for C_{n,m}",
            {"n": n, "m": m, "long_n": path_length(long_n), "long_m": path_length(long_m)},
        )
    pattern = two_cycles(n, m)
    u, v = long_n[0], long_n[-1]
    branch = {1: u, 0: v}
    paths: dict[tuple[int, int], tuple[int, ...]] = {(0, 1): tuple(reversed(shared))}
    # pattern n-cycle runs 1, 2, ..., n-1, 0
    for j in range(2, n):
        branch[j] = long_n[j - 1]
    for j in range(1, n - 1):
        paths[(j, j + 1)] = tuple(long_n[j - 1 : j + 1])
    paths[(0, n - 1)] = tuple(reversed(long_n[n - 2 :]))
    # pattern m-cycle runs 1, n, n+1, ..., n+m-3, 0
    detour = [1, *range(n, n + m - 2)]
    for pos, j in enumerate(detour[1:], start=1):
        branch[j] = long_m[pos]
    for pos in range(len(detour) - 1):
        a, b = detour[pos], detour[pos + 1]
        paths[(a, b)] = tuple(long_m[pos : pos + 2])
    last = detour[-1]
    paths[(0, last)] = tuple(reversed(long_m[len(detour) - 1 :]))
    return Subdivision(pattern=pattern, host=g, branch_vertices=branch, paths=paths)


def _trim(path: list[int], a: set[int], b: set[int]) -> list[int]:
    """Shortest piece of ``path`` running from ``a`` to ``b`` with no inner vertex in either."""
    j = next(i for i, x in enumerate(path) if x in b)
    i = max(i for i, x in enumerate(path[: j + 1]) if x in a)
    return path[i : j + 1]


def two_disjoint_connecting_paths(g: nx.Graph, a: set[int], b: set[int]) -> tuple[list[int], list[int]]:
    """Two vertex-disjoint a-b paths whose inner vertices avoid a and b."""
    a, b = set(a), set(b)
    if a & b or len(a) < 2 or len(b) < 2:
        raise PreconditionError("need disjoint vertex sets of size at least two", {"a": sorted(a), "b": sorted(b)})
    _require_two_connected(g)
    source, sink = max(g.nodes) + 1, max(g.nodes) + 2
    h = nx.Graph(g)
    h.add_edges_from((source, x) for x in a)
    h.add_edges_from((y, sink) for y in b)
    found = [p[1:-1] for p in nx.node_disjoint_paths(h, source, sink, cutoff=2)]
    if len(found) < 2:
        raise PreconditionError("fewer than two disjoint connecting paths", {"found": len(found)})
    first, second = sorted((_trim(p, a, b) for p in found[:2]), key=lambda p: (len(p), p))
    return first, second


def _outside_path(g: nx.Graph, a: set[int], b: set[int], avoid: set[int]) -> Optional[list[int]]:
    """An a-b path in g - avoid with inner vertices outside a and b."""
    h = nx.Graph(g)
    h.remove_nodes_from(avoid)
    source, sink = max(g.nodes) + 1, max(g.nodes) + 2
    h.add_edges_from((source, x) for x in a if x in h)
    h.add_edges_from((y, sink) for y in b if y in h)
    try:
        path = nx.shortest_path(h, source, sink)[1:-1]
    except (nx.NetworkXNoPath, nx.NodeNotFound):
        return None
    return _trim(path, a, b)


def find_cycle_pair_minor(g: nx.Graph, n: int, m: int, budget: Optional[int] = None) -> ExtractionCertificate:
    """Certify C_{n,m} as a minor of a 2-connected graph.

    With cycles D1 (length >= 2n) and D2 (length >= |D1| * m) the three
    intersection cases give a subdivision directly; without them a direct
    subdivision search is used.
    """
    if n < 3 or m < 3:
        raise PreconditionError("n and m must be at least 3", {"n": n, "m": m})
    _require_two_connected(g)
    budget = settings.search_budget if budget is None else budget
    target = FamilySpec.of("Cnm", n, m)

    d2 = longest_cycle(g)
    d1 = _cycle_in_range(g, 2 * n, len(d2) // m, budget) if len(d2) >= 2 * n * m else []
    if d1:
        sub, route = _proof_route(g, n, m, d1, d2)
    else:
        sub = find_subdivision(two_cycles(n, m), g, budget)
        route = Route.DIRECT_SUBDIVISION
        if sub is None:
            raise PreconditionError(
                "graph has no C_{n,m} minor; cycle-length preconditions unmet",
                {"n": n, "m": m, "circumference": len(d2), "required_d1": 2 * n},
            )

    cert = ExtractionCertificate(target=target, model=sub.to_model(), route=route, subdivision=sub)
    report = cert.verify()
    if not report:
        raise CounterexampleCandidate("C_{n,m} certificate failed verification", {"violations": report.violations})
    logger.debug("cycle pair minor found", extra={"n": n, "m": m, "route": route.value})
    return cert


def _proof_route(g: nx.Graph, n: int, m: int, d1: list[int], d2: list[int]) -> tuple[Subdivision, Route]:
    s1, s2 = set(d1), set(d2)
    common = s1 & s2
    if not common:
        p1, p2 = two_disjoint_connecting_paths(g, s1, s2)
        x1, y1, x2, y2 = p1[0], p1[-1], p2[0], p2[-1]
        short1, long1 = _arcs(d1, x1, x2)
        _, long2 = _arcs(d2, y1, y2)
        through = p1 + long2[1:-1] + list(reversed(p2))
        return theta_subdivision(g, n, m, short1, long1, through), Route.DISJOINT_CYCLES
    if len(common) == 1:
        (v,) = common
        p2 = _outside_path(g, s1 - {v}, s2 - {v}, {v})
        if p2 is None:
            raise CounterexampleCandidate("no D1-D2 path avoiding the shared vertex", {"shared": v})
        x, y = p2[0], p2[-1]
        short1, long1 = _arcs(d1, v, x)
        _, long2 = _arcs(d2, v, y)
        through = long2 + list(reversed(p2))[1:]
        return theta_subdivision(g, n, m, short1, long1, through), Route.SHARED_VERTEX
    # D2 splits into D1-paths; the longest has length >= m
    i = next(idx for idx, x in enumerate(d2) if x in s1)
    rotated = d2[i:] + d2[:i] + [d2[i]]
    best: list[int] = []
    current = [rotated[0]]
    for x in rotated[1:]:
        current.append(x)
        if x in s1:
            if len(current) > len(best):
                best = current
            current = [x]
    if path_length(best) < m:
        raise CounterexampleCandidate("no long D1-path inside D2", {"longest": path_length(best), "m": m})
    short1, long1 = _arcs(d1, best[0], best[-1])
    return theta_subdivision(g, n, m, short1, long1, best), Route.D1_PATH_IN_D2

"""Minor models: verification, budgeted search, subdivisions.

Branch sets form a disjoint family of connected host vertex sets; host
vertices outside every branch set are simply unused.
"""
from typing import Any, Iterator, Literal, Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from minorhost.core.config import settings
from minorhost.core.exceptions import BudgetExhausted, PreconditionError
from minorhost.core.logging import get_logger
from minorhost.graphs.formats import document_to_graph, graph_to_document
from minorhost.graphs.graph import Edge, edge_key, make_graph
from minorhost.graphs.search import cycle_of_length_at_least
from minorhost.schemas.schemas import MinorModelDocument, SubdivisionDocument

logger = get_logger(__name__)


class MinorModel(BaseModel):
    """Witness that ``pattern`` is a minor of ``host``.

    ``edge_witnesses`` maps each pattern edge ``(u, v)`` with ``u < v`` to a
    host edge ``(a, b)`` with ``a`` in the branch set of ``u`` and ``b`` in
    that of ``v``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    pattern: Any
    host: Any
    branch_sets: dict[int, frozenset[int]]
    edge_witnesses: dict[Edge, Edge]

    @property
    def used_vertices(self) -> frozenset[int]:
        return frozenset().union(*self.branch_sets.values()) if self.branch_sets else frozenset()


class ModelVerification(BaseModel):
    """Result of :func:`verify_model`; truthy iff the model is valid."""

    valid: bool
    violations: list[str] = Field(default_factory=list)

    def __bool__(self) -> bool:
        return self.valid


def verify_model(m: MinorModel) -> ModelVerification:
    """Check every model invariant exhaustively and list what fails."""
    violations: list[str] = []
    pattern, host = m.pattern, m.host

    if set(m.branch_sets) != set(pattern.nodes):
        missing = sorted(set(pattern.nodes) - set(m.branch_sets))
        extra = sorted(set(m.branch_sets) - set(pattern.nodes))
        violations.append(f"branch sets do not match pattern vertices (missing {missing}, extra {extra})")

    owner: dict[int, int] = {}
    for v, bset in sorted(m.branch_sets.items()):
        if not bset:
            violations.append(f"branch set {v} is empty")
            continue
        outside = sorted(x for x in bset if x not in host)
        if outside:
            violations.append(f"branch set {v} uses non-host vertices {outside}")
            continue
        for x in bset:
            if x in owner:
                violations.append(f"branch sets {owner[x]} and {v} share host vertex {x}")
            owner[x] = v
        if not nx.is_connected(host.subgraph(bset)):
            violations.append(f"branch set {v} is disconnected")

    expected = {edge_key(u, v) for u, v in pattern.edges}
    if set(m.edge_witnesses) != expected:
        violations.append("edge witnesses do not match pattern edges")
    for (u, v), (a, b) in sorted(m.edge_witnesses.items()):
        if (u, v) not in expected:
            continue
        if not host.has_edge(a, b):
            violations.append(f"witness {a}-{b} for pattern edge {u}-{v} is not a host edge")
        elif not (
            (a in m.branch_sets.get(u, ()) and b in m.branch_sets.get(v, ()))
            or (b in m.branch_sets.get(u, ()) and a in m.branch_sets.get(v, ()))
        ):
            violations.append(f"witness {a}-{b} does not join branch sets {u} and {v}")

    return ModelVerification(valid=not violations, violations=violations)


def build_model(pattern: nx.Graph, host: nx.Graph, branch_sets: dict[int, set[int]]) -> MinorModel:
    """Attach the least witness edge for every pattern edge to given branch sets."""
    witnesses: dict[Edge, Edge] = {}
    for u, v in pattern.edges:
        u, v = edge_key(u, v)
        choice = None
        for a in sorted(branch_sets[u]):
            for b in sorted(host[a]):
                if b in branch_sets[v]:
                    choice = (a, b)
                    break
            if choice:
                break
        if choice is None:
            raise PreconditionError(f"branch sets {u} and {v} are not adjacent", {"edge": [u, v]})
        witnesses[(u, v)] = choice
    return MinorModel(
        pattern=pattern,
        host=host,
        branch_sets={v: frozenset(s) for v, s in branch_sets.items()},
        edge_witnesses=witnesses,
    )


def identity_model(g: nx.Graph) -> MinorModel:
    """Singleton branch sets: ``g`` as a minor of itself."""
    return build_model(g, g, {v: {v} for v in g.nodes})


def restrict_model(m: MinorModel, vertices: set[int], host: Optional[nx.Graph] = None) -> MinorModel:
    """Intersect branch sets with ``vertices``; witnesses are recomputed."""
    new_host = host if host is not None else m.host.subgraph(vertices)
    return build_model(m.pattern, new_host, {v: set(s) & vertices for v, s in m.branch_sets.items()})


def model_to_document(m: MinorModel, host_ref: Optional[str] = None, route: Optional[str] = None) -> MinorModelDocument:
    return MinorModelDocument(
        pattern=graph_to_document(m.pattern),
        host_ref=host_ref,
        host=graph_to_document(m.host) if host_ref is None else None,
        branch_sets={str(v): sorted(s) for v, s in sorted(m.branch_sets.items())},
        edge_witnesses={f"{u}-{v}": [a, b] for (u, v), (a, b) in sorted(m.edge_witnesses.items())},
        route=route,
    )


def model_from_document(doc: MinorModelDocument, host: Optional[nx.Graph] = None) -> MinorModel:
    if host is None:
        if doc.host is None:
            raise PreconditionError("model document has no host; pass one explicitly")
        host = document_to_graph(doc.host)
    witnesses = {}
    for key, (a, b) in doc.edge_witnesses.items():
        u, v = (int(x) for x in key.split("-"))
        witnesses[edge_key(u, v)] = (a, b)
    return MinorModel(
        pattern=document_to_graph(doc.pattern),
        host=host,
        branch_sets={int(v): frozenset(s) for v, s in doc.branch_sets.items()},
        edge_witnesses=witnesses,
    )


def connected_sets(
    adj: dict[int, set[int]], root: int, allowed: set[int], max_size: int
) -> Iterator[frozenset[int]]:
    """Every connected subset of ``allowed`` containing ``root``, each once.

    Branches on frontier vertices in order: include one, exclude all earlier.
    """

    def grow(current: frozenset[int], frontier: list[int], excluded: frozenset[int]) -> Iterator[frozenset[int]]:
        yield current
        if len(current) >= max_size:
            return
        for i, w in enumerate(frontier):
            blocked = excluded | frozenset(frontier[:i])
            rest = frontier[i + 1 :]
            seen = set(rest)
            added = sorted(
                x for x in adj[w] if x in allowed and x not in current and x != w and x not in blocked and x not in seen
            )
            yield from grow(current | {w}, rest + added, blocked)

    start = sorted(x for x in adj[root] if x in allowed and x != root)
    yield from grow(frozenset([root]), start, frozenset())


class _ModelSearch:
    """Backtracking over branch sets, one pattern vertex at a time."""

    def __init__(self, pattern: nx.Graph, host: nx.Graph, budget: int):
        self.pattern = pattern
        self.host = host
        self.adj = {v: set(host[v]) for v in host.nodes}
        self.budget = budget
        self.nodes = 0
        self.order = self._order()

    def _order(self) -> list[int]:
        start = min(self.pattern.nodes, key=lambda v: (-self.pattern.degree(v), v))
        order = [start]
        seen = {start}
        for v in order:
            for w in sorted(self.pattern[v], key=lambda x: (-self.pattern.degree(x), x)):
                if w not in seen:
                    seen.add(w)
                    order.append(w)
        return order

    def run(self) -> Optional[dict[int, set[int]]]:
        sets: dict[int, frozenset[int]] = {}
        found = self._place(0, sets, set(self.host.nodes))
        return None if found is None else {v: set(s) for v, s in found.items()}

    def _boundary(self, bset: frozenset[int], unused: set[int]) -> set[int]:
        out: set[int] = set()
        for x in bset:
            out |= self.adj[x]
        return out & unused

    def _feasible(self, sets: dict[int, frozenset[int]], unused: set[int]) -> bool:
        remaining = [v for v in self.order if v not in sets]
        if len(remaining) > len(unused):
            return False
        comp_of: dict[int, int] = {}
        for i, comp in enumerate(nx.connected_components(self.host.subgraph(unused))):
            for x in comp:
                comp_of[x] = i
        for p, bset in sets.items():
            waiting = sum(1 for w in self.pattern[p] if w not in sets)
            if waiting and len(self._boundary(bset, unused)) < waiting:
                return False
        for u in remaining:
            placed = [p for p in self.pattern[u] if p in sets]
            if not placed:
                continue
            common: Optional[set[int]] = None
            for p in placed:
                comps = {comp_of[x] for x in self._boundary(sets[p], unused)}
                common = comps if common is None else common & comps
                if not common:
                    return False
        return True

    def _candidates(self, v: int, sets: dict[int, frozenset[int]], unused: set[int]) -> Iterator[frozenset[int]]:
        placed = [p for p in self.pattern[v] if p in sets]
        later = len(self.order) - len(sets) - 1
        max_size = len(unused) - later
        if max_size <= 0:
            return
        if placed:
            boundaries = [self._boundary(sets[p], unused) for p in placed]
            roots = sorted(min(boundaries, key=len))
        else:
            boundaries = []
            roots = sorted(unused)
        allowed = set(unused)
        for root in roots:
            for bset in connected_sets(self.adj, root, allowed, max_size):
                if all(bset & b for b in boundaries):
                    yield bset
            allowed.discard(root)

    def _place(self, depth: int, sets: dict[int, frozenset[int]], unused: set[int]) -> Optional[dict[int, frozenset[int]]]:
        if depth == len(self.order):
            return dict(sets)
        v = self.order[depth]
        for bset in self._candidates(v, sets, unused):
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExhausted("find_minor_model", self.nodes, self.budget)
            sets[v] = bset
            rest = unused - bset
            if self._feasible(sets, rest):
                found = self._place(depth + 1, sets, rest)
                if found is not None:
                    return found
            del sets[v]
        return None


def _check_pattern(pattern: nx.Graph) -> None:
    if pattern.number_of_nodes() and not nx.is_connected(pattern):
        raise PreconditionError(
            "pattern must be connected; reduce disconnected patterns component-wise",
            {"components": nx.number_connected_components(pattern)},
        )


def find_minor_model(pattern: nx.Graph, host: nx.Graph, budget: Optional[int] = None) -> Optional[MinorModel]:
    """Search for a model of ``pattern`` in ``host``.

    Returns ``None`` only when the search space was exhausted; raises
    ``BudgetExhausted`` otherwise. A 2-connected pattern is searched one
    host block at a time.
    """
    _check_pattern(pattern)
    budget = settings.search_budget if budget is None else budget
    if pattern.number_of_nodes() == 0:
        return build_model(pattern, host, {})
    if pattern.number_of_nodes() > host.number_of_nodes() or pattern.number_of_edges() > host.number_of_edges():
        return None

    if pattern.number_of_nodes() >= 3 and nx.is_biconnected(pattern):
        regions = sorted(
            (b for b in nx.biconnected_components(host) if len(b) >= pattern.number_of_nodes()),
            key=lambda b: (-len(b), min(b)),
        )
    else:
        regions = sorted(
            (c for c in nx.connected_components(host) if len(c) >= pattern.number_of_nodes()),
            key=lambda c: (-len(c), min(c)),
        )

    spent = 0
    for region in regions:
        search = _ModelSearch(pattern, host.subgraph(region), budget - spent)
        try:
            sets = search.run()
        finally:
            spent += search.nodes
            logger.debug(
                "minor search region done",
                extra={"pattern_order": pattern.number_of_nodes(), "region": len(region), "nodes": search.nodes},
            )
        if sets is not None:
            return build_model(pattern, host, sets)
    return None


class FreenessResult(BaseModel):
    """Three-valued outcome of :func:`is_minor_free`."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    status: Literal["free", "model_found", "inconclusive"]
    model: Optional[MinorModel] = None
    pattern_index: Optional[int] = None

    @property
    def free(self) -> bool:
        return self.status == "free"


def is_minor_free(host: nx.Graph, patterns: list[nx.Graph], budget: Optional[int] = None) -> FreenessResult:
    """``free`` only if every pattern search exhausted its space."""
    inconclusive = False
    for i, pattern in enumerate(patterns):
        try:
            model = find_minor_model(pattern, host, budget)
        except BudgetExhausted as e:
            logger.warning(f"minor search inconclusive: {e}", extra={"pattern_index": i})
            inconclusive = True
            continue
        if model is not None:
            return FreenessResult(status="model_found", model=model, pattern_index=i)
    return FreenessResult(status="inconclusive" if inconclusive else "free")


class Subdivision(BaseModel):
    """Branch vertices plus one host path per pattern edge, internally disjoint."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    pattern: Any
    host: Any
    branch_vertices: dict[int, int]
    paths: dict[Edge, tuple[int, ...]]

    def verify(self) -> ModelVerification:
        violations: list[str] = []
        if set(self.branch_vertices) != set(self.pattern.nodes):
            violations.append("branch vertices do not match pattern vertices")
        if len(set(self.branch_vertices.values())) != len(self.branch_vertices):
            violations.append("branch vertices are not distinct")
        branch = set(self.branch_vertices.values())
        inner_seen: set[int] = set()
        if {edge_key(u, v) for u, v in self.pattern.edges} != set(self.paths):
            violations.append("paths do not match pattern edges")
        for (u, v), path in sorted(self.paths.items()):
            if not path or {path[0], path[-1]} != {self.branch_vertices.get(u), self.branch_vertices.get(v)}:
                violations.append(f"path for {u}-{v} has wrong ends")
                continue
            if len(set(path)) != len(path):
                violations.append(f"path for {u}-{v} repeats a vertex")
            if any(not self.host.has_edge(a, b) for a, b in zip(path, path[1:])):
                violations.append(f"path for {u}-{v} uses a non-edge")
            inner = set(path[1:-1])
            if inner & branch or inner & inner_seen:
                violations.append(f"path for {u}-{v} is not internally disjoint")
            inner_seen |= inner
        return ModelVerification(valid=not violations, violations=violations)

    def to_model(self) -> MinorModel:
        """Give each path's inner vertices to the branch set of its lower endpoint."""
        sets = {v: {x} for v, x in self.branch_vertices.items()}
        witnesses: dict[Edge, Edge] = {}
        for (u, v), path in self.paths.items():
            path = list(path) if path[0] == self.branch_vertices[u] else list(reversed(path))
            sets[u] |= set(path[1:-1])
            witnesses[(u, v)] = (path[-2], path[-1])
        return MinorModel(
            pattern=self.pattern,
            host=self.host,
            branch_sets={v: frozenset(s) for v, s in sets.items()},
            edge_witnesses=witnesses,
        )

    def to_document(self) -> SubdivisionDocument:
        return SubdivisionDocument(
            pattern=graph_to_document(self.pattern),
            branch_vertices={str(v): x for v, x in sorted(self.branch_vertices.items())},
            paths={f"{u}-{v}": list(p) for (u, v), p in sorted(self.paths.items())},
        )


class _SubdivisionSearch:
    def __init__(self, pattern: nx.Graph, host: nx.Graph, budget: int):
        self.pattern = pattern
        self.host = host
        self.budget = budget
        self.nodes = 0
        # breadth-first per component, highest degree first, so edges get routed early
        by_degree = sorted(pattern.nodes, key=lambda v: (-pattern.degree(v), v))
        order: list[int] = []
        for root in by_degree:
            if root in order:
                continue
            i = len(order)
            order.append(root)
            while i < len(order):
                v = order[i]
                i += 1
                for w in sorted(pattern[v], key=lambda x: (-pattern.degree(x), x)):
                    if w not in order:
                        order.append(w)
        self.order = order

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted("find_subdivision", self.nodes, self.budget)

    def run(self) -> Optional[tuple[dict[int, int], dict[Edge, tuple[int, ...]]]]:
        return self._assign(0, {}, {}, set())

    def _assign(
        self, depth: int, branch: dict[int, int], paths: dict[Edge, tuple[int, ...]], used: set[int]
    ) -> Optional[tuple[dict[int, int], dict[Edge, tuple[int, ...]]]]:
        if depth == len(self.order):
            return dict(branch), dict(paths)
        v = self.order[depth]
        need = self.pattern.degree(v)
        for x in sorted(self.host.nodes):
            if x in used or self.host.degree(x) < need:
                continue
            self._tick()
            branch[v] = x
            used.add(x)
            pending = [w for w in self.pattern[v] if w in branch and w != v]
            found = self._route(pending, v, depth, branch, paths, used)
            if found is not None:
                return found
            used.discard(x)
            del branch[v]
        return None

    def _route(
        self,
        pending: list[int],
        v: int,
        depth: int,
        branch: dict[int, int],
        paths: dict[Edge, tuple[int, ...]],
        used: set[int],
    ) -> Optional[tuple[dict[int, int], dict[Edge, tuple[int, ...]]]]:
        if not pending:
            return self._assign(depth + 1, branch, paths, used)
        w, rest = pending[0], pending[1:]
        a, b = branch[v], branch[w]
        free = [x for x in self.host.nodes if x not in used] + [a, b]
        region = self.host.subgraph(free)
        if not nx.has_path(region, a, b):
            return None
        for path in nx.shortest_simple_paths(region, a, b):
            self._tick()
            inner = set(path[1:-1])
            paths[edge_key(v, w)] = tuple(path)
            used |= inner
            found = self._route(rest, v, depth, branch, paths, used)
            if found is not None:
                return found
            used -= inner
            del paths[edge_key(v, w)]
        return None


def find_subdivision(pattern: nx.Graph, host: nx.Graph, budget: Optional[int] = None) -> Optional[Subdivision]:
    """Search for a subdivision of ``pattern`` in ``host`` (exact within budget)."""
    budget = settings.search_budget if budget is None else budget
    if pattern.number_of_nodes() > host.number_of_nodes():
        return None
    search = _SubdivisionSearch(pattern, host, budget)
    found = search.run()
    logger.debug("subdivision search done", extra={"nodes": search.nodes, "found": found is not None})
    if found is None:
        return None
    branch, paths = found
    return Subdivision(pattern=pattern, host=host, branch_vertices=branch, paths=paths)


def circumference_at_least(host: nx.Graph, n: int) -> Optional[list[int]]:
    """A cycle of length >= ``n`` if one exists (exact), else ``None``."""
    if n < 3:
        raise PreconditionError("cycles have length at least 3", {"n": n})
    cycle = cycle_of_length_at_least(host, n)
    return cycle or None


def cycle_model(cycle: list[int], host: nx.Graph, n: int) -> MinorModel:
    """Contract a host cycle of length >= ``n`` onto C_n."""
    pattern = make_graph(range(n), [(i, (i + 1) % n) for i in range(n)])
    sets = {i: {cycle[i]} for i in range(n)}
    sets[n - 1] |= set(cycle[n:])
    return build_model(pattern, host, sets)

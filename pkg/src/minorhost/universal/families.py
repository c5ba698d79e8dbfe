"""Forbidden subgraph families.

A family stands for a set of colored graphs ``X``; a graph is free of the
family when it contains no member as a (not necessarily induced) subgraph.
Three shapes occur while saturating:

* ``ForbiddenFamily``: finitely many members, optionally meaning every
  coloring of each member at once;
* ``LocalFamily``: every connected graph on at most ``k`` vertices that is
  not a subgraph of a fixed template (the family a component must avoid
  once a path has been pinned);
* ``FamilyUnion``: the union of other families.
"""
from typing import Any, Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from minorhost.core.exceptions import SizeCapExceeded
from minorhost.core.logging import get_logger
from minorhost.graphs.canonical import canonical_form
from minorhost.graphs.graph import induced, make_graph, uncolored
from minorhost.graphs.search import find_subgraph_embedding, longest_path, path_length
from minorhost.minors.engine import connected_sets

logger = get_logger(__name__)


def path(n: int) -> nx.Graph:
    """The uncolored path with ``n`` edges on vertices ``0..n``."""
    return make_graph(range(n + 1), [(i, i + 1) for i in range(n)])


def _is_path(g: nx.Graph) -> bool:
    n = g.number_of_nodes()
    return (
        n >= 1
        and g.number_of_edges() == n - 1
        and all(deg <= 2 for _, deg in g.degree)
        and nx.is_connected(g)
    )


def has_path_of_length(h: nx.Graph, n: int) -> bool:
    """``h`` contains a path with ``n`` edges (any colors)."""
    if n <= 0:
        return h.number_of_nodes() > 0
    try:
        return path_length(longest_path(h)) >= n
    except SizeCapExceeded:
        return find_subgraph_embedding(path(n), uncolored(h)) is not None


class Forbidden(BaseModel):
    """Common surface of every forbidden family."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    c: int = 1
    d: int = 1

    @property
    def k(self) -> int:
        raise NotImplementedError

    def key(self) -> tuple:
        raise NotImplementedError

    def path_bound(self) -> Optional[int]:
        """Least ``m`` such that every coloring of ``P_m`` is forbidden."""
        raise NotImplementedError

    def witness(self, h: nx.Graph) -> Optional[dict[str, Any]]:
        """Describe a forbidden subgraph of ``h``, or ``None`` if ``h`` is free."""
        raise NotImplementedError

    def is_free(self, h: nx.Graph) -> bool:
        return self.witness(h) is None

    def with_paths(self, n: int) -> "FamilyUnion":
        """This family plus every coloring of ``P_n``."""
        return FamilyUnion(parts=[self, path_family(n, self.c, self.d)], c=self.c, d=self.d)


class ForbiddenFamily(Forbidden):
    members: list[Any] = Field(default_factory=list)
    all_colorings: bool = False

    @property
    def k(self) -> int:
        return max((m.number_of_nodes() for m in self.members), default=0)

    def key(self) -> tuple:
        if self.all_colorings:
            forms = sorted(canonical_form(uncolored(m)) for m in self.members)
        else:
            forms = sorted(canonical_form(m) for m in self.members)
        return ("explicit", self.all_colorings, self.c, self.d, tuple(forms))

    def path_bound(self) -> Optional[int]:
        if not self.all_colorings:
            return None
        lengths = [m.number_of_nodes() - 1 for m in self.members if _is_path(m)]
        return min(lengths, default=None)

    def witness(self, h: nx.Graph) -> Optional[dict[str, Any]]:
        plain = uncolored(h) if self.all_colorings else h
        for i, member in enumerate(self.members):
            if member.number_of_nodes() > h.number_of_nodes():
                continue
            if self.all_colorings and _is_path(member):
                if has_path_of_length(h, member.number_of_nodes() - 1):
                    return {"member": i, "path": member.number_of_nodes() - 1}
                continue
            pattern = uncolored(member) if self.all_colorings else member
            found = find_subgraph_embedding(pattern, plain)
            if found is not None:
                return {"member": i, "map": found}
        return None


class LocalFamily(Forbidden):
    """Connected graphs on at most ``size`` vertices that do not occur in ``template``."""

    template: Any
    size: int

    @property
    def k(self) -> int:
        return self.size

    def key(self) -> tuple:
        return ("local", self.size, self.c, self.d, canonical_form(self.template))

    def path_bound(self) -> Optional[int]:
        m = path_length(longest_path(self.template)) + 1
        return m if m + 1 <= self.size else None

    def witness(self, h: nx.Graph) -> Optional[dict[str, Any]]:
        adj = {v: set(h[v]) for v in h.nodes}
        allowed = set(h.nodes)
        checked: dict[bytes, bool] = {}
        for root in sorted(h.nodes):
            for vertices in connected_sets(adj, root, allowed, self.size):
                sub = induced(h, vertices)
                form = canonical_form(sub)
                if form not in checked:
                    checked[form] = find_subgraph_embedding(sub, self.template) is not None
                if not checked[form]:
                    return {"vertices": sorted(vertices)}
            allowed.discard(root)
        return None


class FamilyUnion(Forbidden):
    parts: list[Forbidden]

    @property
    def k(self) -> int:
        return max((p.k for p in self.parts), default=0)

    def key(self) -> tuple:
        return ("union", tuple(sorted((p.key() for p in self.parts), key=repr)))

    def path_bound(self) -> Optional[int]:
        bounds = [b for b in (p.path_bound() for p in self.parts) if b is not None]
        return min(bounds, default=None)

    def witness(self, h: nx.Graph) -> Optional[dict[str, Any]]:
        for i, part in enumerate(self.parts):
            found = part.witness(h)
            if found is not None:
                return {"part": i, **found}
        return None


def path_family(n: int, c: int = 1, d: int = 1) -> ForbiddenFamily:
    """Every ``(c, d)``-coloring of ``P_n``."""
    return ForbiddenFamily(members=[path(n)], all_colorings=True, c=c, d=d)


def as_family(forbidden: Any, c: int = 1, d: int = 1) -> Forbidden:
    """Accept a family or a plain list of colored graphs."""
    if isinstance(forbidden, Forbidden):
        return forbidden
    return ForbiddenFamily(members=list(forbidden), c=c, d=d)

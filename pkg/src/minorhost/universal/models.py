"""Trading a forbidden minor plus a forbidden path for finitely many forbidden subgraphs.

A graph without a path of length ``n`` contains ``X`` as a minor iff it
contains, as a subgraph, one of the finitely many models of ``X`` whose
branch sets are trees with fewer than ``|X|`` leaves and which have no
path of length ``n`` themselves. Only minimal such models are listed:
one edge per edge of ``X`` and trees spanned by their attachment points.
Every other member of the class contains a minimal one.
"""
from itertools import product
from typing import Any, Iterator, Literal, Optional

import networkx as nx
from pydantic import BaseModel

from minorhost.core.config import settings
from minorhost.core.exceptions import BudgetExhausted, CatalogLimitExceeded, PreconditionError
from minorhost.core.logging import get_logger
from minorhost.graphs.canonical import canonical_form, canonical_graph
from minorhost.graphs.graph import uncolored
from minorhost.graphs.search import longest_path, path_length
from minorhost.minors.engine import is_minor_free
from minorhost.universal.families import ForbiddenFamily, path

logger = get_logger(__name__)

_MODEL_CACHE: dict[tuple[bytes, int], list[nx.Graph]] = {}


class _BranchOption(BaseModel):
    tree: Any
    attach: dict[int, int]  # index into the owner's incident edges -> tree vertex


def _trees(order: int) -> Iterator[nx.Graph]:
    if order == 1:
        t = nx.Graph()
        t.add_node(0)
        yield t
        return
    yield from nx.nonisomorphic_trees(order)


def _branch_options(degree: int, n: int, max_vertices: int) -> list[_BranchOption]:
    """Trees whose leaves are all attachment points, with every attachment map."""
    if degree == 0:
        return [_BranchOption(tree=next(_trees(1)), attach={})]
    options: list[_BranchOption] = []
    top = min(max_vertices, 1 + degree * max(n - 1, 0))
    for order in range(1, top + 1):
        for tree in _trees(order):
            leaves = {v for v in tree.nodes if tree.degree(v) == 1}
            if len(leaves) > degree:
                continue
            if order > 1 and nx.diameter(tree) > n - 1:
                continue
            for targets in product(sorted(tree.nodes), repeat=degree):
                if leaves <= set(targets):
                    options.append(_BranchOption(tree=tree, attach=dict(enumerate(targets))))
    return options


def enumerate_forbidden_models(
    x: nx.Graph,
    n: int,
    max_tree_vertices: Optional[int] = None,
    max_count: Optional[int] = None,
) -> list[nx.Graph]:
    """Minimal models of ``x`` without a path of length ``n``, up to isomorphism.

    Returned as canonical graphs ordered by canonical label.
    """
    if x.number_of_nodes() == 0 or not nx.is_connected(x):
        raise PreconditionError("pattern must be connected and non-empty", {"vertices": x.number_of_nodes()})
    if n < 1:
        raise PreconditionError("path length must be positive", {"n": n})
    cache_key = (canonical_form(uncolored(x)), n)
    if cache_key in _MODEL_CACHE:
        return _MODEL_CACHE[cache_key]

    max_tree_vertices = settings.model_max_tree_vertices if max_tree_vertices is None else max_tree_vertices
    max_count = settings.model_max_count if max_count is None else max_count

    order = list(nx.bfs_tree(x, min(x.nodes)))
    incident = {y: sorted(tuple(sorted(e)) for e in x.edges(y)) for y in order}
    options = {y: _branch_options(len(incident[y]), n, max_tree_vertices) for y in order}

    found: dict[bytes, nx.Graph] = {}
    visited = 0

    def place(depth: int, g: nx.Graph, offsets: dict[int, int], chosen: dict[int, _BranchOption]) -> None:
        nonlocal visited
        if depth == len(order):
            canon = canonical_graph(g)
            found.setdefault(canonical_form(canon), canon)
            return
        y = order[depth]
        for option in options[y]:
            visited += 1
            if visited > max_count:
                raise CatalogLimitExceeded(
                    "forbidden-model enumeration exceeded its combination limit",
                    {"pattern_order": x.number_of_nodes(), "n": n, "limit": max_count, "depth": depth},
                )
            base = g.number_of_nodes()
            h = g.copy()
            h.add_nodes_from(base + v for v in option.tree.nodes)
            h.add_edges_from((base + u, base + v) for u, v in option.tree.edges)
            for i, e in enumerate(incident[y]):
                z = e[0] if e[1] == y else e[1]
                if z not in chosen:
                    continue
                j = incident[z].index(e)
                h.add_edge(base + option.attach[i], offsets[z] + chosen[z].attach[j])
            if path_length(longest_path(h, cap=h.number_of_nodes())) >= n:
                continue
            offsets[y] = base
            chosen[y] = option
            place(depth + 1, h, offsets, chosen)
            del offsets[y]
            del chosen[y]

    place(0, nx.Graph(), {}, {})
    members = [found[k] for k in sorted(found)]
    logger.debug(
        "forbidden models enumerated",
        extra={"pattern_order": x.number_of_nodes(), "n": n, "members": len(members), "visited": visited},
    )
    _MODEL_CACHE[cache_key] = members
    return members


def forbidden_family_for(x: nx.Graph, n: int, c: int = 1) -> ForbiddenFamily:
    """Subgraph family equivalent to excluding ``x`` as a minor and ``P_n`` as a subgraph."""
    members = [*enumerate_forbidden_models(x, n), path(n)]
    return ForbiddenFamily(members=members, all_colorings=True, c=c, d=1)


class ClassEquivalence(BaseModel):
    minor_free: Optional[bool]
    subgraph_free: bool
    status: Literal["ok", "inconclusive"] = "ok"

    @property
    def equal(self) -> Optional[bool]:
        if self.minor_free is None:
            return None
        return self.minor_free == self.subgraph_free


def check_class_equivalence(
    g: nx.Graph, x: nx.Graph, n: int, budget: Optional[int] = None
) -> ClassEquivalence:
    """Compare ``{x, P_n}``-minor-freeness with subgraph-freeness of the model family."""
    subgraph_free = forbidden_family_for(x, n).is_free(g)
    try:
        result = is_minor_free(uncolored(g), [uncolored(x), path(n)], budget)
    except BudgetExhausted as e:
        logger.warning(f"class equivalence inconclusive: {e}")
        return ClassEquivalence(minor_free=None, subgraph_free=subgraph_free, status="inconclusive")
    if result.status == "inconclusive":
        return ClassEquivalence(minor_free=None, subgraph_free=subgraph_free, status="inconclusive")
    return ClassEquivalence(minor_free=result.free, subgraph_free=subgraph_free)

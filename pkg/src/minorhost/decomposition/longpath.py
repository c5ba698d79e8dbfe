"""Long graph paths force long paths in the decomposition tree.

If ``(T, V)`` has width below ``w`` and ``g`` has a path of length
``ell(w, k)``, then ``T`` has a path of length ``k``. The construction
removes a node ``t`` lying on every longest tree path, keeps the longest
piece ``P'`` of ``P - V_t`` and recurses into the component of ``T - t``
whose bags hold ``P'``.
"""
from typing import Optional

import networkx as nx
from pydantic import BaseModel, Field

from minorhost.core.exceptions import CounterexampleCandidate, PreconditionError
from minorhost.core.logging import get_logger
from minorhost.decomposition.tree import TreeDecomposition, verify_decomposition
from minorhost.graphs.search import longest_path, path_length

logger = get_logger(__name__)


def ell(w: int, k: int) -> int:
    """ell_w(1) = 1, ell_w(k) = (w + 1) * ell_w(k - 1) + 2w; exact integers."""
    if w < 1 or k < 1:
        raise PreconditionError("ell needs w >= 1 and k >= 1", {"w": w, "k": k})
    value = 1
    for _ in range(k - 1):
        value = (w + 1) * value + 2 * w
    return value


class LiftStep(BaseModel):
    """One level of the recursion."""

    k: int
    node: int
    path_length: int
    piece_length: int
    required: int
    component: list[int]


class LongTreePath(BaseModel):
    tree_path: list[int]
    trace: list[LiftStep] = Field(default_factory=list)

    @property
    def length(self) -> int:
        return path_length(self.tree_path)


def longest_tree_path(tree: nx.Graph) -> list[int]:
    """Longest path of a tree by double sweep; ties go to least ids."""
    start = min(tree.nodes)
    lengths = nx.single_source_shortest_path_length(tree, start)
    a = min(lengths, key=lambda t: (-lengths[t], t))
    paths = nx.single_source_shortest_path(tree, a)
    b = min(paths, key=lambda t: (-len(paths[t]), t))
    return paths[b]


def _is_graph_path(g: nx.Graph, path: list[int]) -> bool:
    return len(set(path)) == len(path) and all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def _pieces(path: list[int], removed: frozenset[int]) -> list[list[int]]:
    pieces: list[list[int]] = []
    current: list[int] = []
    for v in path:
        if v in removed:
            if current:
                pieces.append(current)
            current = []
        else:
            current.append(v)
    if current:
        pieces.append(current)
    return pieces


def _choose_node(tree: nx.Graph, bags: dict[int, frozenset[int]], path: list[int]) -> int:
    """Among nodes on every longest tree path, minimize the largest leftover piece."""
    candidates = sorted(nx.center(tree))
    return min(
        candidates,
        key=lambda t: (max((len(p) for p in _pieces(path, bags[t])), default=0), t),
    )


def lift_long_path(
    g: nx.Graph,
    td: TreeDecomposition,
    k: int,
    w: Optional[int] = None,
    path: Optional[list[int]] = None,
) -> LongTreePath:
    """Return a tree path of length >= ``k`` plus the recursion trace."""
    report = verify_decomposition(g, td)
    if not report.valid:
        raise PreconditionError("invalid tree-decomposition", {"violations": report.violations})
    w = report.width + 1 if w is None else w
    if report.width >= w:
        raise PreconditionError("decomposition is too wide", {"width": report.width, "w": w})
    if k < 1:
        raise PreconditionError("k must be positive", {"k": k})
    if td.tree.number_of_nodes() == 1:
        raise PreconditionError("a one-node tree has no path of positive length", {"tree_nodes": 1, "k": k})

    required = ell(w, k)
    if path is None:
        path = longest_path(g)
    elif not _is_graph_path(g, path):
        raise PreconditionError("supplied path is not a path of the graph", {"path": path})
    if path_length(path) < required:
        raise PreconditionError(
            "graph path too short", {"path_length": path_length(path), "required": required, "w": w, "k": k}
        )

    trace: list[LiftStep] = []
    tree: nx.Graph = td.tree
    bags = dict(td.bags)
    current = list(path)
    level = k
    while level > 1:
        t = _choose_node(tree, bags, current)
        pieces = _pieces(current, bags[t])
        piece = max(pieces, key=len, default=[])
        needed = ell(w, level - 1)
        rest = nx.Graph(tree)
        rest.remove_node(t)
        holder = None
        for comp in sorted(nx.connected_components(rest), key=min):
            held: set[int] = set()
            for u in comp:
                held |= bags[u]
            if piece and set(piece) <= held:
                holder = comp
                break
        trace.append(
            LiftStep(
                k=level,
                node=t,
                path_length=path_length(current),
                piece_length=path_length(piece),
                required=needed,
                component=sorted(holder) if holder else [],
            )
        )
        if holder is None or path_length(piece) < needed:
            raise CounterexampleCandidate(
                "no path piece of the required length inside one tree component",
                {"trace": [s.model_dump() for s in trace]},
            )
        keep = frozenset(piece)
        tree = nx.Graph(rest.subgraph(holder))
        bags = {u: bags[u] & keep for u in holder}
        current = piece
        level -= 1

    answer = longest_tree_path(td.tree)
    logger.debug("lifted long path", extra={"k": k, "w": w, "tree_path_length": path_length(answer)})
    if path_length(answer) < k:
        raise CounterexampleCandidate(
            "tree has no path of length k although the graph path is long enough",
            {"k": k, "w": w, "tree_path": answer, "trace": [s.model_dump() for s in trace]},
        )
    return LongTreePath(tree_path=answer, trace=trace)

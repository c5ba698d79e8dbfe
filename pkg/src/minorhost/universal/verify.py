"""Host soundness checks: piece freeness, gluing shape, and a direct minor search."""
from collections import Counter
from itertools import combinations
from typing import Optional

import networkx as nx
from pydantic import BaseModel, Field

from minorhost.core.exceptions import BudgetExhausted
from minorhost.core.logging import get_logger
from minorhost.decomposition.tree import TreeDecomposition, verify_decomposition
from minorhost.graphs.canonical import canonical_form
from minorhost.graphs.graph import edge_color, edge_key, spanning, uncolored
from minorhost.schemas.schemas import HostReportDocument
from minorhost.universal.families import has_path_of_length
from minorhost.universal.host import (
    HostDescription,
    HostMode,
    Piece,
    find_forbidden_minor,
    padding_pieces,
    union_of_pieces,
)

logger = get_logger(__name__)


class HostReport(BaseModel):
    free: bool
    pieces: int
    vertices: int
    checks: dict[str, bool]
    violations: list[str] = Field(default_factory=list)
    inconclusive: list[str] = Field(default_factory=list)

    def __bool__(self) -> bool:
        return self.free

    def to_document(self) -> HostReportDocument:
        return HostReportDocument(**self.model_dump())


def piece_decomposition(host: HostDescription, pieces: list[Piece]) -> TreeDecomposition:
    """Tree-decomposition whose parts are the pieces, hung below a root bag."""
    bags: dict[int, set[int]] = {0: {host.root}}
    edges = []
    for piece in pieces:
        bags[piece.index + 1] = set(piece.graph.nodes)
        edges.append((0 if piece.parent is None else piece.parent + 1, piece.index + 1))
    return TreeDecomposition.from_bags(bags, edges)


def _check_pieces(
    host: HostDescription, pieces: list[Piece], budget: Optional[int], violations: list[str], inconclusive: list[str]
) -> bool:
    ok = True
    seen: dict[tuple[bytes, int], Optional[str]] = {}
    for piece in pieces:
        key = (canonical_form(piece.graph), piece.tag)
        if key not in seen:
            plain = uncolored(piece.graph)
            problem = None
            if has_path_of_length(plain, piece.tag):
                problem = f"contains a path of length {piece.tag}"
            else:
                try:
                    if find_forbidden_minor(host.forbidden, plain, budget) is not None:
                        problem = f"contains {host.forbidden.label} as a minor"
                except BudgetExhausted:
                    problem = "inconclusive"
            seen[key] = problem
        problem = seen[key]
        if problem == "inconclusive":
            inconclusive.append(f"piece {piece.index}")
            ok = False
        elif problem is not None:
            violations.append(f"piece {piece.index} {problem}")
            ok = False
    return ok


def _check_structure(host: HostDescription, pieces: list[Piece], star: nx.Graph, violations: list[str]) -> bool:
    limit = 1 if host.mode == HostMode.CYCLE else 2
    before = len(violations)

    holders: dict[int, list[int]] = {}
    for piece in pieces:
        for v in piece.graph.nodes:
            holders.setdefault(v, []).append(piece.index)
    shared: Counter[tuple[int, int]] = Counter()
    for v, idx in holders.items():
        for pair in combinations(idx, 2):
            shared[pair] += 1
    for (i, j), count in sorted(shared.items()):
        if count > limit:
            violations.append(f"pieces {i} and {j} share {count} vertices")

    if host.mode == HostMode.CYCLE:
        incidence = nx.Graph()
        for v, idx in holders.items():
            if len(idx) > 1:
                incidence.add_edges_from((("vertex", v), ("piece", i)) for i in idx)
        if not nx.is_forest(incidence):
            violations.append("pieces and their shared vertices do not form a forest")
    else:
        colors: dict[tuple[int, int], set[int]] = {}
        for piece in pieces:
            for u, v in piece.graph.edges:
                colors.setdefault(edge_key(u, v), set()).add(edge_color(piece.graph, u, v))
        for e, found in sorted(colors.items()):
            if len(found) > 1:
                violations.append(f"edge {e[0]}-{e[1]} has colors {sorted(found)} in different pieces")

    report = verify_decomposition(uncolored(star), piece_decomposition(host, pieces))
    violations.extend(f"decomposition: {v}" for v in report.violations)
    if report.adhesion > limit:
        violations.append(f"adhesion {report.adhesion} exceeds {limit}")
    if host.mode == HostMode.WHEEL and not report.adhesion_sets_complete_in_g:
        violations.append("an adhesion set is not complete in the 2-colored host")
    return len(violations) == before


def verify_host(host: HostDescription, size_budget: Optional[int] = None, budget: Optional[int] = None) -> HostReport:
    """Check piece freeness, gluing invariants and the truncation itself.

    The truncation is padded to ``size_budget`` vertices first. Failures
    are reported, never raised.
    """
    pieces = [*host.pieces, *padding_pieces(host, size_budget)]
    star = union_of_pieces(host, pieces)
    violations: list[str] = []
    inconclusive: list[str] = []
    checks = {
        "pieces_free": _check_pieces(host, pieces, budget, violations, inconclusive),
        "piece_structure": _check_structure(host, pieces, star, violations),
    }

    targets = [("truncation", star)]
    if host.mode == HostMode.WHEEL:
        targets = [
            ("truncation", spanning(star, [(u, v) for u, v in star.edges if edge_color(star, u, v) == 0])),
            ("colored truncation", star),
        ]
    ok = True
    for name, graph in targets:
        try:
            model = find_forbidden_minor(host.forbidden, graph, budget)
        except BudgetExhausted as e:
            logger.warning(f"host verification inconclusive: {e}", extra={"target": name})
            inconclusive.append(name)
            ok = False
            continue
        if model is not None:
            sets = {v: sorted(s) for v, s in model.branch_sets.items()}
            violations.append(f"{name} contains {host.forbidden.label} as a minor: branch sets {sets}")
            ok = False
    checks["truncation_free"] = ok

    report = HostReport(
        free=all(checks.values()),
        pieces=len(pieces),
        vertices=star.number_of_nodes(),
        checks=checks,
        violations=violations,
        inconclusive=inconclusive,
    )
    if violations:
        logger.error("host verification failed", extra={"violations": violations[:10]})
    else:
        logger.info("host verified", extra={"pieces": report.pieces, "vertices": report.vertices, "free": report.free})
    return report

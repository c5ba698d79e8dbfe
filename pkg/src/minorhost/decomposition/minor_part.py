"""Locate a bag that already carries a highly connected minor."""
from itertools import combinations

import networkx as nx
from pydantic import BaseModel, ConfigDict

from minorhost.core.exceptions import CounterexampleCandidate, PreconditionError
from minorhost.core.logging import get_logger
from minorhost.decomposition.tree import TreeDecomposition, verify_decomposition
from minorhost.graphs.graph import induced
from minorhost.graphs.search import vertex_connectivity
from minorhost.minors.engine import MinorModel, build_model, verify_model

logger = get_logger(__name__)


class MinorPart(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    node: int
    model: MinorModel
    walk: list[int]


def _meets_all(model: MinorModel, vertices: set[int]) -> bool:
    return all(bset & vertices for bset in model.branch_sets.values())


def locate_minor_part(g: nx.Graph, td: TreeDecomposition, pattern: nx.Graph, model: MinorModel) -> MinorPart:
    """Find a node ``t`` with ``pattern`` a minor of ``g[V_t]``.

    Every tree edge ``tu`` is oriented toward ``u`` when all branch sets meet
    the bags on ``u``'s side; the end of a maximal directed walk is ``t``, and
    the branch sets cut down to ``V_t`` form the returned model.
    """
    report = verify_decomposition(g, td)
    if not report.valid:
        raise PreconditionError("invalid tree-decomposition", {"violations": report.violations})
    for t, u in sorted(td.tree.edges):
        for a, b in combinations(sorted(td.adhesion_set(t, u)), 2):
            if not g.has_edge(a, b):
                raise PreconditionError(
                    "adhesion set is not complete", {"tree_edge": [t, u], "missing_edge": [a, b]}
                )
    kappa = vertex_connectivity(pattern)
    if kappa <= report.adhesion:
        raise PreconditionError(
            "pattern connectivity must exceed the adhesion", {"connectivity": kappa, "adhesion": report.adhesion}
        )
    check = verify_model(model.model_copy(update={"host": g, "pattern": pattern}))
    if not check:
        raise PreconditionError("model does not verify against the graph", {"violations": check.violations})

    towards: dict[int, list[int]] = {t: [] for t in td.tree.nodes}
    for t, u in td.tree.edges:
        to_u = _meets_all(model, td.union_of(td.side(t, u)))
        to_t = _meets_all(model, td.union_of(td.side(u, t)))
        if not (to_u or to_t):
            raise CounterexampleCandidate(
                "neither side of a tree edge meets every branch set", {"tree_edge": sorted([t, u])}
            )
        if to_u and to_t:
            towards[min(t, u)].append(max(t, u))
        elif to_u:
            towards[t].append(u)
        else:
            towards[u].append(t)

    walk = [min(td.tree.nodes)]
    while towards[walk[-1]]:
        walk.append(min(towards[walk[-1]]))

    node = walk[-1]
    bag = set(td.bags[node])
    part = induced(g, bag)
    try:
        restricted = build_model(pattern, part, {v: set(s) & bag for v, s in model.branch_sets.items()})
    except PreconditionError as e:
        raise CounterexampleCandidate(str(e), {"node": node, **e.measurements}) from e
    check = verify_model(restricted)
    if not check:
        raise CounterexampleCandidate(
            "restricted model does not verify", {"node": node, "violations": check.violations}
        )
    logger.debug("located minor part", extra={"node": node, "walk": walk})
    return MinorPart(node=node, model=restricted, walk=walk)

"""Named graph families and the cone operation."""
import re
from enum import Enum
from typing import Any, Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from minorhost.core.exceptions import PreconditionError, UnsupportedFamily
from minorhost.graphs.graph import make_graph, normalize


class Family(str, Enum):
    """Supported families. Values double as CLI names."""

    PATH = "P"
    CYCLE = "C"
    TWO_CYCLES = "Cnm"
    WHEEL = "W"
    DOUBLE_WHEEL = "D"
    LADDER = "L"
    CIRCULAR_LADDER = "O"
    MOEBIUS_LADDER = "M"
    COMPLETE_BIPARTITE = "K"
    RAY_TWO_APEXES = "R2"
    CONE = "cone"


# family -> (parameter count, minimum value of every parameter)
_ARITY: dict[Family, tuple[int, int]] = {
    Family.PATH: (1, 1),
    Family.CYCLE: (1, 3),
    Family.TWO_CYCLES: (2, 3),
    Family.WHEEL: (1, 3),
    Family.DOUBLE_WHEEL: (1, 3),
    Family.LADDER: (1, 3),
    Family.CIRCULAR_LADDER: (1, 3),
    Family.MOEBIUS_LADDER: (1, 3),
    Family.COMPLETE_BIPARTITE: (2, 1),
    Family.RAY_TWO_APEXES: (1, 1),
    Family.CONE: (0, 0),
}

_COMPACT = re.compile(r"^(Cnm|R2:|P|C|W|D|L|O|M|K)(\d+)(?:,(\d+))?$")


class FamilySpec(BaseModel):
    """A named family member such as W_5 or C_{3,4}."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    family: Family
    params: tuple[int, ...] = Field(default_factory=tuple)
    base: Optional[Any] = None  # the graph coned over, for Family.CONE

    @classmethod
    def of(cls, family: str | Family, *params: int) -> "FamilySpec":
        return cls(family=Family(family), params=tuple(int(p) for p in params))

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse compact names: ``P4``, ``C5``, ``C3,4``, ``W5``, ``K3,4``, ``R2:6``."""
        match = _COMPACT.match(text.strip())
        if not match:
            raise UnsupportedFamily(f"cannot parse family name {text!r}", {"name": text})
        name, first, second = match.groups()
        name = name.rstrip(":")
        params = [int(first)] + ([int(second)] if second is not None else [])
        if name == "C" and len(params) == 2:
            name = Family.TWO_CYCLES.value
        return cls.of(name, *params)

    @property
    def label(self) -> str:
        if self.family == Family.CONE:
            return "cone"
        if self.family == Family.TWO_CYCLES:
            return "C{},{}".format(*self.params)
        if self.family == Family.RAY_TWO_APEXES:
            return f"R2:{self.params[0]}"
        return self.family.value + ",".join(str(p) for p in self.params)

    def check(self) -> None:
        """Raise a range diagnostic if parameters are out of range."""
        arity, minimum = _ARITY[self.family]
        if len(self.params) != arity:
            raise PreconditionError(
                f"{self.family.value} takes {arity} parameter(s)",
                {"family": self.family.value, "params": list(self.params)},
            )
        bad = [p for p in self.params if p < minimum]
        if bad:
            raise PreconditionError(
                f"{self.family.value} parameters must be >= {minimum}",
                {"family": self.family.value, "params": list(self.params), "minimum": minimum},
            )
        if self.family == Family.CONE and self.base is None:
            raise PreconditionError("cone needs a base graph", {"family": "cone"})


def generate(spec: FamilySpec) -> nx.Graph:
    """Generate the named graph with its canonical vertex labeling."""
    spec.check()
    p = spec.params
    family = spec.family

    if family == Family.PATH:
        return normalize(nx.path_graph(p[0] + 1))
    if family == Family.CYCLE:
        return normalize(nx.cycle_graph(p[0]))
    if family == Family.TWO_CYCLES:
        return two_cycles(p[0], p[1])
    if family == Family.WHEEL:
        return normalize(nx.wheel_graph(p[0] + 1))
    if family == Family.DOUBLE_WHEEL:
        return _rim_with_apexes(nx.cycle_graph(p[0]), 2)
    if family == Family.LADDER:
        return normalize(nx.ladder_graph(p[0]))
    if family == Family.CIRCULAR_LADDER:
        return normalize(nx.circular_ladder_graph(p[0]))
    if family == Family.MOEBIUS_LADDER:
        k = p[0]
        h = nx.ladder_graph(k)
        h.add_edges_from([(0, 2 * k - 1), (k - 1, k)])
        return normalize(h)
    if family == Family.COMPLETE_BIPARTITE:
        return normalize(nx.complete_bipartite_graph(p[0], p[1]))
    if family == Family.RAY_TWO_APEXES:
        return _rim_with_apexes(nx.path_graph(p[0]), 2)
    return cone(spec.base)


def two_cycles(n: int, m: int) -> nx.Graph:
    """C_{n,m}: an n-cycle on 0..n-1 and an m-cycle sharing the edge 01.

    The m-cycle runs 1, n, n+1, ..., n+m-3, 0.
    """
    edges = [(i, (i + 1) % n) for i in range(n)]
    detour = [1, *range(n, n + m - 2), 0]
    edges += list(zip(detour, detour[1:]))
    return make_graph(range(n + m - 2), edges)


def _rim_with_apexes(rim: nx.Graph, apexes: int) -> nx.Graph:
    k = rim.number_of_nodes()
    h = nx.Graph(rim)
    for a in range(k, k + apexes):
        h.add_edges_from((a, v) for v in range(k))
    return normalize(h)


def cone(g: nx.Graph) -> nx.Graph:
    """Add one fresh apex (id = max id + 1) adjacent to every vertex of ``g``."""
    apex = max(g.nodes, default=-1) + 1
    h = nx.Graph(g)
    h.add_node(apex, color=0)
    h.add_edges_from((apex, v, {"color": 0}) for v in g.nodes)
    return normalize(h)

"""Pinning a path: delete it and remember every vertex's attachment in its color.

For a pinned colored path ``P`` with vertices ``p_0 .. p_{l-1}``, a vertex
outside ``P`` is described by its own color and, for each position ``i``,
a digit that is 0 when it has no edge to ``p_i`` and ``1 + color`` of that
edge otherwise. The descriptor is packed into

    code = color + d * sum(digit_i * (c + 1) ** i)

so ``d' = d * (c + 1) ** l`` codes cover every descriptor exactly once.
"""
from typing import Any

import networkx as nx
from pydantic import BaseModel, ConfigDict

from minorhost.core.exceptions import PreconditionError
from minorhost.graphs.graph import edge_color, induced, make_graph, palette, vertex_color


class PinnedTransform(BaseModel):
    """The pinned path (with the colored graph it induces) and the palette it encodes."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    path: tuple[int, ...]
    pin: Any
    c: int
    d: int

    @classmethod
    def from_path(cls, g: nx.Graph, path: list[int]) -> "PinnedTransform":
        c, d = palette(g)
        return cls(path=tuple(path), pin=induced(g, path), c=c, d=d)

    @property
    def d_prime(self) -> int:
        return self.d * (self.c + 1) ** len(self.path)

    def encode(self, color: int, digits: list[int]) -> int:
        if not 0 <= color < self.d:
            raise PreconditionError("vertex color outside the palette", {"color": color, "d": self.d})
        if len(digits) != len(self.path) or any(not 0 <= x <= self.c for x in digits):
            raise PreconditionError("attachment digits outside the encoding", {"digits": digits, "c": self.c})
        code = 0
        for x in reversed(digits):
            code = code * (self.c + 1) + x
        return color + self.d * code

    def decode(self, code: int) -> tuple[int, list[int]]:
        if not 0 <= code < self.d_prime:
            raise PreconditionError("color outside the encoded palette", {"code": code, "d_prime": self.d_prime})
        color, rest = code % self.d, code // self.d
        digits = []
        for _ in self.path:
            digits.append(rest % (self.c + 1))
            rest //= self.c + 1
        return color, digits


def transform_t(h: nx.Graph, pt: PinnedTransform) -> nx.Graph:
    """``h`` minus the pin, each remaining vertex recolored by its attachment descriptor."""
    pinned = set(pt.path)
    position = {p: i for i, p in enumerate(pt.path)}
    colors: dict[int, int] = {}
    for v in h.nodes:
        if v in pinned:
            continue
        digits = [0] * len(pt.path)
        for w in h[v]:
            if w in pinned:
                digits[position[w]] = 1 + edge_color(h, v, w)
        colors[v] = pt.encode(vertex_color(h, v), digits)
    rest = h.subgraph(colors)
    return make_graph(
        rest.nodes,
        rest.edges,
        c=pt.c,
        d=pt.d_prime,
        vertex_colors=colors,
        edge_colors={(u, v): edge_color(h, u, v) for u, v in rest.edges},
    )


def transform_t_inv(h_prime: nx.Graph, pt: PinnedTransform) -> nx.Graph:
    """The unique graph containing the pin whose transform is ``h_prime``."""
    clash = set(h_prime.nodes) & set(pt.path)
    if clash:
        raise PreconditionError("graph must be disjoint from the pin", {"shared": sorted(clash)})
    colors = {v: vertex_color(pt.pin, v) for v in pt.path}
    edge_colors = {(u, v): edge_color(pt.pin, u, v) for u, v in pt.pin.edges}
    edges = list(pt.pin.edges)
    for v in h_prime.nodes:
        color, digits = pt.decode(vertex_color(h_prime, v))
        colors[v] = color
        for p, x in zip(pt.path, digits):
            if x:
                edges.append((v, p))
                edge_colors[(v, p)] = x - 1
    for u, v in h_prime.edges:
        edges.append((u, v))
        edge_colors[(u, v)] = edge_color(h_prime, u, v)
    return make_graph(
        [*pt.path, *h_prime.nodes],
        edges,
        c=pt.c,
        d=pt.d,
        vertex_colors=colors,
        edge_colors=edge_colors,
    )

"""Lazily grown universal hosts.

A host starts as a single root vertex and grows by gluing pieces: each
piece is a finite window onto a copy of a universal graph for
``{X, P_n}``-minor-free graphs, tagged with its ``n``. Cycle hosts glue at
one vertex. Wheel hosts carry a 2-edge-coloring (0 real, 1 virtual) and
glue at one vertex or at one edge of matching color; the host proper is
the color-0 spanning subgraph.

Pieces are never changed once added.
"""
import json
from enum import Enum
from pathlib import Path
from typing import Any, Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from minorhost.core.exceptions import UnsupportedFamily
from minorhost.core.logging import get_logger
from minorhost.graphs.canonical import canonical_form, canonical_graph
from minorhost.graphs.families import Family, FamilySpec, generate
from minorhost.graphs.formats import document_to_graph, graph_to_document
from minorhost.graphs.graph import Edge, edge_color, edge_key, make_graph, relabel, spanning, uncolored
from minorhost.graphs.search import is_k4_minor_free
from minorhost.minors.engine import MinorModel, circumference_at_least, cycle_model, find_minor_model
from minorhost.schemas.schemas import HostStateDocument, PieceRecord

logger = get_logger(__name__)


class HostMode(str, Enum):
    CYCLE = "cycle"
    WHEEL = "wheel"


class Backend(str, Enum):
    CATALOG = "catalog"
    ADAPTIVE = "adaptive"


class Piece(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    index: int
    tag: int = Field(..., description="n of the universal graph this piece was drawn from")
    graph: Any
    glue: tuple[int, ...] = ()
    parent: Optional[int] = Field(None, description="earliest piece holding the glue; None for the root")
    padding: bool = False


class HostDescription(BaseModel):
    """Mutable host state. One writer at a time; snapshots are taken with :func:`materialize`."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    forbidden: FamilySpec
    mode: HostMode
    backend: Backend = Backend.ADAPTIVE
    root: int = 0
    next_vertex: int = 1
    pieces: list[Piece] = Field(default_factory=list)

    @property
    def pattern(self) -> nx.Graph:
        return generate(self.forbidden)

    @property
    def edge_colors(self) -> int:
        return 2 if self.mode == HostMode.WHEEL else 1

    def fresh_vertex(self) -> int:
        v = self.next_vertex
        self.next_vertex += 1
        return v

    def holders(self) -> dict[int, list[int]]:
        """Vertex -> indices of the pieces containing it, ascending."""
        out: dict[int, list[int]] = {}
        for piece in self.pieces:
            for v in piece.graph.nodes:
                out.setdefault(v, []).append(piece.index)
        return out

    def virtual_edges(self) -> list[Edge]:
        found = {
            edge_key(u, v)
            for piece in self.pieces
            for u, v in piece.graph.edges
            if edge_color(piece.graph, u, v) == 1
        }
        return sorted(found)


def build_host(forbidden: FamilySpec | str, backend: Backend | str = Backend.ADAPTIVE) -> HostDescription:
    """An empty host for C_n, C_{n,m} or W_k; anything else is unsupported."""
    spec = FamilySpec.parse(forbidden) if isinstance(forbidden, str) else forbidden
    spec.check()
    if spec.family in (Family.CYCLE, Family.TWO_CYCLES):
        mode = HostMode.CYCLE
    elif spec.family == Family.WHEEL:
        mode = HostMode.WHEEL
    else:
        raise UnsupportedFamily(
            f"no universal host construction for {spec.label}",
            {"family": spec.label, "supported": ["C<n>", "C<n>,<m>", "W<k>"]},
        )
    host = HostDescription(forbidden=spec, mode=mode, backend=Backend(backend))
    logger.info("host created", extra={"forbidden": spec.label, "mode": mode.value, "backend": host.backend.value})
    return host


def find_forbidden_minor(forbidden: FamilySpec, g: nx.Graph, budget: Optional[int] = None) -> Optional[MinorModel]:
    """Model of the forbidden minor in ``g``, using the cheapest exact oracle available."""
    g = uncolored(g)
    if forbidden.family == Family.CYCLE:
        n = forbidden.params[0]
        cycle = circumference_at_least(g, n)
        return cycle_model(cycle, g, n) if cycle else None
    if forbidden.family == Family.WHEEL and forbidden.params[0] == 3 and is_k4_minor_free(g):
        return None
    return find_minor_model(generate(forbidden), g, budget)


def union_of_pieces(host: HostDescription, pieces: list[Piece]) -> nx.Graph:
    """The root plus every piece, colors kept."""
    g = nx.Graph()
    g.add_node(host.root, color=0)
    for piece in pieces:
        g.update(piece.graph)
    g.graph.update(c=host.edge_colors, d=1)
    return g


def padding_pieces(host: HostDescription, size_budget: Optional[int]) -> list[Piece]:
    """Deterministic unexplored copies glued round-robin until ``size_budget`` vertices.

    Templates are the distinct piece types (least canonical label first)
    plus a single edge; copy ``i`` uses template ``i mod T`` glued by its
    canonical vertex 0 to the ``i mod A``-th existing vertex.
    """
    base = union_of_pieces(host, host.pieces)
    if not size_budget or base.number_of_nodes() >= size_budget:
        return []
    k2 = make_graph([0, 1], [(0, 1)], c=host.edge_colors)
    templates: dict[bytes, tuple[nx.Graph, int]] = {canonical_form(k2): (k2, 2)}
    for piece in host.pieces:
        templates.setdefault(canonical_form(piece.graph), (piece.graph, piece.tag))
    ordered = [(canonical_graph(g), tag) for form, (g, tag) in sorted(templates.items()) if g.number_of_nodes() > 1]

    anchors = sorted(base.nodes)
    earliest = {v: idx[0] for v, idx in host.holders().items()}
    size = base.number_of_nodes()
    next_id = host.next_vertex
    extra: list[Piece] = []
    i = 0
    while size < size_budget:
        template, tag = ordered[i % len(ordered)]
        anchor = anchors[i % len(anchors)]
        mapping = {0: anchor}
        for v in sorted(template.nodes)[1:]:
            mapping[v] = next_id
            next_id += 1
        extra.append(
            Piece(
                index=len(host.pieces) + len(extra),
                tag=tag,
                graph=relabel(template, mapping),
                glue=(anchor,),
                parent=earliest.get(anchor),
                padding=True,
            )
        )
        size += template.number_of_nodes() - 1
        i += 1
    return extra


def materialize(host: HostDescription, size_budget: Optional[int] = None, star: bool = False) -> nx.Graph:
    """Finite truncation of the host.

    Wheel hosts return the color-0 spanning subgraph unless ``star`` asks
    for the 2-colored graph itself.
    """
    g = union_of_pieces(host, [*host.pieces, *padding_pieces(host, size_budget)])
    if host.mode == HostMode.WHEEL and not star:
        return spanning(g, [(u, v) for u, v in g.edges if edge_color(g, u, v) == 0])
    return nx.freeze(g)


def host_to_document(host: HostDescription) -> HostStateDocument:
    return HostStateDocument(
        forbidden=host.forbidden.label,
        mode=host.mode.value,
        backend=host.backend.value,
        root=host.root,
        next_vertex=host.next_vertex,
        pieces=[
            PieceRecord(
                index=p.index,
                tag=p.tag,
                graph=graph_to_document(p.graph),
                glue=list(p.glue),
                parent=p.parent,
                padding=p.padding,
            )
            for p in host.pieces
        ],
        virtual_edges=[list(e) for e in host.virtual_edges()],
    )


def host_from_document(doc: HostStateDocument) -> HostDescription:
    return HostDescription(
        forbidden=FamilySpec.parse(doc.forbidden),
        mode=HostMode(doc.mode),
        backend=Backend(doc.backend),
        root=doc.root,
        next_vertex=doc.next_vertex,
        pieces=[
            Piece(
                index=r.index,
                tag=r.tag,
                graph=document_to_graph(r.graph),
                glue=tuple(r.glue),
                parent=r.parent,
                padding=r.padding,
            )
            for r in doc.pieces
        ],
    )


def save_host(host: HostDescription, path: str | Path) -> None:
    Path(path).write_text(host_to_document(host).model_dump_json(indent=2))
    logger.info("host saved", extra={"path": str(path), "pieces": len(host.pieces)})


def load_host(path: str | Path) -> HostDescription:
    doc = HostStateDocument.model_validate(json.loads(Path(path).read_text()))
    return host_from_document(doc)

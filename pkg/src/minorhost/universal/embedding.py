"""Embedding guests into hosts, piece by piece, with replayable certificates."""
from typing import Any, Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from minorhost.core.exceptions import (
    BudgetExhausted,
    CatalogLimitExceeded,
    CounterexampleCandidate,
    NotInClass,
    PreconditionError,
)
from minorhost.core.logging import get_logger
from minorhost.decomposition.blocks import blocks
from minorhost.decomposition.tutte import tutte_decomposition
from minorhost.graphs.formats import document_to_graph, graph_to_document
from minorhost.graphs.graph import Edge, edge_key, induced, make_graph, relabel, uncolored
from minorhost.graphs.search import (
    extend_induced_embedding,
    find_induced_embedding,
    is_embedding,
    longest_path,
    path_length,
)
from minorhost.schemas.schemas import EmbeddingCertificateDocument
from minorhost.universal.host import (
    Backend,
    HostDescription,
    HostMode,
    Piece,
    find_forbidden_minor,
    materialize,
    union_of_pieces,
)
from minorhost.universal.models import forbidden_family_for
from minorhost.universal.saturation import expand, minimal_unfold, saturate

logger = get_logger(__name__)


class EmbeddingCertificate(BaseModel):
    """Induced embedding of a guest into a host truncation."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    guest: Any
    host_truncation: Any
    map: dict[int, int]
    induced: bool = True
    pieces: list[int] = Field(default_factory=list)
    virtual_images: list[Edge] = Field(default_factory=list)

    def verify(self, truncation: Optional[nx.Graph] = None) -> bool:
        """Replay the map against ``truncation`` (default: the one recorded)."""
        host = self.host_truncation if truncation is None else truncation
        return self.induced and is_embedding(self.guest, host, self.map, induced=True)

    def to_document(self) -> EmbeddingCertificateDocument:
        return EmbeddingCertificateDocument(
            guest=graph_to_document(self.guest),
            host_truncation=graph_to_document(self.host_truncation),
            map={str(v): x for v, x in sorted(self.map.items())},
            induced=self.induced,
            pieces=self.pieces,
            virtual_images=[list(e) for e in self.virtual_images],
        )

    @classmethod
    def from_document(cls, doc: EmbeddingCertificateDocument) -> "EmbeddingCertificate":
        return cls(
            guest=document_to_graph(doc.guest),
            host_truncation=document_to_graph(doc.host_truncation),
            map={int(v): x for v, x in doc.map.items()},
            induced=doc.induced,
            pieces=doc.pieces,
            virtual_images=[edge_key(u, v) for u, v in doc.virtual_images],
        )


class _Part(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    graph: Any
    glue: tuple[int, ...] = ()


def _block_parts(guest: nx.Graph) -> tuple[list[_Part], list[Edge]]:
    parts = [
        _Part(graph=induced(guest, b.vertices), glue=() if b.attachment is None else (b.attachment,))
        for b in blocks(guest).blocks
    ]
    return parts, []


def _torso_parts(guest: nx.Graph) -> tuple[list[_Part], list[Edge]]:
    """Torsos of the Tutte decomposition in BFS order, real edges 0 and virtual edges 1."""
    tutte = tutte_decomposition(guest)
    virtual = sorted(set().union(*tutte.virtual_edges.values()))
    star = make_graph(
        guest.nodes, [*guest.edges, *virtual], c=2, edge_colors={e: 1 for e in virtual}
    )
    bags = tutte.bags
    root = min(tutte.tree.nodes)
    parts = [_Part(graph=induced(star, bags[root]))]
    for parent, t in nx.bfs_edges(tutte.tree, root, sort_neighbors=sorted):
        parts.append(_Part(graph=induced(star, bags[t]), glue=tuple(sorted(bags[t] & bags[parent]))))
    return parts, virtual


class _Session:
    """One guest being embedded; owns the host while it runs."""

    def __init__(self, host: HostDescription, budget: Optional[int]):
        self.host = host
        self.budget = budget
        self.star = union_of_pieces(host, host.pieces)
        self.holders = host.holders()
        self.phi: dict[int, int] = {}
        self.touched: set[int] = set()

    def run(self, parts: list[_Part]) -> dict[int, int]:
        for part in parts:
            if part.glue:
                fixed = {s: self.phi[s] for s in part.glue}
            else:
                fixed = {min(part.graph.nodes): self.host.root}
            if part.graph.number_of_nodes() == len(fixed):
                self.phi.update(fixed)
                continue
            found = self._reuse(part.graph, fixed)
            if found is None:
                found = self._fresh(part.graph, fixed)
            self.phi.update(found)
        return self.phi

    def _reuse(self, part: nx.Graph, fixed: dict[int, int]) -> Optional[dict[int, int]]:
        """Least-index existing piece that takes the part with the glue held in place."""
        images = set(fixed.values())
        candidates: Optional[set[int]] = None
        for x in images:
            held = set(self.holders.get(x, []))
            candidates = held if candidates is None else candidates & held
        used = set(self.phi.values())
        blocked = set(used)
        for y in used - images:
            blocked |= set(self.star[y])
        for index in sorted(candidates or ()):
            piece = self.host.pieces[index]
            allowed = set(piece.graph.nodes) - blocked - images
            if len(allowed) < part.number_of_nodes() - len(fixed):
                continue
            window = self.star.subgraph(allowed | images)
            try:
                found = extend_induced_embedding(part, window, fixed, allowed, self.budget)
            except BudgetExhausted as e:
                logger.debug(f"reuse attempt abandoned: {e}", extra={"piece": index})
                continue
            if found is not None:
                self.touched.add(index)
                return found
        return None

    def _catalog_piece(self, part: nx.Graph, n: int) -> tuple[nx.Graph, dict[int, int]]:
        try:
            family = forbidden_family_for(self.host.pattern, n, self.host.edge_colors)
            omega = saturate(part, family, n)
        except CatalogLimitExceeded as e:
            raise CatalogLimitExceeded(f"{e}; retry with backend=adaptive", {**e.where, "n": n}) from e
        window = expand(omega, minimal_unfold(omega))
        found = find_induced_embedding(part, window)
        if found is None:
            raise CounterexampleCandidate(
                "part does not embed into the expansion of its own saturation",
                {"vertices": sorted(part.nodes), "n": n},
            )
        return window, found

    def _fresh(self, part: nx.Graph, fixed: dict[int, int]) -> dict[int, int]:
        n = path_length(longest_path(part)) + 1
        if self.host.backend == Backend.CATALOG:
            graph, local = self._catalog_piece(part, n)
        else:
            graph, local = part, {v: v for v in part.nodes}

        rename = {local[v]: x for v, x in fixed.items()}
        for w in sorted(graph.nodes):
            if w not in rename:
                rename[w] = self.host.fresh_vertex()
        glue = tuple(sorted(fixed.values()))
        holders = [set(self.holders.get(x, [])) for x in glue]
        common = set.intersection(*holders) if holders else set()
        piece = Piece(
            index=len(self.host.pieces),
            tag=n,
            graph=relabel(graph, rename),
            glue=glue,
            parent=min(common) if common else None,
        )
        self.host.pieces.append(piece)
        for v in piece.graph.nodes:
            self.holders.setdefault(v, []).append(piece.index)
        self.star.update(piece.graph)
        self.touched.add(piece.index)
        logger.debug(
            "piece added",
            extra={"piece": piece.index, "tag": n, "vertices": piece.graph.number_of_nodes(), "glue": list(glue)},
        )
        return {v: rename[local[v]] for v in part.nodes}


def embed(g: nx.Graph, host: HostDescription, budget: Optional[int] = None) -> EmbeddingCertificate:
    """Embed a connected guest from the host's class as an induced subgraph.

    Raises ``NotInClass`` with the violating model when the guest contains
    the forbidden minor.
    """
    guest = uncolored(g)
    if guest.number_of_nodes() == 0 or not nx.is_connected(guest):
        raise PreconditionError(
            "guest must be connected and non-empty",
            {"vertices": guest.number_of_nodes(), "components": nx.number_connected_components(guest)},
        )
    model = find_forbidden_minor(host.forbidden, guest, budget)
    if model is not None:
        raise NotInClass(f"guest contains {host.forbidden.label} as a minor", model)

    parts, virtual = _torso_parts(guest) if host.mode == HostMode.WHEEL else _block_parts(guest)
    session = _Session(host, budget)
    phi = session.run(parts)

    cert = EmbeddingCertificate(
        guest=guest,
        host_truncation=materialize(host),
        map=dict(sorted(phi.items())),
        pieces=sorted(session.touched),
        virtual_images=sorted(edge_key(phi[a], phi[b]) for a, b in virtual),
    )
    if not cert.verify():
        raise CounterexampleCandidate(
            "embedding failed its own replay",
            {"guest_vertices": guest.number_of_nodes(), "pieces": cert.pieces},
        )
    logger.info(
        "guest embedded",
        extra={
            "vertices": guest.number_of_nodes(),
            "parts": len(parts),
            "pieces_used": len(cert.pieces),
            "host_pieces": len(host.pieces),
        },
    )
    return cert

"""Graph codecs: graph6, edge list, colored JSON and DOT."""
import json
from typing import Iterable

import networkx as nx

from minorhost.core.exceptions import PreconditionError
from minorhost.graphs.graph import edge_color, make_graph, palette, vertex_color
from minorhost.schemas.schemas import ColoredGraphDocument, EdgeRecord, VertexRecord

# edge color -> DOT style, cycling past four colors (the label keeps the exact color)
_EDGE_STYLES = ["solid", "dashed", "dotted", "bold"]


def read_graph6(text: str) -> list[nx.Graph]:
    """One graph per non-empty line; an optional ``>>graph6<<`` header is ignored."""
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<") :]
        if not line:
            continue
        try:
            h = nx.from_graph6_bytes(line.encode("ascii"))
        except (nx.NetworkXError, ValueError) as e:
            raise PreconditionError(f"invalid graph6 line: {e}", {"line": line}) from e
        graphs.append(make_graph(h.nodes, h.edges))
    return graphs


def to_graph6(g: nx.Graph) -> str:
    """graph6 line for ``g`` (vertices taken in sorted id order, colors dropped)."""
    order = sorted(g.nodes)
    index = {v: i for i, v in enumerate(order)}
    h = nx.Graph()
    h.add_nodes_from(range(len(order)))
    h.add_edges_from((index[u], index[v]) for u, v in g.edges)
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()


def read_edge_list(text: str) -> nx.Graph:
    """``n m`` header then ``m`` lines ``u v`` over vertices ``0..n-1``."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise PreconditionError("edge list needs an 'n m' header")
    short = [i for i, ln in enumerate(lines[1:], start=1) if len(ln) < 2]
    if short:
        raise PreconditionError("edge line needs two endpoints", {"line": short[0], "tokens": lines[short[0]]})
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(a), int(b)) for a, b, *_ in lines[1:]]
    except ValueError as e:
        raise PreconditionError(f"edge list is not integral: {e}") from e
    if len(edges) != m:
        raise PreconditionError("edge count does not match header", {"header": m, "found": len(edges)})
    return make_graph(range(n), edges)


def to_edge_list(g: nx.Graph) -> str:
    order = sorted(g.nodes)
    index = {v: i for i, v in enumerate(order)}
    lines = [f"{len(order)} {g.number_of_edges()}"]
    lines += [f"{a} {b}" for a, b in sorted(tuple(sorted((index[u], index[v]))) for u, v in g.edges)]
    return "\n".join(lines) + "\n"


def graph_to_document(g: nx.Graph) -> ColoredGraphDocument:
    c, d = palette(g)
    return ColoredGraphDocument(
        vertices=[VertexRecord(id=v, color=vertex_color(g, v)) for v in sorted(g.nodes)],
        edges=[
            EdgeRecord(u=u, v=v, color=edge_color(g, u, v))
            for u, v in sorted(tuple(sorted(e)) for e in g.edges)
        ],
        c=c,
        d=d,
    )


def document_to_graph(doc: ColoredGraphDocument) -> nx.Graph:
    return make_graph(
        [rec.id for rec in doc.vertices],
        [(rec.u, rec.v) for rec in doc.edges],
        c=doc.c,
        d=doc.d,
        vertex_colors={rec.id: rec.color for rec in doc.vertices},
        edge_colors={(rec.u, rec.v): rec.color for rec in doc.edges},
    )


def to_json(g: nx.Graph) -> str:
    return graph_to_document(g).model_dump_json()


def from_json(text: str) -> nx.Graph:
    return document_to_graph(ColoredGraphDocument.model_validate_json(text))


def to_dot(g: nx.Graph, name: str = "G") -> str:
    """DOT text; vertex color goes in ``label``, edge color in ``style``."""
    lines = [f"graph {name} {{"]
    for v in sorted(g.nodes):
        lines.append(f'  {v} [label="{v}:{vertex_color(g, v)}"];')
    for u, v in sorted(tuple(sorted(e)) for e in g.edges):
        col = edge_color(g, u, v)
        style = _EDGE_STYLES[col % len(_EDGE_STYLES)]
        lines.append(f'  {u} -- {v} [style="{style}", label="{col}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graphs(text: str, fmt: str) -> list[nx.Graph]:
    """Decode ``text`` in the named format (``g6``, ``edges``, ``json``)."""
    try:
        if fmt == "g6":
            return read_graph6(text)
        if fmt == "edges":
            return [read_edge_list(text)]
        if fmt == "json":
            data = json.loads(text)
            docs: Iterable = data if isinstance(data, list) else [data]
            return [document_to_graph(ColoredGraphDocument.model_validate(doc)) for doc in docs]
    except (ValueError, nx.NetworkXError) as e:
        raise PreconditionError(f"cannot read {fmt} input: {e}", {"format": fmt}) from e
    raise PreconditionError(f"unknown input format {fmt!r}", {"format": fmt})


def write_graph(g: nx.Graph, fmt: str) -> str:
    if fmt == "g6":
        return to_graph6(g) + "\n"
    if fmt == "edges":
        return to_edge_list(g)
    if fmt == "json":
        return to_json(g) + "\n"
    if fmt == "dot":
        return to_dot(g)
    raise PreconditionError(f"unknown output format {fmt!r}", {"format": fmt})


def guess_format(path: str) -> str:
    if path.endswith(".json"):
        return "json"
    if path.endswith((".edges", ".txt", ".el")):
        return "edges"
    return "g6"

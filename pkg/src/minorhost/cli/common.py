"""Input/output helpers shared by the commands."""
import argparse
import json
import sys
from pathlib import Path
from typing import Any

import networkx as nx
from pydantic import BaseModel

from minorhost.core.exceptions import PreconditionError
from minorhost.graphs.families import FamilySpec, generate
from minorhost.graphs.formats import guess_format, read_graphs

FORMATS = ("g6", "edges", "json", "dot")


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise PreconditionError(f"cannot read {path}: {e.strerror}", {"path": path}) from e


def add_graph_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="input", default="-", help="graph file, '-' for stdin")
    parser.add_argument("--format", dest="input_format", choices=FORMATS[:3], default=None)


def read_graph(args: argparse.Namespace) -> nx.Graph:
    """The single graph named by ``--in``; a file holding several is an error."""
    fmt = args.input_format or (guess_format(args.input) if args.input != "-" else "json")
    graphs = read_graphs(read_text(args.input), fmt)
    if len(graphs) != 1:
        raise PreconditionError("expected exactly one input graph", {"graphs": len(graphs), "path": args.input})
    return graphs[0]


def pattern_graph(text: str) -> nx.Graph:
    """A compact family name (``W3``, ``K3,3``) or a path to a JSON graph."""
    if Path(text).exists():
        return read_graphs(read_text(text), guess_format(text))[0]
    return generate(FamilySpec.parse(text))


def emit(data: BaseModel | dict[str, Any] | list[Any]) -> None:
    if isinstance(data, BaseModel):
        sys.stdout.write(data.model_dump_json() + "\n")
    else:
        sys.stdout.write(json.dumps(data, sort_keys=True) + "\n")


def write_document(data: BaseModel, path: str) -> None:
    Path(path).write_text(data.model_dump_json(indent=2))

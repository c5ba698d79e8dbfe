"""``minor find`` and ``minor verify``."""
import argparse
import json

from minorhost.core.config import RunConfig
from minorhost.minors.engine import (
    find_minor_model,
    find_subdivision,
    model_from_document,
    model_to_document,
    verify_model,
)
from minorhost.schemas.schemas import MinorModelDocument, VerificationReport

from minorhost.cli.common import add_graph_input, emit, pattern_graph, read_graph, read_text


def cmd_find(args: argparse.Namespace, config: RunConfig) -> int:
    host = read_graph(args)
    pattern = pattern_graph(args.pattern)
    if args.subdivision:
        sub = find_subdivision(pattern, host, config.search_budget)
        emit(sub.to_document() if sub is not None else {"found": False})
        return 0
    model = find_minor_model(pattern, host, config.search_budget)
    emit(model_to_document(model, route="search") if model is not None else {"found": False})
    return 0


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    """Exit 0 iff the model is valid; the host comes from ``--in`` or the document."""
    doc = MinorModelDocument.model_validate(json.loads(read_text(args.model)))
    host = read_graph(args) if args.input != "-" or doc.host is None else None
    report = verify_model(model_from_document(doc, host))
    emit(VerificationReport(valid=report.valid, violations=report.violations))
    return 0 if report.valid else 1


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("minor", help="certified minor search")
    commands = parser.add_subparsers(dest="minor_command", required=True)

    find = commands.add_parser("find", help="search for a minor model of PATTERN in the input graph")
    find.add_argument("--pattern", required=True, help="compact family name or graph file")
    find.add_argument("--subdivision", action="store_true", help="search for a subdivision instead")
    add_graph_input(find)
    find.set_defaults(func=cmd_find)

    verify = commands.add_parser("verify", help="re-check a minor model document")
    verify.add_argument("--model", required=True)
    add_graph_input(verify)
    verify.set_defaults(func=cmd_verify)

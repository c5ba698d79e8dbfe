"""``decomp blocks|tutte|verify``."""
import argparse
import json

from minorhost.core.config import RunConfig
from minorhost.decomposition.blocks import blocks
from minorhost.decomposition.tree import TreeDecomposition, verify_decomposition
from minorhost.decomposition.tutte import tutte_decomposition, verify_tutte
from minorhost.schemas.schemas import TreeDecompositionDocument

from minorhost.cli.common import add_graph_input, emit, read_graph, read_text


def cmd_blocks(args: argparse.Namespace, config: RunConfig) -> int:
    structure = blocks(read_graph(args))
    emit(
        {
            "blocks": [
                {"vertices": sorted(b.vertices), "component": b.component, "attachment": b.attachment}
                for b in structure.blocks
            ],
            "cutvertices": sorted(structure.cutvertices),
        }
    )
    return 0


def cmd_tutte(args: argparse.Namespace, config: RunConfig) -> int:
    g = read_graph(args)
    decomposition = tutte_decomposition(g)
    if args.check:
        report = verify_tutte(g, decomposition)
        if not report.valid:
            emit({"valid": False, "violations": report.violations})
            return 1
    emit(decomposition.to_document())
    return 0


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    doc = TreeDecompositionDocument.model_validate(json.loads(read_text(args.decomposition)))
    report = verify_decomposition(read_graph(args), TreeDecomposition.from_document(doc))
    emit(report.to_document())
    return 0 if report.valid else 1


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("decomp", help="blocks, Tutte decompositions and decomposition checks")
    commands = parser.add_subparsers(dest="decomp_command", required=True)

    blocks_cmd = commands.add_parser("blocks", help="blocks in prefix-connected order")
    add_graph_input(blocks_cmd)
    blocks_cmd.set_defaults(func=cmd_blocks)

    tutte = commands.add_parser("tutte", help="adhesion-2 decomposition with classified torsos")
    tutte.add_argument("--check", action="store_true", help="re-verify before printing")
    add_graph_input(tutte)
    tutte.set_defaults(func=cmd_tutte)

    verify = commands.add_parser("verify", help="check a tree-decomposition document against a graph")
    verify.add_argument("--decomp", dest="decomposition", required=True)
    add_graph_input(verify)
    verify.set_defaults(func=cmd_verify)

"""``gen``: named family members in any output format."""
import argparse
import sys

from minorhost.core.config import RunConfig
from minorhost.core.exceptions import UnsupportedFamily
from minorhost.graphs.families import FamilySpec, generate
from minorhost.graphs.formats import write_graph

from minorhost.cli.common import FORMATS


def cmd_gen(args: argparse.Namespace, config: RunConfig) -> int:
    try:
        spec = FamilySpec.of(args.family, *args.params) if args.params else FamilySpec.parse(args.family)
    except ValueError as e:
        raise UnsupportedFamily(f"unknown family {args.family!r}", {"family": args.family}) from e
    spec.check()
    sys.stdout.write(write_graph(generate(spec), args.format))
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("gen", help="generate a family member, e.g. 'gen W 5' or 'gen Cnm 3 4'")
    parser.add_argument("family", help="P, C, Cnm, W, D, L, O, M, K, R2, or a compact name like W5")
    parser.add_argument("params", nargs="*", type=int)
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.set_defaults(func=cmd_gen)

"""``unavoidable cycle|cyclepair|wheel|facts|bound``."""
import argparse

from minorhost.core.config import RunConfig
from minorhost.unavoidable.cycles import find_cycle_pair_minor, find_long_cycle
from minorhost.unavoidable.wheels import check_reduction_facts, f_bound, find_wheel_minor

from minorhost.cli.common import add_graph_input, emit, read_graph


def cmd_cycle(args: argparse.Namespace, config: RunConfig) -> int:
    cycle = find_long_cycle(read_graph(args), args.n)
    emit({"cycle": cycle, "length": len(cycle)})
    return 0


def cmd_cyclepair(args: argparse.Namespace, config: RunConfig) -> int:
    cert = find_cycle_pair_minor(read_graph(args), args.n, args.m, config.search_budget)
    emit(cert.to_document())
    return 0


def cmd_wheel(args: argparse.Namespace, config: RunConfig) -> int:
    cert = find_wheel_minor(read_graph(args), args.k, config.search_budget)
    emit(cert.to_document() if cert is not None else {"found": False})
    return 0


def cmd_facts(args: argparse.Namespace, config: RunConfig) -> int:
    result = check_reduction_facts(args.k, config.search_budget)
    emit(
        {
            "k": result.k,
            "all_true": result.all_true,
            "facts": {
                name: {"status": f.status, "host": f.host, "pattern": f.pattern, "deleted": f.deleted}
                for name, f in sorted(result.facts.items())
            },
        }
    )
    return 0 if result.all_true else 1


def cmd_bound(args: argparse.Namespace, config: RunConfig) -> int:
    emit({"k": args.k, "f": f_bound(args.k)})
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("unavoidable", help="long cycles, cycle pairs and wheels")
    commands = parser.add_subparsers(dest="unavoidable_command", required=True)

    cycle = commands.add_parser("cycle", help="cycle of length >= n in a 2-connected graph")
    cycle.add_argument("--n", type=int, required=True)
    add_graph_input(cycle)
    cycle.set_defaults(func=cmd_cycle)

    pair = commands.add_parser("cyclepair", help="certified C_{n,m} minor")
    pair.add_argument("--n", type=int, required=True)
    pair.add_argument("--m", type=int, required=True)
    add_graph_input(pair)
    pair.set_defaults(func=cmd_cyclepair)

    wheel = commands.add_parser("wheel", help="certified W_k minor in a 3-connected graph")
    wheel.add_argument("--k", type=int, required=True)
    add_graph_input(wheel)
    wheel.set_defaults(func=cmd_wheel)

    facts = commands.add_parser("facts", help="reduction facts for W_k and K_{3,k}")
    facts.add_argument("--k", type=int, required=True)
    facts.set_defaults(func=cmd_facts)

    bound = commands.add_parser("bound", help="f(k) from the configured w(k), p(k) constants")
    bound.add_argument("--k", type=int, required=True)
    bound.set_defaults(func=cmd_bound)

"""``corpus`` and ``pipeline``."""
import argparse
import sys
from pathlib import Path

from minorhost.core.config import RunConfig
from minorhost.tasks.corpus import SUITES, run_corpus
from minorhost.tasks.pipeline import run_pipeline
from minorhost.universal.host import Backend

from minorhost.cli.common import add_graph_input, emit, read_graph


def cmd_corpus(args: argparse.Namespace, config: RunConfig) -> int:
    """JSONL records to stdout (or ``--output``); per-property totals to stderr."""
    report = run_corpus(config, args.suite)
    if config.output:
        Path(config.output).write_text(report.to_jsonl())
    else:
        sys.stdout.write(report.to_jsonl())
    for s in report.summaries:
        sys.stderr.write(
            f"{s.suite:<22} {s.property:<36} {s.passed:>5}/{s.instances:<5} "
            f"failed {s.failed:<4} inconclusive {s.inconclusive}\n"
        )
    sys.stderr.write(f"{'PASS' if report.ok else 'FAIL'}: {report.failed} failing record(s)\n")
    return 0 if report.ok else 1


def cmd_pipeline(args: argparse.Namespace, config: RunConfig) -> int:
    bundle = run_pipeline(
        read_graph(args),
        args.forbid,
        state=args.state or config.state,
        backend=args.backend,
        pad=args.pad,
        budget=config.search_budget,
    )
    emit(bundle)
    if bundle.error is not None:
        return 1
    if bundle.host_report is not None and not bundle.host_report.free:
        return 1
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    corpus = subparsers.add_parser("corpus", help="run seeded property suites")
    corpus.add_argument("--suite", choices=["all", *SUITES], default="all")
    corpus.add_argument("--workers", type=int, default=None)
    corpus.add_argument("--output", default=None, help="write JSONL records here instead of stdout")
    corpus.add_argument("--inject-mutant", action="store_true", help=argparse.SUPPRESS)
    corpus.set_defaults(func=cmd_corpus)

    pipeline = subparsers.add_parser("pipeline", help="membership, decomposition, embedding and verification")
    pipeline.add_argument("--forbid", required=True)
    pipeline.add_argument("--state", default=None)
    pipeline.add_argument("--backend", choices=[b.value for b in Backend], default=Backend.ADAPTIVE.value)
    pipeline.add_argument("--pad", type=int, default=None)
    add_graph_input(pipeline)
    pipeline.set_defaults(func=cmd_pipeline)

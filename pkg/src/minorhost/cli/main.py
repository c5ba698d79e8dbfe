"""``minorhost`` entry point."""
import argparse
import sys
from typing import Optional

from minorhost.cli import corpus, decomposition, graphs, minors, unavoidable, universal
from minorhost.core.config import RunConfig, load_settings, settings
from minorhost.core.exceptions import MinorhostError
from minorhost.core.logging import get_logger, setup_logging

from minorhost.cli.common import emit

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minorhost",
        description="Universal graphs for minor-closed classes: search, decomposition and host construction.",
    )
    parser.add_argument("--config", default=None, help="JSON file overriding settings")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--search-budget", type=int, default=None)
    parser.add_argument("--embedding-budget", type=int, default=None)
    parser.add_argument("--longest-path-cap", type=int, default=None)
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (graphs, minors, decomposition, unavoidable, universal, corpus):
        module.register(subparsers)
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig.from_settings(
        settings,
        seed=args.seed,
        search_budget=args.search_budget,
        embedding_budget=args.embedding_budget,
        longest_path_cap=args.longest_path_cap,
        workers=getattr(args, "workers", None),
        state=getattr(args, "state", None),
        output=getattr(args, "output", None),
        inject_mutant=getattr(args, "inject_mutant", None),
    )


def main(argv: Optional[list[str]] = None) -> int:
    """Parse, configure, dispatch. Library errors become JSON records and exit code 2."""
    args = build_parser().parse_args(argv)
    if args.config:
        for name, value in load_settings(args.config).model_dump().items():
            setattr(settings, name, value)
    setup_logging()
    config = _run_config(args)
    config.apply()
    logger.debug(f"Starting {settings.app_name} v{settings.app_version}", extra={"command": args.command})
    try:
        return args.func(args, config)
    except MinorhostError as e:
        logger.error(f"{args.command} failed: {e}")
        emit(e.to_dict())
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

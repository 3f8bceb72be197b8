"""Command-line entry point"""

import argparse
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from .commands import analysis, extraction, generate
from .config import configure_logging, get_settings
from .exceptions import CoverError, InputError

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Complete r-partite subgraphs covered by dense r-clique sets",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Include command groups
    generate.register(subparsers)
    analysis.register(subparsers)
    extraction.register(subparsers)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse `argv`, dispatch the subcommand and map outcomes to exit codes.

    0 success or holds, 1 NotFound / Infeasible / violated or any other
    CoverError, 2 usage or input error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    configure_logging(args.log_level)
    try:
        return args.func(args)
    except (InputError, ValidationError) as exc:
        print(f"{parser.prog} {args.command}: input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"{parser.prog} {args.command}: {exc.strerror}: {exc.filename}", file=sys.stderr)
        return EXIT_USAGE
    except CoverError as exc:
        print(f"{parser.prog} {args.command}: {exc.detail}", file=sys.stderr)
        return EXIT_NEGATIVE

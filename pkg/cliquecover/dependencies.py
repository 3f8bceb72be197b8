"""Shared argument types, loaders and output helpers for the command modules"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .biclique import BipartiteInstance, load_bipartite
from .cliques import CliqueList, load_cliques
from .config import get_settings
from .exceptions import InputError
from .graph import Graph, load_graph
from .numerics import parse_rational
from .schemas import ReportModel


def rational_arg(text: str) -> Fraction:
    """argparse type for verdict-bearing parameters: "p/q" or an integer only."""
    try:
        return parse_rational(text, allow_decimal=False)
    except InputError as exc:
        raise argparse.ArgumentTypeError(exc.detail)


def probability_arg(text: str) -> Fraction:
    """argparse type for probabilities: "p/q" or an exact decimal."""
    try:
        return parse_rational(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(exc.detail)


def seed_arg(text: str) -> int:
    """argparse type for PCG64 seeds: a non-negative integer."""
    try:
        seed = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}")
    if seed < 0:
        raise argparse.ArgumentTypeError(f"seed must be non-negative, got {text}")
    return seed


def int_list_arg(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def common_options() -> argparse.ArgumentParser:
    """Options every subcommand accepts."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=["text", "json"], default=None, help="report emission")
    parent.add_argument("--log-level", default=None, help="logging level on stderr")
    return parent


def get_graph(path: str) -> Graph:
    return load_graph(path)


def get_cliques(path: str, n: Optional[int] = None) -> CliqueList:
    return load_cliques(path, host_n=n)


def get_bipartite(path: str) -> BipartiteInstance:
    return load_bipartite(path)


def write_text(text: str, out: Optional[str]) -> None:
    """Write to `out`, or to stdout when no path is given."""
    if out:
        Path(out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)


def emit(report: ReportModel, fmt: Optional[str], out: Optional[str] = None) -> None:
    fmt = fmt or get_settings().default_format
    if fmt == "json":
        text = json.dumps(report.model_dump(mode="json"), indent=2) + "\n"
    else:
        text = report.as_lines()
    write_text(text, out)

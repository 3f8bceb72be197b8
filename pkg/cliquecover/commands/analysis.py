"""Counting and cleaning commands: count, cliques, chain, supersat, prune, tightness"""

import argparse

from ..cliques import (
    chain_inequality_report,
    clique_count,
    emit_clique_list,
    enumerate_r_cliques,
    supersaturation_report,
)
from ..dependencies import common_options, emit, get_cliques, get_graph, probability_arg, rational_arg, write_text
from ..exceptions import InputError
from ..pruner import emit_rounds, prune
from ..tightness import balanced_biclique_scan


def _count(args: argparse.Namespace) -> int:
    if args.r < 1:
        raise InputError(f"-r must be at least 1, got {args.r}")
    write_text(f"{clique_count(get_graph(args.graph), args.r)}\n", None)
    return 0


def _cliques(args: argparse.Namespace) -> int:
    write_text(emit_clique_list(enumerate_r_cliques(get_graph(args.graph), args.r)), args.out)
    return 0


def _chain(args: argparse.Namespace) -> int:
    report = chain_inequality_report(get_graph(args.graph), args.s)
    emit(report, args.format)
    return 0 if report.holds else 1


def _supersat(args: argparse.Namespace) -> int:
    report = supersaturation_report(get_graph(args.graph), args.r)
    emit(report, args.format)
    return 0 if report.applicable else 1


def _prune(args: argparse.Namespace) -> int:
    result = prune(get_cliques(args.cliques, args.n), args.n, args.threshold)
    write_text(emit_clique_list(result.kept), args.out)
    if args.rounds:
        write_text(emit_rounds(result), args.rounds)
    return 0


def _tightness(args: argparse.Namespace) -> int:
    report = balanced_biclique_scan(get_graph(args.graph), args.s, args.p)
    emit(report, args.format)
    return 1 if report.found else 0


def register(subparsers) -> None:
    common = common_options()

    count = subparsers.add_parser("count", parents=[common], help="print k_r(G)")
    count.add_argument("--graph", required=True)
    count.add_argument("-r", type=int, required=True)
    count.set_defaults(func=_count)

    cliques = subparsers.add_parser("cliques", parents=[common], help="write K_r(G) as a clique list")
    cliques.add_argument("--graph", required=True)
    cliques.add_argument("-r", type=int, required=True)
    cliques.add_argument("--out")
    cliques.set_defaults(func=_cliques)

    chain = subparsers.add_parser("chain", parents=[common], help="clique-count chain inequality")
    chain.add_argument("--graph", required=True)
    chain.add_argument("-s", type=int, required=True)
    chain.set_defaults(func=_chain)

    supersat = subparsers.add_parser("supersat", parents=[common], help="k_{r+1} margin over the edge surplus bound")
    supersat.add_argument("--graph", required=True)
    supersat.add_argument("-r", type=int, required=True)
    supersat.set_defaults(func=_supersat)

    cleaner = subparsers.add_parser("prune", parents=[common], help="co-degree cleaning of a clique list")
    cleaner.add_argument("--cliques", required=True)
    cleaner.add_argument("-n", type=int, required=True)
    cleaner.add_argument("--threshold", type=rational_arg, required=True, help="exact 'p/q'")
    cleaner.add_argument("--out")
    cleaner.add_argument("--rounds", help="where to write the round log")
    cleaner.set_defaults(func=_prune)

    tight = subparsers.add_parser("tightness", parents=[common], help="exhaustive K_2(s, s) scan of the double cover")
    tight.add_argument("--graph", required=True)
    tight.add_argument("-s", type=int, required=True)
    tight.add_argument("--p", type=probability_arg, help="edge probability for the expected count")
    tight.set_defaults(func=_tightness)

"""Parameter, extraction and verification commands: bounds, extract, verify, oracle, double-count"""

import argparse

from ..biclique import biclique_oracle, double_count_check
from ..dependencies import common_options, emit, get_bipartite, get_cliques, get_graph, rational_arg, write_text
from ..exceptions import InputError
from ..extractor import extract, extract_with_target, theorem_params
from ..graph import read_ascii
from ..schemas import CoverCertificate
from ..verify import verify_cover


def _bounds(args: argparse.Namespace) -> int:
    params = theorem_params(args.n, args.r, args.c)
    emit(params, args.format)
    return 0 if params.feasible else 1


def _extract(args: argparse.Namespace) -> int:
    graph = get_graph(args.graph)
    cliques = get_cliques(args.cliques, graph.n)
    if args.c is not None and args.t_min is not None:
        raise InputError("-c and --t-min are mutually exclusive")
    if args.c is not None:
        result = extract(graph, cliques, args.r, args.c)
    else:
        if args.t_min is None:
            raise InputError("--s needs --t-min")
        result = extract_with_target(graph, cliques, args.r, args.s, args.t_min, args.threshold)
    if isinstance(result, CoverCertificate):
        write_text(result.to_file(), args.out)
        return 0
    emit(result, args.format)
    return 1


def _verify(args: argparse.Namespace) -> int:
    graph = get_graph(args.graph)
    cliques = get_cliques(args.cliques, graph.n)
    cert = CoverCertificate.from_file(read_ascii(args.cert))
    report = verify_cover(graph, cliques, cert)
    emit(report, args.format)
    return 0 if report.all_ok else 1


def _oracle(args: argparse.Namespace) -> int:
    emit(biclique_oracle(get_bipartite(args.bipartite), args.s, args.cap), args.format)
    return 0


def _double_count(args: argparse.Namespace) -> int:
    report = double_count_check(get_bipartite(args.bipartite), args.s, args.cap)
    emit(report, args.format)
    return 0 if report.equal and report.convexity_ok else 1


def register(subparsers) -> None:
    common = common_options()

    bounds = subparsers.add_parser("bounds", parents=[common], help="certified s, t_min and precondition flags")
    bounds.add_argument("--n", type=int, required=True)
    bounds.add_argument("-r", type=int, required=True)
    bounds.add_argument("-c", type=rational_arg, required=True, help="exact 'p/q'")
    bounds.set_defaults(func=_bounds)

    extractor = subparsers.add_parser("extract", parents=[common], help="write a cover certificate")
    extractor.add_argument("--graph", required=True)
    extractor.add_argument("--cliques", required=True)
    extractor.add_argument("-r", type=int, required=True)
    target = extractor.add_mutually_exclusive_group(required=True)
    target.add_argument("-c", type=rational_arg, help="guaranteed mode with density c ('p/q')")
    target.add_argument("--s", type=int, help="best-effort part size")
    extractor.add_argument("--t-min", type=int, help="best-effort lower bound on the last part")
    extractor.add_argument("--threshold", type=rational_arg, default=0, help="best-effort pruning threshold")
    extractor.add_argument("--out")
    extractor.set_defaults(func=_extract)

    verifier = subparsers.add_parser("verify", parents=[common], help="check a certificate against G and M")
    verifier.add_argument("--graph", required=True)
    verifier.add_argument("--cliques", required=True)
    verifier.add_argument("--cert", required=True)
    verifier.set_defaults(func=_verify)

    oracle = subparsers.add_parser("oracle", parents=[common], help="exhaustive best s-subset")
    oracle.add_argument("--bipartite", required=True)
    oracle.add_argument("-s", type=int, required=True)
    oracle.add_argument("--cap", type=int)
    oracle.set_defaults(func=_oracle)

    double = subparsers.add_parser("double-count", parents=[common], help="exact double-counting identity")
    double.add_argument("--bipartite", required=True)
    double.add_argument("-s", type=int, required=True)
    double.add_argument("--cap", type=int)
    double.set_defaults(func=_double_count)

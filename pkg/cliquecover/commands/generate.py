"""Instance generators: gen gnp | multipartite | overlay | bipartite"""

import argparse

from ..biclique import emit_bipartite, gen_random_bipartite
from ..dependencies import common_options, get_graph, int_list_arg, probability_arg, seed_arg, write_text
from ..exceptions import InputError
from ..graph import emit_edge_list, gen_complete_multipartite, gen_gnp, overlay


def _gnp(args: argparse.Namespace) -> int:
    write_text(emit_edge_list(gen_gnp(args.n, args.p, args.seed)), args.out)
    return 0


def _multipartite(args: argparse.Namespace) -> int:
    write_text(emit_edge_list(gen_complete_multipartite(args.sizes)), args.out)
    return 0


def _parse_map(text: str) -> dict[int, int]:
    """"0:1,1:3,2:5" or the image list "1,3,5"."""
    mapping: dict[int, int] = {}
    for index, token in enumerate(tok for tok in text.split(",") if tok.strip()):
        try:
            if ":" in token:
                source, image = token.split(":")
                mapping[int(source)] = int(image)
            else:
                mapping[index] = int(token)
        except ValueError:
            raise InputError(f"malformed embedding token {token!r}")
    return mapping


def _overlay(args: argparse.Namespace) -> int:
    host = get_graph(args.host)
    planted = get_graph(args.planted)
    write_text(emit_edge_list(overlay(host, planted, _parse_map(args.map))), args.out)
    return 0


def _bipartite(args: argparse.Namespace) -> int:
    write_text(emit_bipartite(gen_random_bipartite(args.m, args.n, args.density, args.seed)), args.out)
    return 0


def register(subparsers) -> None:
    common = common_options()
    gen = subparsers.add_parser("gen", help="write a generated instance")
    kinds = gen.add_subparsers(dest="kind", required=True)

    gnp = kinds.add_parser("gnp", parents=[common], help="G(n, p) from a PCG64 seed")
    gnp.add_argument("--n", type=int, required=True)
    gnp.add_argument("--p", type=probability_arg, required=True)
    gnp.add_argument("--seed", type=seed_arg, required=True)
    gnp.add_argument("--out")
    gnp.set_defaults(func=_gnp)

    multi = kinds.add_parser("multipartite", parents=[common], help="complete multipartite graph")
    multi.add_argument("--sizes", type=int_list_arg, required=True, help="e.g. 2,2,12")
    multi.add_argument("--out")
    multi.set_defaults(func=_multipartite)

    over = kinds.add_parser("overlay", parents=[common], help="plant one graph into another")
    over.add_argument("--host", required=True)
    over.add_argument("--planted", required=True)
    over.add_argument("--map", required=True, help="'0:1,1:3' or the image list '1,3'")
    over.add_argument("--out")
    over.set_defaults(func=_overlay)

    bip = kinds.add_parser("bipartite", parents=[common], help="random bipartite instance")
    bip.add_argument("--m", type=int, required=True)
    bip.add_argument("--n", type=int, required=True)
    bip.add_argument("--density", type=probability_arg, required=True)
    bip.add_argument("--seed", type=seed_arg, required=True)
    bip.add_argument("--out")
    bip.set_defaults(func=_bipartite)

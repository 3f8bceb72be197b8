"""Balanced bicliques in random graphs

Random graphs have no K_2(s, s) once s is a large multiple of log n, which
is why the s = floor(c^r ln n) part size cannot be improved beyond a
constant factor. These helpers scan a graph's double cover exhaustively and
give the first-moment count to compare against.
"""

import logging
from fractions import Fraction
from math import comb
from typing import Optional

from .biclique import BipartiteInstance, find_s_subset
from .exceptions import InputError
from .graph import Graph
from .numerics import RationalLike, parse_rational
from .schemas import BicliqueWitness, TightnessReport

logger = logging.getLogger(__name__)


def double_cover(graph: Graph) -> BipartiteInstance:
    """Two copies of V(G), u on the left joined to v on the right iff uv is an edge."""
    if graph.n == 0:
        raise InputError("the double cover of the empty vertex set has no left items")
    return BipartiteInstance(graph.adj, graph.n)


def expected_balanced_bicliques(n: int, p: RationalLike, s: int) -> Fraction:
    """Expected number of ordered disjoint pairs (S, T), |S| = |T| = s, fully joined in G(n, p)."""
    p = parse_rational(p)
    return comb(n, s) * comb(n - s, s) * p ** (s * s)


def balanced_biclique_scan(graph: Graph, s: int, p: Optional[RationalLike] = None) -> TightnessReport:
    """Exhaustive search for a K_2(s, s) in the double cover of `graph`."""
    if s < 1:
        raise InputError(f"s must be at least 1, got {s}")
    expected = expected_balanced_bicliques(graph.n, p, s) if p is not None else None
    if s > graph.n:
        return TightnessReport(n=graph.n, s=s, found=False, expected_count=expected)
    result = find_s_subset(double_cover(graph), s, s, "first_feasible")
    if isinstance(result, BicliqueWitness):
        return TightnessReport(n=graph.n, s=s, found=True, S=result.S, T=result.T[:s], expected_count=expected)
    return TightnessReport(n=graph.n, s=s, found=False, expected_count=expected)


def largest_balanced_biclique(graph: Graph) -> int:
    """Largest s such that the double cover of `graph` contains a K_2(s, s)."""
    best = 0
    while best < graph.n and balanced_biclique_scan(graph, best + 1).found:
        best += 1
    logger.debug("largest balanced biclique on n=%d: %d", graph.n, best)
    return best

"""Co-degree cleaning: drop r-cliques through (r-1)-cliques of low co-degree

While some R in K_{r-1}(L) has d_L(R) <= threshold, every member of L
containing R is removed. At the fixed point all surviving facets have
co-degree above the threshold.
"""

import heapq
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .cliques import Clique, CliqueList
from .exceptions import InputError
from .numerics import RationalLike, parse_rational
from .schemas import PruneGuaranteeReport, PruneRound

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PruneResult:
    kept: CliqueList
    rounds: tuple[PruneRound, ...]
    threshold: Fraction

    @property
    def removed(self) -> int:
        return sum(round_.removed for round_ in self.rounds)


def prune(cliques: CliqueList, n: int, threshold: RationalLike) -> PruneResult:
    """Run the cleaning loop to its fixed point.

    Dirty facets are taken lexicographically smallest first. Co-degrees are
    maintained incrementally; a facet whose count reaches zero leaves
    K_{r-1}(L) and is dropped from the map.
    """
    threshold = parse_rational(threshold)
    r = cliques.arity
    if r < 2:
        raise InputError(f"pruning needs arity >= 2, got {r}")
    if threshold < 0:
        raise InputError(f"threshold must be non-negative, got {threshold}")
    if cliques.host_n > n:
        raise InputError(f"clique list spans {cliques.host_n} vertices but n = {n}")

    counts = dict(cliques.facet_counts)
    containing: dict[Clique, list[int]] = {}
    for index, clique in enumerate(cliques.cliques):
        for facet in combinations(clique, r - 1):
            containing.setdefault(facet, []).append(index)

    alive = [True] * len(cliques)
    dirty = [facet for facet, degree in counts.items() if degree <= threshold]
    heapq.heapify(dirty)
    rounds: list[PruneRound] = []

    while dirty:
        facet = heapq.heappop(dirty)
        if counts.get(facet, 0) == 0:
            continue
        removed = 0
        for index in containing[facet]:
            if not alive[index]:
                continue
            alive[index] = False
            removed += 1
            for other in combinations(cliques.cliques[index], r - 1):
                counts[other] -= 1
                if counts[other] == 0:
                    del counts[other]
                elif counts[other] <= threshold:
                    heapq.heappush(dirty, other)
        rounds.append(PruneRound(trigger=facet, removed=removed))

    kept = CliqueList(r, tuple(c for c, keep in zip(cliques.cliques, alive) if keep), cliques.host_n)
    logger.debug("pruned %d of %d members in %d rounds at threshold %s", len(cliques) - len(kept), len(cliques), len(rounds), threshold)
    return PruneResult(kept=kept, rounds=tuple(rounds), threshold=threshold)


def prune_guarantee_check(
    cliques: CliqueList, result: PruneResult, c: RationalLike, n: int, r: int
) -> PruneGuaranteeReport:
    """Check co-degrees > cn, |M| - |L| <= cn|K_{r-1}(M)| and |L| > (c/2)n^r exactly.

    The size bound follows from the removal bound only when (r-1)! >= 2; for
    r = 2 it is evaluated and reported but not counted in `all_ok`.
    """
    c = parse_rational(c)
    if cliques.arity != r:
        raise InputError(f"clique arity {cliques.arity} does not match r = {r}")
    if result.threshold != c * n:
        raise InputError(f"result threshold {result.threshold} is not c*n = {c * n}")
    if not result.kept.members <= cliques.members:
        raise InputError("pruned list is not a subset of the input")

    threshold = c * n
    codegree_ok = all(degree > threshold for degree in result.kept.facet_counts.values())
    removal_bound_ok = len(cliques) - len(result.kept) <= threshold * len(cliques.facet_counts)
    if len(cliques) >= c * n**r:
        size_ok = len(result.kept) > c / 2 * n**r
    else:
        size_ok = True
    proved = r >= 3
    return PruneGuaranteeReport(
        size_ok=size_ok,
        codegree_ok=codegree_ok,
        removal_bound_ok=removal_bound_ok,
        size_bound_proved=proved,
        all_ok=codegree_ok and removal_bound_ok and (size_ok or not proved),
    )


def emit_rounds(result: PruneResult) -> str:
    """One "trigger<TAB>removed" line per round, in processing order."""
    return "".join(" ".join(map(str, round_.trigger)) + f"\t{round_.removed}\n" for round_ in result.rounds)

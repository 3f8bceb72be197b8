"""Extraction of covered complete r-partite subgraphs

The pipeline follows the induction on r. For r = 2 the member edges form a
double cover of V(G) and the subset finder picks S and T directly. For
r >= 3 the clique set is cleaned at threshold c n, the (r-1)-cliques of the
survivors are covered recursively by a balanced K_{r-1}(m, ..., m), its m
disjoint members become the left side of a bipartite graph (R ~ v iff
R + v survives), and an s-subset with a large common neighbourhood closes
the step.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial
from typing import Iterator, Optional, Sequence, Union

from .biclique import BipartiteInstance, iter_s_subsets
from .cliques import Clique, CliqueList, sub_cliques
from .config import get_settings
from .exceptions import CoverError, InputError, SearchFailure
from .graph import Graph, VertexSet, mask_of
from .numerics import (
    RationalLike,
    floor_power_log,
    log_root_at_most,
    parse_rational,
    power_log_at_least_one,
    strict_power_floor,
)
from .pruner import prune
from .schemas import CoverCertificate, ExtractionParams, Infeasible, LevelParams, Mode, NotFound
from .verify import verify_cover

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Cover:
    """Parts, last part and transversal members of one level's cover"""

    parts: tuple[VertexSet, ...]
    last: VertexSet
    members: tuple[Clique, ...]


@dataclass(frozen=True)
class _Level:
    r: int
    s: int
    t_min: int
    threshold: Fraction


def theorem_params(n: int, r: int, c: RationalLike) -> ExtractionParams:
    """Certified s, t_min and every precondition flag down the recursion.

    Level r uses c; level r' - 1 uses c' = r' c_{r'} / 2 and part size
    m = floor(c'^(r'-1) ln n). Each level records the subset finder's side conditions.
    """
    c = parse_rational(c)
    if n < 2 or r < 2:
        raise InputError(f"need n >= 2 and r >= 2, got n={n}, r={r}")
    if c <= 0:
        raise InputError(f"c must be positive, got {c}")

    levels: list[LevelParams] = []
    flags: dict[str, bool] = {}
    level_c = c
    for level in range(r, 1, -1):
        s = floor_power_log(level_c, level, n)
        t_min = strict_power_floor(n, 1 - level_c ** (level - 1))
        level_flags = {
            "hypothesis": power_log_at_least_one(level_c, level, n),
            "c_lower": log_root_at_most(n, level, level_c),
            "c_below_half": level_c < Fraction(1, 2),
            "density_cap": level_c < Fraction(1, factorial(level)),
        }
        if level >= 3:
            next_c = level * level_c / 2
            m = floor_power_log(next_c, level - 1, n)
            threshold = level_c * n
        else:
            next_c = None
            m = n
            threshold = Fraction(0)
        level_flags["s_vs_m"] = s <= level_c / 2 * m + 1
        if level < r:
            # this level is a recursive cover and needs s disjoint members
            level_flags["t_at_least_s"] = t_min >= s
        levels.append(
            LevelParams(r=level, c=level_c, s=s, t_min=t_min, m=m if level >= 3 else None, threshold=threshold, flags=level_flags)
        )
        flags.update({f"level{level}.{name}": ok for name, ok in level_flags.items()})
        if next_c is not None:
            level_c = next_c

    top = levels[0]
    return ExtractionParams(
        n=n,
        r=r,
        c=c,
        s=top.s,
        t_min=top.t_min,
        mode="guaranteed",
        flags={"hypothesis": top.flags["hypothesis"], **flags},
        levels=levels,
    )


def build_bipartite_from_cliques(
    cliques: CliqueList, left_cliques: Sequence[Sequence[int]], n: int
) -> BipartiteInstance:
    """Left items are the given (r-1)-cliques, right items the vertices 0..n-1;
    R ~ v iff the sorted tuple R + v is a member of `cliques`."""
    seen: set[int] = set()
    rows = []
    items = []
    for clique in left_cliques:
        facet = tuple(sorted(clique))
        if len(facet) != cliques.arity - 1:
            raise InputError(f"left clique {facet} does not have arity {cliques.arity - 1}")
        if seen.intersection(facet):
            raise InputError(f"left clique {facet} is not disjoint from the others")
        seen.update(facet)
        rows.append(cliques.extensions.get(facet, 0) & ((1 << n) - 1))
        items.append(facet)
    return BipartiteInstance(tuple(rows), n, tuple(items))


class _Extraction:
    """One extraction job: a level plan plus the failure log of its search."""

    def __init__(self, n: int, plan: dict[int, _Level], *, backtrack: bool, codegree_filter: bool):
        self.n = n
        self.plan = plan
        self.backtrack = backtrack
        self.codegree_filter = codegree_filter
        self.budget = get_settings().max_candidates
        self.failures: list[tuple[int, str, str]] = []

    def fail(self, level: int, stage: str, reason: str) -> None:
        logger.debug("level %d %s: %s", level, stage, reason)
        self.failures.append((level, stage, reason))

    def not_found(self) -> NotFound:
        if not self.failures:
            return NotFound(stage="search", reason="no candidate cover")
        level, stage, reason = min(self.failures, key=lambda f: f[0])
        return NotFound(level=level, stage=stage, reason=reason)

    def _spend(self, level: int) -> bool:
        self.budget -= 1
        if self.budget < 0:
            self.fail(level, "budget", "candidate budget exhausted")
            return False
        return True

    def _close(self, level: int, parts, left: Sequence[Clique], witness_t: tuple[int, ...], take: Optional[int]) -> Iterator[_Cover]:
        """Turn a found (S, T) into covers; a recursive level truncates T to `take`."""
        if take is None:
            count = min(len(left), len(witness_t))
            members = tuple(tuple(sorted(left[i] + (witness_t[i],))) for i in range(count))
            yield _Cover(parts=parts, last=VertexSet(witness_t), members=members)
            return
        for chosen in combinations(witness_t, take):
            for order in permutations(chosen):
                members = tuple(tuple(sorted(left[i] + (order[i],))) for i in range(take))
                yield _Cover(parts=parts, last=VertexSet(chosen), members=members)
                if not self.backtrack:
                    return

    def covers(self, cliques: CliqueList, level: int, take: Optional[int] = None) -> Iterator[_Cover]:
        """Covers of the level's clique set in canonical order (first one only without backtracking)."""
        step = self.plan[level]
        if level == 2:
            yield from self._base(cliques, step, take)
            return

        kept = cliques
        if step.threshold > 0:
            kept = prune(cliques, self.n, step.threshold).kept
        if not len(kept):
            self.fail(level, "prune", f"no {level}-clique survives threshold {step.threshold}")
            return
        facets = sub_cliques(kept, level - 1)
        if self.codegree_filter:
            counts = kept.facet_counts
            facets = CliqueList(level - 1, tuple(f for f in facets if counts[f] >= step.t_min), self.n)
            if not len(facets):
                self.fail(level, "filter", f"no {level - 1}-clique has co-degree >= {step.t_min}")
                return

        below = self.plan[level - 1]
        produced = False
        for inner in self.covers(facets, level - 1, take=below.s):
            if not self._spend(level):
                return
            instance = build_bipartite_from_cliques(kept, inner.members, self.n)
            part_of = {v: j for j, part in enumerate(inner.parts + (inner.last,)) for v in part}
            for witness in iter_s_subsets(instance, step.s, step.t_min):
                chosen = [inner.members[i] for i in witness.S]
                grouped: list[list[int]] = [[] for _ in range(level - 1)]
                for member in chosen:
                    for v in member:
                        grouped[part_of[v]].append(v)
                parts = tuple(VertexSet.of(g) for g in grouped)
                assert not VertexSet(witness.T).mask & mask_of(v for member in chosen for v in member)
                for cover in self._close(level, parts, chosen, witness.T, take):
                    produced = True
                    yield cover
                    if not self.backtrack:
                        return
                if not self.backtrack:
                    break
            if not self.backtrack:
                break
        if not produced:
            self.fail(level, "search", f"no {step.s}-subset of the recursive cover has {step.t_min} common extensions")

    def _base(self, cliques: CliqueList, step: _Level, take: Optional[int]) -> Iterator[_Cover]:
        instance = build_bipartite_from_cliques(cliques, [(u,) for u in range(self.n)], self.n)
        produced = False
        for witness in iter_s_subsets(instance, step.s, step.t_min):
            if not self._spend(2):
                return
            left = [(u,) for u in witness.S]
            assert not VertexSet(witness.S).mask & VertexSet(witness.T).mask
            for cover in self._close(2, (VertexSet(witness.S),), left, witness.T, take):
                produced = True
                yield cover
                if not self.backtrack:
                    return
            if not self.backtrack:
                break
        if not produced:
            self.fail(2, "search", f"no {step.s} vertices share {step.t_min} member-neighbours")


def _certificate(cover: _Cover, r: int, c: Optional[Fraction], s: int, t_min: int, mode: Mode, flags: dict[str, bool]) -> CoverCertificate:
    return CoverCertificate(
        r=r,
        c=c,
        s=s,
        t=len(cover.last),
        t_min=t_min,
        parts=[list(p) for p in cover.parts],
        last_part=list(cover.last),
        disjoint_members=[list(m) for m in cover.members],
        mode=mode,
        flags=flags,
    )


def _check_inputs(graph: Graph, cliques: CliqueList, r: int) -> None:
    if cliques.arity != r:
        raise InputError(f"clique arity {cliques.arity} does not match r = {r}")
    if r < 2:
        raise InputError(f"r must be at least 2, got {r}")
    if cliques.host_n > graph.n or not all(
        graph.has_edge(u, v) for clique in cliques for u, v in combinations(clique, 2)
    ):
        raise InputError("clique list is not a set of cliques of the graph")


def _verified(graph: Graph, cliques: CliqueList, cert: CoverCertificate) -> CoverCertificate:
    report = verify_cover(graph, cliques, cert)
    if not report.all_ok:
        raise CoverError(f"extracted certificate failed verification: {report.problems}")
    return cert


def extract(graph: Graph, cliques: CliqueList, r: int, c: RationalLike) -> Union[CoverCertificate, Infeasible]:
    """Guaranteed-regime extraction with s = floor(c^r ln n) and t > n^(1 - c^(r-1)).

    Returns Infeasible when a precondition flag fails. Inside the regime the
    first cover found at every level must succeed; failure raises SearchFailure.
    """
    _check_inputs(graph, cliques, r)
    n = graph.n
    params = theorem_params(n, r, c)
    flags = {"clique_count": len(cliques) >= params.c * n**r, **params.flags}
    params = params.model_copy(update={"flags": flags})
    if not params.feasible:
        logger.info("infeasible parameters: %s", ", ".join(params.failed_flags))
        return Infeasible(failed_flags=params.failed_flags, params=params)

    plan = {}
    for level in params.levels:
        floor = level.t_min if level.r == r else max(level.t_min, level.s)
        plan[level.r] = _Level(r=level.r, s=level.s, t_min=floor, threshold=level.threshold)
    job = _Extraction(n, plan, backtrack=False, codegree_filter=False)
    cover = next(job.covers(cliques, r), None)
    if cover is None:
        missing = job.not_found()
        raise SearchFailure(f"level {missing.level} {missing.stage}: {missing.reason}")
    cert = _certificate(cover, r, params.c, params.s, params.t_min, "guaranteed", flags)
    logger.info("extracted K_%d(%d, ..., %d) with t = %d", r, params.s, params.s, cert.t)
    return _verified(graph, cliques, cert)


def extract_with_target(
    graph: Graph,
    cliques: CliqueList,
    r: int,
    s: int,
    t_min: int,
    threshold: RationalLike = 0,
) -> Union[CoverCertificate, NotFound]:
    """Best-effort extraction with caller-chosen part sizes (s, ..., s, >= t_min).

    Every recursive level targets parts of size s. Before recursing, the
    (r-1)-cliques are restricted to those with co-degree >= the level's
    t_min (a chosen R must extend to all of T), and recursive covers are
    tried in canonical order until one closes or the candidate budget runs out.
    """
    _check_inputs(graph, cliques, r)
    if s < 1 or t_min < 0:
        raise InputError(f"need s >= 1 and t_min >= 0, got s={s}, t_min={t_min}")
    threshold = parse_rational(threshold)
    plan = {r: _Level(r=r, s=s, t_min=t_min, threshold=threshold)}
    for level in range(r - 1, 1, -1):
        plan[level] = _Level(r=level, s=s, t_min=s, threshold=threshold)
    job = _Extraction(graph.n, plan, backtrack=True, codegree_filter=True)
    cover = next(job.covers(cliques, r), None)
    if cover is None:
        return job.not_found()
    flags = {"threshold_applied": threshold > 0}
    return _verified(graph, cliques, _certificate(cover, r, None, s, t_min, "best_effort", flags))


def base_case_r2(
    cliques: CliqueList, n: int, s: int, t_min: int, mode: Mode = "best_effort"
) -> Union[CoverCertificate, NotFound]:
    """The r = 2 step alone: S, T from the double cover, s disjoint member edges."""
    if cliques.arity != 2:
        raise InputError(f"the base case needs edges, got arity {cliques.arity}")
    if s < 1:
        raise InputError(f"s must be at least 1, got {s}")
    job = _Extraction(n, {2: _Level(r=2, s=s, t_min=t_min, threshold=Fraction(0))}, backtrack=False, codegree_filter=False)
    cover = next(job.covers(cliques, 2), None)
    if cover is None:
        return job.not_found()
    return _certificate(cover, 2, None, s, t_min, mode, {})

"""Common-neighbourhood search in bipartite graphs

Finds s left items whose adjacency rows intersect in many right vertices,
together with the exact counting identities behind the averaging argument
that guarantees such a set exists.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import comb, factorial
from operator import and_
from pathlib import Path
from typing import Any, Iterator, Literal, Optional, Sequence, Union

import numpy as np

from .config import get_settings
from .exceptions import InputError, SearchLimitError
from .graph import VertexSet, iter_bits, read_ascii
from .numerics import (
    RationalLike,
    floor_power_log,
    log_root_at_most,
    parse_rational,
    strict_power_floor,
)
from .schemas import BicliqueWitness, DoubleCountReport, Lemma1Flags, Lemma1Params, NotFound, OracleResult

logger = logging.getLogger(__name__)

SearchMode = Literal["first_feasible", "maximize"]


@dataclass(frozen=True)
class BipartiteInstance:
    """Left items (opaque payloads) with bit-vector rows over right vertices 0..right_n-1."""

    rows: tuple[int, ...]
    right_n: int
    left_items: tuple[Any, ...] = field(default=())

    def __post_init__(self):
        if not self.rows:
            raise InputError("a bipartite instance needs at least one left item")
        if self.right_n < 0:
            raise InputError(f"right side size must be non-negative, got {self.right_n}")
        if not self.left_items:
            object.__setattr__(self, "left_items", tuple(range(len(self.rows))))
        if len(self.left_items) != len(self.rows):
            raise InputError(f"{len(self.left_items)} left items for {len(self.rows)} rows")
        full = (1 << self.right_n) - 1
        for i, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise InputError(f"left item {i} has a neighbour outside [0, {self.right_n})")

    @classmethod
    def from_pairs(cls, m: int, right_n: int, pairs: Sequence[tuple[int, int]], left_items: Sequence[Any] = ()) -> "BipartiteInstance":
        rows = [0] * m
        for i, v in pairs:
            if not (0 <= i < m and 0 <= v < right_n):
                raise InputError(f"pair ({i}, {v}) outside [0, {m}) x [0, {right_n})")
            rows[i] |= 1 << v
        return cls(tuple(rows), right_n, tuple(left_items))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def left_degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def right_degrees(self) -> np.ndarray:
        """d(u) for every right vertex, counted column by column."""
        degrees = np.zeros(self.right_n, dtype=np.int64)
        for row in self.rows:
            hits = list(iter_bits(row))
            if hits:
                np.add.at(degrees, hits, 1)
        return degrees

    def common(self, subset: Sequence[int]) -> int:
        """Bit mask of the right vertices joined to every left item in `subset`."""
        return reduce(and_, (self.rows[i] for i in subset), (1 << self.right_n) - 1)


def generalized_binomial(x: Union[Fraction, int, float], s: int):
    """x(x-1)...(x-s+1)/s! for x >= s-1 and 0 below; exact for rational x."""
    if s < 1:
        raise InputError(f"s must be at least 1, got {s}")
    exact = not isinstance(x, float)
    if x < s - 1:
        return Fraction(0) if exact else 0.0
    value = Fraction(1) if exact else 1.0
    for i in range(s):
        value *= x - i
    return value / factorial(s)


def lemma1_params(m: int, n: int, c: RationalLike, r: int, edges: Optional[int] = None) -> Lemma1Params:
    """s = floor(c^r ln n), t_min = least integer > n^(1 - c^(r-1)) and the side conditions.

    `density_ok` is only decided when the instance's edge count is supplied.
    """
    c = parse_rational(c)
    if m < 1 or n < 1:
        raise InputError(f"m and n must be positive, got m={m}, n={n}")
    if r < 2:
        raise InputError(f"r must be at least 2, got {r}")
    if c <= 0:
        raise InputError(f"c must be positive, got {c}")
    s = floor_power_log(c, r, n)
    min_edges = c * m * n
    flags = Lemma1Flags(
        c_lower_ok=log_root_at_most(n, r, c),
        c_upper_ok=c < Fraction(1, 2),
        s_vs_m_ok=s <= c / 2 * m + 1,
        density_ok=None if edges is None else edges >= min_edges,
    )
    return Lemma1Params(
        m=m,
        n=n,
        r=r,
        c=c,
        s=s,
        t_min=strict_power_floor(n, 1 - c ** (r - 1)),
        min_edges=min_edges,
        flags=flags,
    )


def _canonical_order(instance: BipartiteInstance) -> list[int]:
    degrees = instance.left_degrees()
    return sorted(range(instance.m), key=lambda i: (-degrees[i], i))


def iter_s_subsets(instance: BipartiteInstance, s: int, t_min: int) -> Iterator[BicliqueWitness]:
    """Every s-subset whose common neighbourhood has >= t_min vertices.

    Items are branched on in (degree descending, index ascending) order; a
    branch dies as soon as its running intersection drops below t_min, which
    is admissible because intersections only shrink along a branch.
    """
    if s < 1:
        raise InputError(f"s must be at least 1, got {s}")
    if s > instance.m:
        return
    order = _canonical_order(instance)
    rows = instance.rows
    m = instance.m
    chosen: list[int] = []

    def branch(start: int, running: int) -> Iterator[BicliqueWitness]:
        need = s - len(chosen)
        if need == 0:
            yield BicliqueWitness(S=tuple(sorted(chosen)), T=VertexSet.from_mask(running).members)
            return
        for pos in range(start, m - need + 1):
            item = order[pos]
            narrowed = running & rows[item]
            if narrowed.bit_count() < t_min:
                continue
            chosen.append(item)
            yield from branch(pos + 1, narrowed)
            chosen.pop()

    yield from branch(0, (1 << instance.right_n) - 1)


def _maximize(instance: BipartiteInstance, s: int, t_min: int) -> Optional[BicliqueWitness]:
    order = _canonical_order(instance)
    rows = instance.rows
    m = instance.m
    best_size = t_min - 1
    best: Optional[tuple[tuple[int, ...], int]] = None
    nodes = 0
    chosen: list[int] = []

    def branch(start: int, running: int) -> None:
        nonlocal best_size, best, nodes
        nodes += 1
        need = s - len(chosen)
        if need == 0:
            best_size = running.bit_count()
            best = (tuple(sorted(chosen)), running)
            return
        for pos in range(start, m - need + 1):
            item = order[pos]
            narrowed = running & rows[item]
            if narrowed.bit_count() <= best_size:
                continue
            chosen.append(item)
            branch(pos + 1, narrowed)
            chosen.pop()

    branch(0, (1 << instance.right_n) - 1)
    logger.debug("maximize search s=%d visited %d nodes, best t=%d", s, nodes, best_size)
    if best is None:
        return None
    return BicliqueWitness(S=best[0], T=VertexSet.from_mask(best[1]).members)


def find_s_subset(
    instance: BipartiteInstance, s: int, t_min: int, mode: SearchMode = "first_feasible"
) -> Union[BicliqueWitness, NotFound]:
    """Branch-and-bound search for S (s left items) with |common neighbourhood| >= t_min.

    first_feasible returns the first witness in canonical branch order;
    maximize returns a subset attaining the largest common neighbourhood.
    """
    if s < 1:
        raise InputError(f"s must be at least 1, got {s}")
    if s > instance.m:
        return NotFound(stage="search", reason=f"s = {s} exceeds the {instance.m} left items")
    if mode == "first_feasible":
        witness = next(iter_s_subsets(instance, s, t_min), None)
    elif mode == "maximize":
        witness = _maximize(instance, s, t_min)
    else:
        raise InputError(f"unknown search mode {mode!r}")
    if witness is None:
        return NotFound(stage="search", reason=f"no {s}-subset has {t_min} common neighbours")
    return witness


def _guard(m: int, s: int, cap: Optional[int]) -> None:
    cap = get_settings().oracle_cap if cap is None else cap
    if not 1 <= s <= m:
        raise InputError(f"s must lie in [1, {m}], got {s}")
    if comb(m, s) > cap:
        raise SearchLimitError(f"C({m}, {s}) = {comb(m, s)} subsets exceeds the cap {cap}")


def biclique_oracle(instance: BipartiteInstance, s: int, cap: Optional[int] = None) -> OracleResult:
    """Plain scan over all s-subsets; the lexicographically first maximiser wins."""
    _guard(instance.m, s, cap)
    best_subset: tuple[int, ...] = ()
    best_mask = -1
    best_size = -1
    for subset in combinations(range(instance.m), s):
        mask = instance.common(subset)
        size = mask.bit_count()
        if size > best_size:
            best_subset, best_mask, best_size = subset, mask, size
    return OracleResult(s=s, S=best_subset, t=best_size, T=tuple(iter_bits(best_mask)))


def double_count_check(instance: BipartiteInstance, s: int, cap: Optional[int] = None) -> DoubleCountReport:
    """Sum of d(X) over s-subsets X against the sum of C(d(u), s) over right vertices,
    plus the convexity step sum f(d(u)) >= n f(e(F)/n)."""
    _guard(instance.m, s, cap)
    lhs_sum = sum(instance.common(subset).bit_count() for subset in combinations(range(instance.m), s))
    degrees = [int(d) for d in instance.right_degrees()]
    rhs_sum = sum(comb(d, s) for d in degrees)
    n = instance.right_n
    convexity_lhs = sum((generalized_binomial(d, s) for d in degrees), Fraction(0))
    convexity_rhs = n * generalized_binomial(Fraction(instance.edge_count, n), s) if n else Fraction(0)
    return DoubleCountReport(
        s=s,
        lhs_sum=lhs_sum,
        rhs_sum=rhs_sum,
        equal=lhs_sum == rhs_sum,
        convexity_lhs=convexity_lhs,
        convexity_rhs=convexity_rhs,
        convexity_ok=convexity_lhs >= convexity_rhs,
    )


def averaging_bound(instance: BipartiteInstance, s: int) -> Fraction:
    """n f(e(F)/n) / C(m, s): the averaging argument's lower bound on the best t."""
    if not 1 <= s <= instance.m:
        raise InputError(f"s must lie in [1, {instance.m}], got {s}")
    n = instance.right_n
    if n == 0:
        return Fraction(0)
    return n * generalized_binomial(Fraction(instance.edge_count, n), s) / comb(instance.m, s)


def gen_random_bipartite(m: int, n: int, density: RationalLike, seed: int) -> BipartiteInstance:
    """Each (i, v) pair is an edge with probability `density`, same PCG64 rule as gen_gnp."""
    prob = parse_rational(density)
    if not 0 <= prob <= 1:
        raise InputError(f"density must lie in [0, 1], got {prob}")
    if seed < 0:
        raise InputError(f"seed must be a non-negative integer, got {seed}")
    draws = np.random.PCG64(seed).random_raw(m * n).tolist() if m * n else []
    cutoff = prob.numerator << 64
    rows = []
    for i in range(m):
        row = 0
        for v in range(n):
            if draws[i * n + v] * prob.denominator < cutoff:
                row |= 1 << v
        rows.append(row)
    return BipartiteInstance(tuple(rows), n)


def parse_bipartite(text: str) -> BipartiteInstance:
    """Read the "m n e" + e lines of "i v" format; errors name the 1-based line."""
    lines = text.split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise InputError("missing 'm n e' header", line=1)
    header = lines[0].split()
    if len(header) != 3 or not all(tok.isdigit() for tok in header):
        raise InputError(f"malformed header {lines[0]!r}, expected 'm n e'", line=1)
    m, n, e = map(int, header)
    if m < 1:
        raise InputError("a bipartite instance needs at least one left item", line=1)
    if len(lines) - 1 != e:
        raise InputError(f"header announces {e} edges but {len(lines) - 1} lines follow", line=1)
    rows = [0] * m
    for lineno, raw in enumerate(lines[1:], start=2):
        tokens = raw.split()
        if len(tokens) != 2 or not all(tok.isdigit() for tok in tokens):
            raise InputError(f"malformed edge line {raw!r}", line=lineno)
        i, v = int(tokens[0]), int(tokens[1])
        if i >= m or v >= n:
            raise InputError(f"pair ({i}, {v}) outside [0, {m}) x [0, {n})", line=lineno)
        if (rows[i] >> v) & 1:
            raise InputError(f"duplicate edge ({i}, {v})", line=lineno)
        rows[i] |= 1 << v
    return BipartiteInstance(tuple(rows), n)


def emit_bipartite(instance: BipartiteInstance) -> str:
    body = "".join(f"{i} {v}\n" for i, row in enumerate(instance.rows) for v in iter_bits(row))
    return f"{instance.m} {instance.right_n} {instance.edge_count}\n{body}"


def load_bipartite(path: Union[str, Path]) -> BipartiteInstance:
    return parse_bipartite(read_ascii(path))


def save_bipartite(path: Union[str, Path], instance: BipartiteInstance) -> None:
    Path(path).write_text(emit_bipartite(instance), encoding="ascii")

"""Exact r-clique enumeration, clique sets and the clique-count inequalities"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence, Union

from .exceptions import InputError, PreconditionError
from .graph import Graph, iter_bits, read_ascii
from .numerics import floor_power_log, strict_power_floor
from .schemas import ChainReport, SupersaturationReport

logger = logging.getLogger(__name__)

Clique = tuple[int, ...]


@dataclass(frozen=True)
class CliqueList:
    """A uniform-arity set of sorted vertex tuples over vertices 0..host_n-1.

    `cliques` is kept in lexicographic order, so two clique lists are equal
    iff they hold the same set.
    """

    arity: int
    cliques: tuple[Clique, ...]
    host_n: int

    def __post_init__(self):
        if self.arity < 1:
            raise InputError(f"clique arity must be at least 1, got {self.arity}")
        previous: Optional[Clique] = None
        for clique in self.cliques:
            if len(clique) != self.arity:
                raise InputError(f"clique {clique} does not have arity {self.arity}")
            if any(a >= b for a, b in zip(clique, clique[1:])):
                raise InputError(f"clique {clique} is not strictly increasing")
            if clique[0] < 0 or clique[-1] >= self.host_n:
                raise InputError(f"clique {clique} has a vertex outside [0, {self.host_n})")
            if previous is not None and clique <= previous:
                raise InputError(f"cliques are not canonical at {clique}")
            previous = clique

    @classmethod
    def of(cls, arity: int, cliques: Iterable[Sequence[int]], host_n: int) -> "CliqueList":
        """Canonicalise arbitrary tuples (sort, de-duplicate) into a clique list."""
        canonical = set()
        for clique in cliques:
            member = tuple(sorted(clique))
            if len(set(member)) != len(member):
                raise InputError(f"clique {tuple(clique)} repeats a vertex")
            canonical.add(member)
        return cls(arity, tuple(sorted(canonical)), host_n)

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self) -> Iterator[Clique]:
        return iter(self.cliques)

    def __contains__(self, clique: object) -> bool:
        return clique in self.members

    @cached_property
    def members(self) -> frozenset[Clique]:
        return frozenset(self.cliques)

    @cached_property
    def facet_counts(self) -> Counter:
        """Co-degree of every (arity-1)-subset that lies in some member."""
        counts: Counter = Counter()
        for clique in self.cliques:
            counts.update(combinations(clique, self.arity - 1))
        return counts

    @cached_property
    def extensions(self) -> dict[Clique, int]:
        """For every facet R, the bit mask of the vertices v with R + v a member."""
        masks: dict[Clique, int] = {}
        for clique in self.cliques:
            for v in clique:
                facet = tuple(x for x in clique if x != v)
                masks[facet] = masks.get(facet, 0) | (1 << v)
        return masks

    def is_subset_of(self, graph: Graph) -> bool:
        """True iff host sizes agree and every member is a clique of `graph`."""
        if self.host_n != graph.n:
            return False
        return all(graph.has_edge(u, v) for clique in self.cliques for u, v in combinations(clique, 2))


def _grow(adj: tuple[int, ...], prefix: list[int], candidates: int, need: int) -> Iterator[Clique]:
    if need == 0:
        yield tuple(prefix)
        return
    if candidates.bit_count() < need:
        return
    for v in iter_bits(candidates):
        higher = candidates & ~((2 << v) - 1)
        prefix.append(v)
        yield from _grow(adj, prefix, higher & adj[v], need - 1)
        prefix.pop()


def _count(adj: tuple[int, ...], candidates: int, need: int) -> int:
    if need == 1:
        return candidates.bit_count()
    total = 0
    for v in iter_bits(candidates):
        rest = candidates & ~((2 << v) - 1) & adj[v]
        if rest.bit_count() >= need - 1:
            total += _count(adj, rest, need - 1)
    return total


@lru_cache(maxsize=32)
def enumerate_r_cliques(graph: Graph, r: int) -> CliqueList:
    """All r-cliques of `graph` in lexicographic order.

    A clique only grows by vertices above its maximum, intersecting adjacency
    rows, so every clique is produced exactly once and already canonical.
    """
    if r < 1:
        raise InputError(f"clique size must be at least 1, got {r}")
    full = (1 << graph.n) - 1
    cliques = tuple(_grow(graph.adj, [], full, r))
    logger.debug("enumerated %d %d-cliques on n=%d", len(cliques), r, graph.n)
    return CliqueList(r, cliques, graph.n)


@lru_cache(maxsize=256)
def clique_count(graph: Graph, r: int) -> int:
    """k_r(G), memoised per (graph, r); k_0 is 1 by convention."""
    if r < 0:
        raise InputError(f"clique size must be non-negative, got {r}")
    if r == 0:
        return 1
    return _count(graph.adj, (1 << graph.n) - 1, r)


def sub_cliques(cliques: CliqueList, s: int) -> CliqueList:
    """K_s(M): every s-subset of every member, de-duplicated."""
    if not 1 <= s <= cliques.arity:
        raise InputError(f"sub-clique size must lie in [1, {cliques.arity}], got {s}")
    found = set()
    for clique in cliques:
        found.update(combinations(clique, s))
    return CliqueList(s, tuple(sorted(found)), cliques.host_n)


def codegree(cliques: CliqueList, facet: Sequence[int]) -> int:
    """Number of members of `cliques` containing the (arity-1)-tuple `facet`."""
    facet = tuple(facet)
    if len(facet) != cliques.arity - 1:
        raise InputError(f"co-degree needs a {cliques.arity - 1}-tuple, got {facet}")
    if any(a >= b for a, b in zip(facet, facet[1:])):
        raise InputError(f"facet {facet} is not sorted")
    return cliques.facet_counts.get(facet, 0)


def chain_inequality_report(graph: Graph, s: int) -> ChainReport:
    """Evaluate (s+1)k_{s+1}/(s k_s) - n/s >= s k_s/((s-1)k_{s-1}) - n/(s-1) exactly."""
    if s < 2:
        raise InputError(f"chain inequality needs s >= 2, got {s}")
    n = graph.n
    k_prev, k_s, k_next = clique_count(graph, s - 1), clique_count(graph, s), clique_count(graph, s + 1)
    if k_s == 0:
        raise PreconditionError(f"k_{s}(G) = 0, the chain inequality needs k_{s}(G) > 0")
    lhs = Fraction((s + 1) * k_next, s * k_s) - Fraction(n, s)
    rhs = Fraction(s * k_s, (s - 1) * k_prev) - Fraction(n, s - 1)
    return ChainReport(n=n, s=s, k_prev=k_prev, k_s=k_s, k_next=k_next, lhs=lhs, rhs=rhs, holds=lhs >= rhs)


def supersaturation_report(graph: Graph, r: int) -> SupersaturationReport:
    """Margin of k_{r+1}(G) over (c/r^r) n^{r+1}, where e(G) = (1 - 1/r + c) n^2 / 2.

    A diagnostic only: at small boundary instances (K_4 with r = 2) the count
    meets the bound with equality.
    """
    if r < 2:
        raise InputError(f"supersaturation needs r >= 2, got {r}")
    n, edges = graph.n, graph.edge_count
    if n == 0:
        return SupersaturationReport(n=0, r=r, edges=0, c=Fraction(-1), applicable=False)
    c = Fraction(2 * edges, n * n) - 1 + Fraction(1, r)
    if c <= 0:
        return SupersaturationReport(n=n, r=r, edges=edges, c=c, applicable=False)
    density = c / r**r
    bound = density * n ** (r + 1)
    k_next = clique_count(graph, r + 1)
    margin = k_next - bound
    return SupersaturationReport(
        n=n,
        r=r,
        edges=edges,
        c=c,
        applicable=True,
        claimed_bound=bound,
        k_next=k_next,
        margin=margin,
        strict_holds=margin > 0,
        implied_s=floor_power_log(density, r + 1, n),
        implied_t_min=strict_power_floor(n, 1 - density**r),
    )


def parse_clique_list(text: str, host_n: Optional[int] = None) -> CliqueList:
    """Read the "r k" + k sorted lines format; errors name the 1-based line."""
    lines = text.split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise InputError("missing 'r k' header", line=1)
    header = lines[0].split()
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise InputError(f"malformed header {lines[0]!r}, expected 'r k'", line=1)
    r, k = int(header[0]), int(header[1])
    if r < 1:
        raise InputError("clique arity must be at least 1", line=1)
    if len(lines) - 1 != k:
        raise InputError(f"header announces {k} cliques but {len(lines) - 1} lines follow", line=1)
    seen: set[Clique] = set()
    for lineno, raw in enumerate(lines[1:], start=2):
        tokens = raw.split()
        if len(tokens) != r or not all(tok.isdigit() for tok in tokens):
            raise InputError(f"expected {r} vertex indices, got {raw!r}", line=lineno)
        clique = tuple(int(tok) for tok in tokens)
        if any(a >= b for a, b in zip(clique, clique[1:])):
            raise InputError(f"clique {clique} is not strictly increasing", line=lineno)
        if host_n is not None and clique[-1] >= host_n:
            raise InputError(f"vertex outside [0, {host_n})", line=lineno)
        if clique in seen:
            raise InputError(f"duplicate clique {clique}", line=lineno)
        seen.add(clique)
    if host_n is None:
        host_n = max((c[-1] for c in seen), default=-1) + 1
    return CliqueList(r, tuple(sorted(seen)), host_n)


def emit_clique_list(cliques: CliqueList) -> str:
    body = "".join(" ".join(map(str, clique)) + "\n" for clique in cliques)
    return f"{cliques.arity} {len(cliques)}\n{body}"


def load_cliques(path: Union[str, Path], host_n: Optional[int] = None) -> CliqueList:
    return parse_clique_list(read_ascii(path), host_n)


def save_cliques(path: Union[str, Path], cliques: CliqueList) -> None:
    Path(path).write_text(emit_clique_list(cliques), encoding="ascii")

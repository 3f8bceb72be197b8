"""Graph representation, deterministic generators and edge-list I/O

Adjacency rows are Python ints used as bit vectors: bit v of `adj[u]` is set
iff uv is an edge. Graphs are immutable; every transformation returns a new
graph, so enumerations can be cached per graph.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence, Union

import numpy as np

from .exceptions import InputError
from .numerics import RationalLike, parse_rational

logger = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of `mask`, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class VertexSet:
    """Sorted, duplicate-free vertex collection (a part S, T, A or B)."""

    members: tuple[int, ...]

    def __post_init__(self):
        previous = -1
        for v in self.members:
            if not isinstance(v, int) or v <= previous:
                raise InputError(f"vertex set must be strictly increasing non-negative ints: {self.members}")
            previous = v

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        return cls(tuple(sorted(set(vertices))))

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        return cls(tuple(iter_bits(mask)))

    @property
    def mask(self) -> int:
        return mask_of(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InputError(f"graph needs exactly n={self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"vertex {u} has a neighbour outside [0, {self.n})")
            if (row >> u) & 1:
                raise InputError(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not (self.adj[v] >> u) & 1:
                    raise InputError(f"adjacency is not symmetric at ({u}, {v})")

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool((self.adj[u] >> v) & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.adj[u]))

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> np.ndarray:
        return np.fromiter((row.bit_count() for row in self.adj), dtype=np.int64, count=self.n)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        for u, row in enumerate(self.adj):
            yield from ((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Graph with exactly the given edges; repeated pairs collapse to one edge."""
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise InputError(f"loop ({u}, {u}) is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def gen_gnp(n: int, p: RationalLike, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) driven by numpy's PCG64 bit generator.

    Pairs (u, v), u < v, are visited in lexicographic order and each consumes
    one raw 64-bit draw x; the pair is an edge iff x < p * 2**64, compared
    exactly as x * q < a * 2**64 for p = a/q. The raw PCG64 stream is fixed
    across platforms and numpy versions.
    """
    prob = parse_rational(p)
    if not 0 <= prob <= 1:
        raise InputError(f"edge probability must lie in [0, 1], got {prob}")
    if seed < 0:
        raise InputError(f"seed must be a non-negative integer, got {seed}")
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    pair_count = n * (n - 1) // 2
    draws = np.random.PCG64(seed).random_raw(pair_count).tolist() if pair_count else []
    cutoff = prob.numerator << 64
    rows = [0] * n
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if draws[k] * prob.denominator < cutoff:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    graph = Graph(n, tuple(rows))
    logger.debug("gen_gnp n=%d p=%s seed=%d -> %d edges", n, prob, seed, graph.edge_count)
    return graph


def gen_complete_multipartite(sizes: Sequence[int]) -> Graph:
    """K(s_1, ..., s_k) on consecutive vertex blocks."""
    if not sizes:
        raise InputError("at least one part size is required")
    if any(size < 1 for size in sizes):
        raise InputError(f"part sizes must be positive, got {list(sizes)}")
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in sizes:
        block = ((1 << size) - 1) << start
        rows.extend([full & ~block] * size)
        start += size
    return Graph(n, tuple(rows))


def overlay(host: Graph, planted: Graph, embedding: Union[Mapping[int, int], Sequence[int]]) -> Graph:
    """Union of `host` with a copy of `planted` placed by `embedding`."""
    if isinstance(embedding, Mapping):
        if set(embedding) != set(range(planted.n)):
            raise InputError("embedding must map every planted vertex exactly once")
        target = [embedding[v] for v in range(planted.n)]
    else:
        target = list(embedding)
        if len(target) != planted.n:
            raise InputError(f"embedding has {len(target)} images for {planted.n} planted vertices")
    if any(not 0 <= x < host.n for x in target):
        raise InputError(f"embedding image outside [0, {host.n})")
    if len(set(target)) != len(target):
        raise InputError("embedding is not injective")
    rows = list(host.adj)
    for u, v in planted.edges():
        a, b = target[u], target[v]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(host.n, tuple(rows))


def parse_edge_list(text: str) -> Graph:
    """Read the "n m" + m lines of "u v" format; errors name the 1-based line.

    An edge may be written either way round and lines may come in any order;
    the graph is undirected, so emit_edge_list writes it back canonically
    with u < v in lexicographic order.
    """
    lines = text.split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise InputError("missing 'n m' header", line=1)
    header = lines[0].split()
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise InputError(f"malformed header {lines[0]!r}, expected 'n m'", line=1)
    n, m = int(header[0]), int(header[1])
    if len(lines) - 1 != m:
        raise InputError(f"header announces {m} edges but {len(lines) - 1} lines follow", line=1)
    rows = [0] * n
    for lineno, raw in enumerate(lines[1:], start=2):
        tokens = raw.split()
        if len(tokens) != 2 or not all(tok.isdigit() for tok in tokens):
            raise InputError(f"malformed edge line {raw!r}", line=lineno)
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise InputError(f"loop ({u}, {v})", line=lineno)
        if u >= n or v >= n:
            raise InputError(f"endpoint outside [0, {n})", line=lineno)
        if (rows[u] >> v) & 1:
            raise InputError(f"duplicate edge ({u}, {v})", line=lineno)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def emit_edge_list(graph: Graph) -> str:
    """Canonical edge-list text: sorted "u v" lines with u < v."""
    edges = list(graph.edges())
    body = "".join(f"{u} {v}\n" for u, v in edges)
    return f"{graph.n} {len(edges)}\n{body}"


def read_ascii(path: Union[str, Path]) -> str:
    """File contents as ASCII text; a stray byte is an input error on its line."""
    raw = Path(path).read_bytes()
    try:
        return raw.decode("ascii")
    except UnicodeDecodeError as exc:
        line = raw[: exc.start].count(b"\n") + 1
        raise InputError(f"non-ASCII byte 0x{raw[exc.start]:02x} in {path}", line=line)


def load_graph(path: Union[str, Path]) -> Graph:
    return parse_edge_list(read_ascii(path))


def save_graph(path: Union[str, Path], graph: Graph) -> None:
    Path(path).write_text(emit_edge_list(graph), encoding="ascii")

"""Simple undirected graphs on dense vertex ids, edge-list I/O, generators
and initial-set sampling."""

from __future__ import annotations

import heapq
import random
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphParseError, ParameterError

VertexSet = frozenset  # frozenset[int]; members are vertex ids of one graph

GENERATOR_KINDS = ("complete", "path", "cycle", "star", "gnp", "random_tree")


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph with vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Instances are
    immutable; build them with :meth:`from_edges` rather than directly.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int = field(init=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ParameterError("vertex count must be non-negative")
        if len(self.adjacency) != self.n:
            raise ParameterError("adjacency must have one entry per vertex")
        total = 0
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ParameterError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise ParameterError(f"self-loop at {v}")
                if u <= prev:
                    raise ParameterError(f"adjacency of {v} not strictly sorted")
                prev = u
            total += len(nbrs)
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not _contains(self.adjacency[u], v):
                    raise ParameterError(f"edge {v}-{u} is not symmetric")
        object.__setattr__(self, "m", total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, collapsing duplicate edges. Self-loops are rejected."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return _contains(self.adjacency[u], v)

    def induced_subgraph(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph relabelled to ``0..len(keep)-1`` in ascending order."""
        kept = sorted(set(keep))
        index = {v: i for i, v in enumerate(kept)}
        return Graph.from_edges(
            len(kept),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for u in self.adjacency[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()


def _contains(sorted_nbrs: tuple[int, ...], v: int) -> bool:
    i = bisect_left(sorted_nbrs, v)
    return i < len(sorted_nbrs) and sorted_nbrs[i] == v


def vertex_set(g: Graph, members: Iterable[int]) -> frozenset[int]:
    """Validate ``members`` against ``g`` and return them as a frozenset."""
    s = frozenset(members)
    for v in s:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise ParameterError(f"vertex {v!r} is not in a graph on {g.n} vertices")
    return s


# -- edge-list format ---------------------------------------------------------


def from_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines of ``u v``.

    Blank lines and lines starting with ``#`` are skipped. Duplicate edges
    (in either orientation) are collapsed, so ``m`` counts input lines, not
    distinct edges.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError("negative count in header", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise GraphParseError(f"vertex index out of range [0, {n})", lineno)
        if a == b:
            raise GraphParseError(f"self-loop at vertex {a}", lineno)
        if len(edges) == header[1]:
            raise GraphParseError(f"more than the declared {header[1]} edge lines", lineno)
        edges.append((a, b))
    if header is None:
        raise GraphParseError("missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphParseError(f"declared {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def to_edge_list(g: Graph) -> str:
    """Canonical edge-list text; no trailing newline."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines)


def read_edge_list(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return from_edge_list(fh.read())


# -- generators ---------------------------------------------------------------


def complete(n: int) -> Graph:
    _check_n(n)
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path(n: int) -> Graph:
    _check_n(n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    """Centre 0 joined to leaves ``1..n-1``."""
    _check_n(n)
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def gnp(n: int, p: float, seed: int) -> Graph:
    _check_n(n)
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    return Graph.from_edges(
        n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p)
    )


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """Labelled tree on ``n`` vertices encoded by a Prüfer sequence of length n-2."""
    _check_n(n)
    if n == 1:
        if seq:
            raise ParameterError("a one-vertex tree has an empty Prüfer sequence")
        return Graph(1, ((),))
    if len(seq) != n - 2:
        raise ParameterError(f"Prüfer sequence for n={n} must have length {n - 2}")
    if any(not 0 <= x < n for x in seq):
        raise ParameterError("Prüfer entries must lie in [0, n)")
    remaining = [1] * n
    for x in seq:
        remaining[x] += 1
    leaves = [v for v in range(n) if remaining[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        remaining[x] -= 1
        if remaining[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree, via a uniform Prüfer sequence."""
    _check_n(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(max(n - 2, 0))]
    return prufer_decode(seq, n)


def generate(kind: str, n: int, seed: int = 0, p: float | None = None) -> Graph:
    """Dispatch to a named generator. ``p`` is required for ``gnp`` only."""
    if kind == "complete":
        return complete(n)
    if kind == "path":
        return path(n)
    if kind == "cycle":
        return cycle(n)
    if kind == "star":
        return star(n)
    if kind == "gnp":
        if p is None:
            raise ParameterError("gnp needs an edge probability p")
        return gnp(n, p, seed)
    if kind == "random_tree":
        return random_tree(n, seed)
    raise ParameterError(f"unknown generator kind {kind!r}; expected one of {GENERATOR_KINDS}")


def _check_n(n: int) -> None:
    if n < 1:
        raise ParameterError("generators need n >= 1")


# -- initial infected sets ----------------------------------------------------


def sample_bernoulli(g: Graph, p: float, seed: int) -> frozenset[int]:
    """Include each vertex independently with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"probability {p} outside [0, 1]")
    rng = random.Random(seed)
    return frozenset(v for v in range(g.n) if rng.random() < p)


def sample_fixed_size(g: Graph, k: int, seed: int) -> frozenset[int]:
    """Uniformly random ``k``-subset of the vertices."""
    if not 0 <= k <= g.n:
        raise ParameterError(f"cannot choose {k} of {g.n} vertices")
    return frozenset(random.Random(seed).sample(range(g.n), k))


def sample_a0(
    g: Graph, seed: int, *, p: float | None = None, k: int | None = None
) -> frozenset[int]:
    """Sample an initial set by exactly one of ``p=`` (Bernoulli) or ``k=`` (fixed size)."""
    if (p is None) == (k is None):
        raise ParameterError("give exactly one of p (bernoulli) or k (fixed size)")
    if p is not None:
        return sample_bernoulli(g, p, seed)
    return sample_fixed_size(g, k, seed)

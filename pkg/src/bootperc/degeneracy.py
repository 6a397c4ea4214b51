"""Degeneracy and left-to-right vertex orderings with bounded left-degree.

The ordering is built by smallest-last peeling: repeatedly delete a vertex of
minimum remaining degree and place it in the rightmost free slot. Its degree
at deletion time is then exactly its number of neighbours to the left.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .errors import ParameterError, StructuralError
from .graph import Graph

BRUTEFORCE_MAX_N = 9


@dataclass(frozen=True)
class DegeneracyOrdering:
    order: tuple[int, ...]  # order[i] = vertex at position i, 0 = leftmost
    position: tuple[int, ...]  # inverse of order
    left_degree: tuple[int, ...]  # indexed by vertex
    d: int

    @classmethod
    def from_order(cls, g: Graph, order: Sequence[int]) -> DegeneracyOrdering:
        """Wrap an arbitrary permutation, computing left-degrees and ``d``."""
        position = _inverse(order, g.n)
        left = tuple(
            sum(1 for u in g.adjacency[v] if position[u] < position[v]) for v in range(g.n)
        )
        return cls(tuple(order), position, left, max(left, default=0))

    def left_neighbors(self, g: Graph, v: int) -> list[int]:
        p = self.position[v]
        return [u for u in g.adjacency[v] if self.position[u] < p]

    def right_neighbors(self, g: Graph, v: int) -> list[int]:
        p = self.position[v]
        return [u for u in g.adjacency[v] if self.position[u] > p]


def _inverse(order: Sequence[int], n: int) -> tuple[int, ...]:
    if len(order) != n:
        raise StructuralError(f"ordering has {len(order)} entries, graph has {n} vertices")
    position = [-1] * n
    for i, v in enumerate(order):
        if not isinstance(v, int) or not 0 <= v < n or position[v] != -1:
            raise StructuralError(f"ordering is not a permutation of [0, {n})")
        position[v] = i
    return tuple(position)


def compute_ordering(g: Graph) -> DegeneracyOrdering:
    """Smallest-last ordering; ``d`` of the result is the degeneracy of ``g``.

    Ties on minimum degree go to the smallest vertex id. Buckets are keyed by
    current degree and hold lazy min-heaps, so the cost is O((n + m) log n).
    """
    n = g.n
    deg = g.degrees()
    buckets: list[list[int]] = [[] for _ in range(max(deg, default=0) + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)  # ascending, already a valid heap
    removed = [False] * n
    removal: list[int] = []
    left = [0] * n
    low = 0
    for _ in range(n):
        while True:
            while not buckets[low]:
                low += 1
            v = heapq.heappop(buckets[low])
            if not removed[v] and deg[v] == low:
                break
        removed[v] = True
        removal.append(v)
        left[v] = low
        for u in g.adjacency[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(buckets[deg[u]], u)
        # a deletion lowers neighbour degrees by one at most
        low = max(low - 1, 0)
    order = tuple(reversed(removal))
    position = [0] * n
    for i, v in enumerate(order):
        position[v] = i
    return DegeneracyOrdering(order, tuple(position), tuple(left), max(left, default=0))


def degeneracy(g: Graph) -> int:
    return compute_ordering(g).d


def verify_ordering(g: Graph, ordering: DegeneracyOrdering | Sequence[int], d_claim: int) -> bool:
    """True iff every vertex has at most ``d_claim`` neighbours to its left.

    Left-degrees are recounted from the permutation alone; any cached
    ``left_degree`` on the argument is ignored.
    """
    order = ordering.order if isinstance(ordering, DegeneracyOrdering) else ordering
    position = _inverse(order, g.n)
    if isinstance(ordering, DegeneracyOrdering) and tuple(ordering.position) != position:
        raise StructuralError("position is not the inverse of order")
    for v in range(g.n):
        p = position[v]
        if sum(1 for u in g.adjacency[v] if position[u] < p) > d_claim:
            return False
    return True


def degeneracy_bruteforce(g: Graph, max_n: int = BRUTEFORCE_MAX_N) -> int:
    """Minimum over all orderings of the maximum left-degree (test oracle).

    Orderings are grown left to right by depth-first search. A branch is cut
    once a placed vertex reaches the best value found so far, and a set of
    placed vertices that already failed is not explored again, because the
    left-degree of the next vertex depends only on that set.
    """
    n = g.n
    if n > max_n:
        raise ParameterError(f"brute force refuses n={n} > {max_n}")
    if g.m == 0:
        return 0
    nbr_mask = [sum(1 << u for u in g.adjacency[v]) for v in range(n)]
    full = (1 << n) - 1
    best = max(g.degrees())  # any ordering does at least this well

    def feasible(placed: int, limit: int, dead: set[int]) -> bool:
        if placed == full:
            return True
        if placed in dead:
            return False
        for v in range(n):
            bit = 1 << v
            if placed & bit:
                continue
            if (nbr_mask[v] & placed).bit_count() <= limit and feasible(placed | bit, limit, dead):
                return True
        dead.add(placed)
        return False

    while best > 0 and feasible(0, best - 1, set()):
        best -= 1
    return best


def has_low_degree_vertex_everywhere(g: Graph, d: int) -> bool:
    """Check the definition directly: every nonempty induced subgraph has a
    vertex of degree at most ``d``. Exponential; tiny graphs only."""
    n = g.n
    if n > 16:
        raise ParameterError("subgraph enumeration refuses n > 16")
    nbr_mask = [sum(1 << u for u in g.adjacency[v]) for v in range(n)]
    for sub in range(1, 1 << n):
        if not any(
            sub >> v & 1 and (nbr_mask[v] & sub).bit_count() <= d for v in range(n)
        ):
            return False
    return True

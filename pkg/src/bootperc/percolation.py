"""Synchronous r-neighbour bootstrap percolation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ParameterError
from .graph import Graph, vertex_set


@dataclass(frozen=True)
class PercolationTrace:
    """Record of one run.

    ``rounds[t - 1]`` holds the vertices newly infected at time step ``t``
    (ascending ids); only nonempty rounds are stored, so ``tau == len(rounds)``.
    """

    r: int
    a0: frozenset[int]
    rounds: tuple[tuple[int, ...], ...]
    a_f: frozenset[int]

    @property
    def tau(self) -> int:
        return len(self.rounds)

    @property
    def infection_order(self) -> list[tuple[int, int]]:
        """Serialised infections as ``(vertex, round)``, rounds starting at 1."""
        return [(v, t) for t, batch in enumerate(self.rounds, start=1) for v in batch]

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "a0": sorted(self.a0),
            "rounds": [list(batch) for batch in self.rounds],
            "tau": self.tau,
            "af_size": len(self.a_f),
        }


def run(g: Graph, a0: Iterable[int], r: int) -> PercolationTrace:
    """Run the process from ``a0`` until no vertex changes.

    Each vertex keeps a counter of infected neighbours; only neighbours of the
    previous round's infections can cross the threshold, so a run costs
    O(n + m) plus sorting each round.
    """
    if r < 1:
        raise ParameterError(f"threshold r must be >= 1, got {r}")
    a0 = vertex_set(g, a0)
    infected = [False] * g.n
    for v in a0:
        infected[v] = True
    count = [0] * g.n
    frontier = sorted(a0)
    rounds: list[tuple[int, ...]] = []
    while frontier:
        candidates = []
        for v in frontier:
            for u in g.adjacency[v]:
                if not infected[u]:
                    count[u] += 1
                    if count[u] == r:
                        candidates.append(u)
        # counters reflect A_{t-1} only: nobody is marked until the round is collected
        frontier = sorted(candidates)
        for u in frontier:
            infected[u] = True
        if frontier:
            rounds.append(tuple(frontier))
    a_f = frozenset(v for v in range(g.n) if infected[v])
    return PercolationTrace(r, a0, tuple(rounds), a_f)


def final_set(g: Graph, a0: Iterable[int], r: int) -> frozenset[int]:
    return run(g, a0, r).a_f


def percolates(g: Graph, a0: Iterable[int], r: int) -> bool:
    return len(run(g, a0, r).a_f) == g.n


def is_minimal_percolating(g: Graph, a0: Iterable[int], r: int) -> bool:
    """Percolating, and no set with one vertex removed percolates.

    Single removals suffice since the final set is monotone in ``a0``.
    """
    a0 = vertex_set(g, a0)
    if not percolates(g, a0, r):
        return False
    return not any(percolates(g, a0 - {v}, r) for v in a0)


def check_trace(g: Graph, trace: PercolationTrace) -> None:
    """Assert every structural invariant of ``trace`` against ``g``."""
    seen = set(trace.a0)
    for t, batch in enumerate(trace.rounds, start=1):
        assert batch, f"round {t} is empty"
        assert list(batch) == sorted(set(batch)), f"round {t} not ascending"
        for v in batch:
            assert v not in seen, f"vertex {v} infected twice"
            k = sum(1 for u in g.adjacency[v] if u in seen)
            assert k >= trace.r, f"vertex {v} infected in round {t} with only {k} neighbours"
        seen.update(batch)
    assert seen == trace.a_f, "a_f is not a0 plus the rounds"
    for v in range(g.n):
        if v not in trace.a_f:
            k = sum(1 for u in g.adjacency[v] if u in trace.a_f)
            assert k < trace.r, f"vertex {v} outside a_f has {k} infected neighbours"

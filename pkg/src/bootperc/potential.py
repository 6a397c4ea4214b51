"""Potential along a serialised infection sequence.

After the i-th infection the potential is the sum, over infected vertices, of
their uninfected left-neighbours in a fixed ordering. An uninfected vertex is
counted once for every infected vertex that has it on its left.
"""

from __future__ import annotations

from dataclasses import dataclass

from .degeneracy import DegeneracyOrdering
from .errors import NotApplicableError, StructuralError
from .graph import Graph
from .percolation import PercolationTrace


@dataclass(frozen=True)
class PotentialTrace:
    psi: tuple[int, ...]
    d_used: int
    r: int
    a0_size: int

    @property
    def drops(self) -> list[int]:
        return [a - b for a, b in zip(self.psi, self.psi[1:])]

    @property
    def min_drop(self) -> int | None:
        return min(self.drops, default=None)

    def to_json(self) -> dict:
        applicable = self.r > self.d_used
        return {
            "psi": list(self.psi),
            "min_drop": self.min_drop,
            "claim_holds": verify_claim(self) if applicable else None,
            "d": self.d_used,
            "r": self.r,
        }


def _check_inputs(g: Graph, ordering: DegeneracyOrdering, trace: PercolationTrace) -> None:
    if len(ordering.order) != g.n or len(ordering.position) != g.n:
        raise StructuralError("ordering does not match the graph's vertex count")
    if any(not 0 <= v < g.n for v in trace.a_f):
        raise StructuralError("trace mentions vertices outside the graph")
    infected = set(trace.a0)
    for v, _ in trace.infection_order:
        if v in infected:
            raise StructuralError(f"vertex {v} infected twice in trace")
        infected.add(v)
    if infected != trace.a_f:
        raise StructuralError("trace infection order does not produce its final set")


def compute_potential_trace(
    g: Graph, ordering: DegeneracyOrdering, trace: PercolationTrace
) -> PotentialTrace:
    """Incremental computation.

    Infecting ``w`` adds its uninfected left-neighbours and removes one unit
    for each infected right-neighbour, which had ``w`` on its left.
    """
    _check_inputs(g, ordering, trace)
    pos = ordering.position
    infected = [False] * g.n
    for v in trace.a0:
        infected[v] = True
    psi = sum(
        1
        for v in trace.a0
        for u in g.adjacency[v]
        if pos[u] < pos[v] and not infected[u]
    )
    values = [psi]
    for w, _ in trace.infection_order:
        gained = lost = 0
        for u in g.adjacency[w]:
            if pos[u] < pos[w]:
                gained += not infected[u]
            elif infected[u]:
                lost += 1
        infected[w] = True
        psi += gained - lost
        values.append(psi)
    return PotentialTrace(tuple(values), ordering.d, trace.r, len(trace.a0))


def reference_potential_trace(
    g: Graph, ordering: DegeneracyOrdering, trace: PercolationTrace
) -> PotentialTrace:
    """Recount the potential from scratch after every infection. O(K (n + m))."""
    _check_inputs(g, ordering, trace)
    pos = ordering.position
    infected = set(trace.a0)

    def recount() -> int:
        return sum(
            1
            for v in infected
            for u in g.adjacency[v]
            if pos[u] < pos[v] and u not in infected
        )

    values = [recount()]
    for w, _ in trace.infection_order:
        infected.add(w)
        values.append(recount())
    return PotentialTrace(tuple(values), ordering.d, trace.r, len(trace.a0))


def verify_claim(pt: PotentialTrace) -> bool:
    """Every infection lowers the potential by at least ``r - d_used``."""
    if pt.r <= pt.d_used:
        raise NotApplicableError(f"claim needs r > d, got r={pt.r}, d={pt.d_used}")
    need = pt.r - pt.d_used
    return all(drop >= need for drop in pt.drops)


def check_potential_invariants(pt: PotentialTrace, af_size: int) -> None:
    assert all(x >= 0 for x in pt.psi), "negative potential"
    assert pt.psi[0] <= pt.d_used * pt.a0_size, "initial potential above d|A0|"
    assert len(pt.psi) == af_size - pt.a0_size + 1, "one value per infection plus the start"
    if pt.r > pt.d_used:
        # the final-size bound rebuilt from the initial potential
        assert (pt.r - pt.d_used) * (af_size - pt.a0_size) <= pt.psi[0]

"""Exhaustive search for smallest and inclusion-minimal percolating sets.

A vertex of degree below r can never become infected, so it sits in every
percolating set. Only the remaining "free" vertices are enumerated, and the
search refuses when there are more of them than the budget allows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import BudgetExceeded, StructuralError
from .graph import Graph

DEFAULT_BUDGET = 22


@dataclass(frozen=True)
class MinPercReport:
    r: int
    n: int
    smallest_size: int
    witness: tuple[int, ...]
    forced: tuple[int, ...]
    minimal_sets: tuple[tuple[int, ...], ...] | None = None  # only when enumerated
    riedl_lower: Fraction | None = None  # trees only
    riedl_upper: Fraction | None = None

    @property
    def l(self) -> int:  # noqa: E743
        """Number of vertices of degree < r."""
        return len(self.forced)

    def to_json(self) -> dict:
        out = {
            "r": self.r,
            "n": self.n,
            "smallest_size": self.smallest_size,
            "witness": list(self.witness),
            "forced": list(self.forced),
            "l": self.l,
            "riedl_lower": None if self.riedl_lower is None else str(self.riedl_lower),
            "riedl_upper": None if self.riedl_upper is None else str(self.riedl_upper),
        }
        if self.minimal_sets is not None:
            out["minimal_sets"] = [list(s) for s in self.minimal_sets]
            out["largest_minimal_size"] = max(len(s) for s in self.minimal_sets)
        return out


def forced_vertices(g: Graph, r: int) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) < r]


def _split(g: Graph, r: int, budget: int) -> tuple[list[int], list[int]]:
    forced = forced_vertices(g, r)
    free = [v for v in range(g.n) if g.degree(v) >= r]
    if len(free) > budget:
        raise BudgetExceeded(len(free), budget, frozenset(forced))
    return forced, free


def _closure(nbr_mask: list[int], mask: int, r: int, full: int) -> int:
    """Final infected set as a bitmask (order of infection is irrelevant)."""
    while True:
        grown = mask
        rest = full & ~mask
        while rest:
            low = rest & -rest
            if (nbr_mask[low.bit_length() - 1] & mask).bit_count() >= r:
                grown |= low
            rest ^= low
        if grown == mask:
            return mask
        mask = grown


def _masks(g: Graph) -> tuple[list[int], int]:
    return [sum(1 << u for u in g.adjacency[v]) for v in range(g.n)], (1 << g.n) - 1


def _members(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def riedl_bounds(n: int, l: int, r: int) -> tuple[Fraction, Fraction]:
    """((r-1)n + 1)/r and (rn + l)/(r + 1): size range of minimal percolating
    sets of a tree on n vertices with l vertices of degree < r."""
    return Fraction((r - 1) * n + 1, r), Fraction(r * n + l, r + 1)


def smallest_percolating_set(g: Graph, r: int, budget: int = DEFAULT_BUDGET) -> MinPercReport:
    """Minimum-size percolating set by increasing-cardinality enumeration.

    Among sets of minimum size the lexicographically smallest sorted tuple is
    returned.
    """
    forced, free = _split(g, r, budget)
    nbr, full = _masks(g)
    base = sum(1 << v for v in forced)
    witness: tuple[int, ...] | None = None
    for size in range(len(free) + 1):
        for combo in combinations(free, size):
            mask = base | sum(1 << v for v in combo)
            if _closure(nbr, mask, r, full) == full:
                cand = _members(mask)
                if witness is None or cand < witness:
                    witness = cand
        if witness is not None:
            break
    assert witness is not None  # V itself always percolates
    lower = upper = None
    if g.is_tree():
        lower, upper = riedl_bounds(g.n, len(forced), r)
    return MinPercReport(r, g.n, len(witness), witness, tuple(forced), None, lower, upper)


def enumerate_minimal_percolating_sets(
    g: Graph, r: int, budget: int = DEFAULT_BUDGET
) -> list[tuple[int, ...]]:
    """All inclusion-minimal percolating sets, sorted by size then lexicographically."""
    forced, free = _split(g, r, budget)
    nbr, full = _masks(g)
    base = sum(1 << v for v in forced)
    f = len(free)
    # perc[i]: does forced + (free vertices selected by bits of i) percolate
    perc = [False] * (1 << f)
    for i in range(1 << f):
        mask = base
        for j in range(f):
            if i >> j & 1:
                mask |= 1 << free[j]
        perc[i] = _closure(nbr, mask, r, full) == full
    found = []
    for i in range(1 << f):
        if perc[i] and not any(i >> j & 1 and perc[i ^ (1 << j)] for j in range(f)):
            found.append(tuple(sorted(forced + [free[j] for j in range(f) if i >> j & 1])))
    found.sort(key=lambda s: (len(s), s))
    return found


def minperc_report(
    g: Graph, r: int, budget: int = DEFAULT_BUDGET, enumerate_all: bool = False
) -> MinPercReport:
    rep = smallest_percolating_set(g, r, budget)
    if not enumerate_all:
        return rep
    sets = tuple(enumerate_minimal_percolating_sets(g, r, budget))
    return MinPercReport(
        rep.r, rep.n, rep.smallest_size, rep.witness, rep.forced, sets,
        rep.riedl_lower, rep.riedl_upper,
    )


def check_riedl_tree_bounds(tree: Graph, r: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Every minimal percolating set S of the tree satisfies
    (r-1)n + 1 <= r|S| and (r+1)|S| <= rn + l."""
    if not tree.is_tree():
        raise StructuralError("input is not a tree")
    n = tree.n
    l = len(forced_vertices(tree, r))
    return all(
        (r - 1) * n + 1 <= r * len(s) and (r + 1) * len(s) <= r * n + l
        for s in enumerate_minimal_percolating_sets(tree, r, budget)
    )

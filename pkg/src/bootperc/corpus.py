"""Seeded graph corpora and the randomized bound/potential sweep."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import graph as G
from .bounds import forest_bound_check, report_from_trace
from .degeneracy import compute_ordering
from .errors import BudgetExceeded
from .minperc import smallest_percolating_set
from .percolation import run
from .potential import compute_potential_trace, reference_potential_trace, verify_claim

GNP_PROBS = (0.02, 0.05, 0.1)
BERNOULLI_PROBS = (0.1, 0.3)
R_OFFSETS = (1, 2, 3, 4)


@dataclass(frozen=True)
class CorpusGraph:
    name: str
    graph: G.Graph


def build_corpus(seed: int, per_gnp_cell: int = 5) -> list[CorpusGraph]:
    """Graphs of the main sweep: G(n, p) for n = 20, 30, ..., 200 and each p,
    random trees with n <= 200, cycles and stars. 505 graphs by default."""
    rng = random.Random(seed)
    out = []
    for n in range(20, 201, 10):
        for p in GNP_PROBS:
            for _ in range(per_gnp_cell):
                s = rng.getrandbits(64)
                out.append(CorpusGraph(f"gnp(n={n},p={p},seed={s})", G.gnp(n, p, s)))
    for _ in range(120):
        n = rng.randint(2, 200)
        s = rng.getrandbits(64)
        out.append(CorpusGraph(f"random_tree(n={n},seed={s})", G.random_tree(n, s)))
    for n in range(3, 200, 4):
        out.append(CorpusGraph(f"cycle(n={n})", G.cycle(n)))
    for n in range(2, 200, 4):
        out.append(CorpusGraph(f"star(n={n})", G.star(n)))
    return out


def small_corpus(seed: int, count: int = 200) -> list[CorpusGraph]:
    """Graphs on at most 8 vertices, for brute-force cross-checks."""
    rng = random.Random(seed)
    out = []
    for n in range(1, 9):
        out.append(CorpusGraph(f"complete({n})", G.complete(n)))
        out.append(CorpusGraph(f"path({n})", G.path(n)))
        out.append(CorpusGraph(f"star({n})", G.star(n)))
        if n >= 3:
            out.append(CorpusGraph(f"cycle({n})", G.cycle(n)))
    while len(out) < count:
        n = rng.randint(1, 8)
        s = rng.getrandbits(64)
        if rng.random() < 0.25:
            out.append(CorpusGraph(f"random_tree(n={n},seed={s})", G.random_tree(n, s)))
        else:
            p = rng.choice((0.2, 0.35, 0.5, 0.7, 0.9))
            out.append(CorpusGraph(f"gnp(n={n},p={p},seed={s})", G.gnp(n, p, s)))
    return out


def initial_sets(g: G.Graph, seed: int) -> list[tuple[str, frozenset[int]]]:
    """Both sampling modes: Bernoulli at each probability and two fixed sizes."""
    rng = random.Random(seed)
    sets = [(f"bernoulli({p})", G.sample_bernoulli(g, p, rng.getrandbits(64))) for p in BERNOULLI_PROBS]
    for k in sorted({max(1, g.n // 10), max(1, g.n // 4)}):
        sets.append((f"fixed_size({k})", G.sample_fixed_size(g, k, rng.getrandbits(64))))
    return sets


@dataclass
class SweepSummary:
    seed: int
    graphs: int = 0
    runs: int = 0
    theorem_violations: list[str] = field(default_factory=list)
    claim_violations: list[str] = field(default_factory=list)
    psi0_violations: list[str] = field(default_factory=list)
    runtime_violations: list[str] = field(default_factory=list)
    forest_violations: list[str] = field(default_factory=list)
    reference_checks: int = 0
    reference_mismatches: list[str] = field(default_factory=list)
    tightest_ratio: str | None = None  # tightest |A_f| (r-d) / (r |A0|) seen

    @property
    def ok(self) -> bool:
        return not (
            self.theorem_violations
            or self.claim_violations
            or self.psi0_violations
            or self.runtime_violations
            or self.forest_violations
            or self.reference_mismatches
        )

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "graphs": self.graphs,
            "runs": self.runs,
            "theorem_violations": self.theorem_violations,
            "claim_violations": self.claim_violations,
            "psi0_violations": self.psi0_violations,
            "runtime_violations": self.runtime_violations,
            "forest_violations": self.forest_violations,
            "reference_checks": self.reference_checks,
            "reference_mismatches": self.reference_mismatches,
            "tightest_ratio": self.tightest_ratio,
            "ok": self.ok,
        }


def sweep(corpus: list[CorpusGraph], seed: int, reference_max_n: int = 40) -> SweepSummary:
    """Run every graph for r = d+1..d+4 and every sampled initial set, checking
    the final-size bound, the per-infection potential drop, the initial
    potential, the running-time bound and (for forests) the forest bound.

    Graphs with at most ``reference_max_n`` vertices also have the potential
    recomputed from scratch and compared with the incremental values.
    """
    summary = SweepSummary(seed)
    rng = random.Random(seed)
    tightest: Fraction | None = None
    for cg in corpus:
        g = cg.graph
        ordering = compute_ordering(g)
        d = ordering.d
        is_forest = g.m == g.n - _components(g)
        summary.graphs += 1
        for a0_name, a0 in initial_sets(g, rng.getrandbits(64)):
            for r in (d + off for off in R_OFFSETS):
                label = f"{cg.name} r={r} a0={a0_name}"
                trace = run(g, a0, r)
                rep = report_from_trace(trace, d)
                summary.runs += 1
                if not rep.theorem_holds:
                    summary.theorem_violations.append(label)
                if not rep.runtime_corollary_holds:
                    summary.runtime_violations.append(label)
                if is_forest and r >= 2 and not forest_bound_check(rep.a0_size, rep.af_size, r):
                    summary.forest_violations.append(label)
                pt = compute_potential_trace(g, ordering, trace)
                if not verify_claim(pt):
                    summary.claim_violations.append(label)
                if pt.psi[0] > d * len(a0):
                    summary.psi0_violations.append(label)
                if g.n <= reference_max_n:
                    summary.reference_checks += 1
                    if reference_potential_trace(g, ordering, trace).psi != pt.psi:
                        summary.reference_mismatches.append(label)
                if a0:
                    q = Fraction((r - d) * rep.af_size, r * rep.a0_size)
                    if tightest is None or q > tightest:
                        tightest = q
    summary.tightest_ratio = None if tightest is None else str(tightest)
    return summary


@dataclass
class MinPercSweep:
    checked: int = 0
    skipped_budget: int = 0
    violations: list[str] = field(default_factory=list)


def min_perc_sweep(corpus: list[CorpusGraph], budget: int, r_offsets=(1, 2, 3)) -> MinPercSweep:
    """Smallest percolating sets against the lower bound n (r-d)/r, for every
    graph whose free-vertex count fits in ``budget``."""
    out = MinPercSweep()
    for cg in corpus:
        g = cg.graph
        d = compute_ordering(g).d
        for r in (d + off for off in r_offsets):
            try:
                rep = smallest_percolating_set(g, r, budget)
            except BudgetExceeded:
                out.skipped_budget += 1
                continue
            out.checked += 1
            if r * rep.smallest_size < g.n * (r - d):
                out.violations.append(f"{cg.name} r={r} size={rep.smallest_size}")
    return out


def _components(g: G.Graph) -> int:
    seen = [False] * g.n
    count = 0
    for s in range(g.n):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        stack = [s]
        while stack:
            for u in g.adjacency[stack.pop()]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
    return count

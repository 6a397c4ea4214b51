"""Exact checks of the final-size bound for degenerate graphs and its
corollaries. All verdicts use integer cross-multiplication."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .degeneracy import compute_ordering
from .errors import NotApplicableError, ParameterError
from .graph import Graph, vertex_set
from .percolation import PercolationTrace, run


@dataclass(frozen=True)
class BoundReport:
    d: int
    r: int
    a0_size: int
    af_size: int
    tau: int
    applicable: bool
    # None when r <= d: not applicable is its own verdict, never a pass or fail
    theorem_holds: bool | None
    runtime_corollary_holds: bool | None

    @property
    def bound(self) -> Fraction | None:
        """r |A0| / (r - d), the largest final size allowed."""
        if not self.applicable:
            return None
        return Fraction(self.r * self.a0_size, self.r - self.d)

    def to_json(self) -> dict:
        b = self.bound
        return {
            "d": self.d,
            "r": self.r,
            "a0_size": self.a0_size,
            "af_size": self.af_size,
            "tau": self.tau,
            "applicable": self.applicable,
            "theorem_holds": self.theorem_holds,
            "runtime_corollary_holds": self.runtime_corollary_holds,
            "bound_numerator": None if b is None else b.numerator,
            "bound_denominator": None if b is None else b.denominator,
        }


def theorem_holds(a0_size: int, af_size: int, d: int, r: int) -> bool:
    """|A0| <= |A_f| and (r - d)|A_f| <= r|A0|."""
    if r <= d:
        raise NotApplicableError(f"bound needs r > d, got r={r}, d={d}")
    return a0_size <= af_size and (r - d) * af_size <= r * a0_size


def runtime_holds(a0_size: int, tau: int, d: int, r: int) -> bool:
    """(r - d) tau <= d |A0|."""
    if r <= d:
        raise NotApplicableError(f"running-time bound needs r > d, got r={r}, d={d}")
    return (r - d) * tau <= d * a0_size


def _resolve_d(g: Graph, d: int | None) -> int:
    exact = compute_ordering(g).d
    if d is None:
        return exact
    if d < exact:
        raise ParameterError(f"override d={d} is below the degeneracy {exact}")
    return d


def report_from_trace(trace: PercolationTrace, d: int) -> BoundReport:
    a0, af = len(trace.a0), len(trace.a_f)
    applicable = trace.r > d
    return BoundReport(
        d=d,
        r=trace.r,
        a0_size=a0,
        af_size=af,
        tau=trace.tau,
        applicable=applicable,
        theorem_holds=theorem_holds(a0, af, d, trace.r) if applicable else None,
        runtime_corollary_holds=runtime_holds(a0, trace.tau, d, trace.r) if applicable else None,
    )


def check_theorem(g: Graph, a0: Iterable[int], r: int, d: int | None = None) -> BoundReport:
    """Run the process and evaluate the bound with ``d`` = degeneracy of ``g``.

    ``d`` may be overridden upward (a weaker witnessed parameter); the bound
    must still hold. The process is run even when r <= d so the report shows
    what actually happened.
    """
    d = _resolve_d(g, d)
    return report_from_trace(run(g, vertex_set(g, a0), r), d)


def check_runtime(g: Graph, a0: Iterable[int], r: int, d: int | None = None) -> bool:
    d = _resolve_d(g, d)
    if r <= d:
        raise NotApplicableError(f"running-time bound needs r > d, got r={r}, d={d}")
    trace = run(g, vertex_set(g, a0), r)
    return runtime_holds(len(trace.a0), trace.tau, d, r)


def min_perc_lower_bound(n: int, d: int, r: int) -> Fraction:
    """n (r - d) / r; non-positive (vacuous) when r <= d."""
    if n < 0:
        raise ParameterError("n must be non-negative")
    if r < 1:
        raise ParameterError("r must be >= 1")
    return Fraction(n * (r - d), r)


def forest_bound_check(a0_size: int, af_size: int, r: int) -> bool:
    """|A0| <= |A_f| <= r/(r-1) |A0| for forests."""
    if r < 2:
        raise ParameterError(f"forest bound needs r >= 2, got {r}")
    return a0_size <= af_size and (r - 1) * af_size <= r * a0_size

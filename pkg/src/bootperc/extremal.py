"""Family of d-degenerate graphs whose final infected set nearly meets the
upper bound ``r/(r-d) * |A0|``.

Layout: hub set H = 0..d-1, then for each i a block U_i of d vertices
followed by a block I_i of r-d vertices. Every I_i vertex is joined to all of
U_i and every H vertex to all of every U_i; nothing else. The initial set is
H together with all I_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .degeneracy import compute_ordering
from .errors import CertificationError, ParameterError
from .graph import Graph
from .percolation import run


@dataclass(frozen=True)
class ExtremalParams:
    d: int
    r: int
    k: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ParameterError(f"d must be >= 1, got {self.d}")
        if self.r < 2:
            raise ParameterError(f"r must be >= 2, got {self.r}")
        if self.r <= self.d:
            raise ParameterError(f"construction needs r > d (blocks of size r-d), got r={self.r}, d={self.d}")
        if self.k < 1:
            raise ParameterError(f"k must be >= 1, got {self.k}")

    @property
    def n(self) -> int:
        return self.d + self.k * self.r

    @property
    def a0_size(self) -> int:
        return self.d + self.k * (self.r - self.d)


def blocks(p: ExtremalParams) -> tuple[range, list[tuple[range, range]]]:
    """Return H and the list of (U_i, I_i) index ranges."""
    hub = range(p.d)
    pairs = []
    start = p.d
    for _ in range(p.k):
        u = range(start, start + p.d)
        i = range(start + p.d, start + p.r)
        pairs.append((u, i))
        start += p.r
    return hub, pairs


def build_extremal(p: ExtremalParams) -> tuple[Graph, frozenset[int]]:
    hub, pairs = blocks(p)
    edges = []
    a0 = set(hub)
    for u_block, i_block in pairs:
        edges.extend((x, u) for x in i_block for u in u_block)
        edges.extend((h, u) for h in hub for u in u_block)
        a0.update(i_block)
    return Graph.from_edges(p.n, edges), frozenset(a0)


def extremal_ratio(p: ExtremalParams) -> Fraction:
    """(|A_f| - |A0|) / |A0| for the construction, i.e. kd / (d + k(r-d))."""
    return Fraction(p.k * p.d, p.d + p.k * (p.r - p.d))


def limit_ratio(d: int, r: int) -> Fraction:
    """Value approached by :func:`extremal_ratio` as k grows."""
    return Fraction(d, r - d)


@dataclass(frozen=True)
class ExtremalCertificate:
    params: ExtremalParams
    n: int
    m: int
    degeneracy: int
    a0_size: int
    af_size: int
    tau: int
    ratio: Fraction

    def is_sharp(self, eps: Fraction) -> bool:
        """|A_f| >= (1 - eps) * r/(r-d) * |A0|, compared exactly."""
        d, r = self.params.d, self.params.r
        return self.af_size * (r - d) >= (1 - eps) * r * self.a0_size

    def to_json(self) -> dict:
        return {
            "d": self.params.d,
            "r": self.params.r,
            "k": self.params.k,
            "n": self.n,
            "m": self.m,
            "degeneracy": self.degeneracy,
            "a0_size": self.a0_size,
            "af_size": self.af_size,
            "tau": self.tau,
            "ratio": str(self.ratio),
        }


def certify_extremal(p: ExtremalParams) -> ExtremalCertificate:
    """Build the graph and check its claimed properties; raise on the first
    failing clause (a: degeneracy, b: full infection, c: ratio, d: tau)."""
    g, a0 = build_extremal(p)
    d_measured = compute_ordering(g).d
    if d_measured != p.d:
        raise CertificationError("a", f"degeneracy {d_measured} != {p.d}")
    trace = run(g, a0, p.r)
    af = len(trace.a_f)
    if af != g.n or af != p.d + p.k * p.r:
        raise CertificationError("b", f"|A_f| = {af}, expected {p.d + p.k * p.r} = n")
    ratio = Fraction(af - len(a0), len(a0))
    if ratio != extremal_ratio(p):
        raise CertificationError("c", f"measured ratio {ratio} != {extremal_ratio(p)}")
    if trace.tau != 1:
        raise CertificationError("d", f"tau = {trace.tau}, expected 1")
    return ExtremalCertificate(p, g.n, g.m, d_measured, len(a0), af, trace.tau, ratio)

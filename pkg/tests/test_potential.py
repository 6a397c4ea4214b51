import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bootperc.degeneracy import DegeneracyOrdering, compute_ordering
from bootperc.errors import NotApplicableError, StructuralError
from bootperc.extremal import ExtremalParams, build_extremal
from bootperc.graph import complete, gnp, path, random_tree
from bootperc.percolation import run
from bootperc.potential import (
    PotentialTrace,
    check_potential_invariants,
    compute_potential_trace,
    reference_potential_trace,
    verify_claim,
)

from conftest import graph_and_subset


def test_p3_hand_computed(p3):
    ordering = DegeneracyOrdering.from_order(p3, [2, 1, 0])
    trace = run(p3, {0, 2}, 2)
    pt = compute_potential_trace(p3, ordering, trace)
    assert pt.psi == (1, 0)
    assert pt.drops == [1]
    assert verify_claim(pt)


def test_empty_a0():
    g = gnp(20, 0.3, 1)
    o = compute_ordering(g)
    pt = compute_potential_trace(g, o, run(g, set(), o.d + 1))
    assert pt.psi == (0,)
    assert verify_claim(pt)


def test_extremal_d1_r2_k2():
    g, a0 = build_extremal(ExtremalParams(1, 2, 2))
    o = compute_ordering(g)
    trace = run(g, a0, 2)
    pt = compute_potential_trace(g, o, trace)
    assert pt.psi[0] <= 1 * len(a0) == 3
    assert pt.psi[-1] == 0
    assert len(pt.psi) == g.n - len(a0) + 1
    assert verify_claim(pt)


def test_claim_refuses_r_not_above_d():
    pt = PotentialTrace((0,), d_used=2, r=2, a0_size=0)
    with pytest.raises(NotApplicableError):
        verify_claim(pt)


def test_claim_detects_small_drop():
    assert not verify_claim(PotentialTrace((5, 4, 1), d_used=1, r=3, a0_size=5))


def test_mismatched_ordering():
    g = path(4)
    bad = DegeneracyOrdering.from_order(path(3), [0, 1, 2])
    with pytest.raises(StructuralError):
        compute_potential_trace(g, bad, run(g, {0}, 1))


def test_foreign_trace():
    trace = run(path(6), {0}, 1)
    g = path(3)
    with pytest.raises(StructuralError):
        compute_potential_trace(g, compute_ordering(g), trace)


@pytest.mark.parametrize("seed", range(25))
def test_claim_with_r_d_plus_3(seed):
    g = gnp(60, 0.08, seed)
    o = compute_ordering(g)
    r = o.d + 3
    a0 = random.Random(seed).sample(range(60), 30)
    pt = compute_potential_trace(g, o, run(g, a0, r))
    assert all(x >= 3 for x in pt.drops)


@settings(max_examples=200, deadline=None)
@given(graph_and_subset(max_n=12), st.integers(1, 4))
def test_incremental_matches_recount(ga, extra):
    g, a0 = ga
    o = compute_ordering(g)
    trace = run(g, a0, o.d + extra)
    fast = compute_potential_trace(g, o, trace)
    assert fast == reference_potential_trace(g, o, trace)
    check_potential_invariants(fast, len(trace.a_f))
    assert verify_claim(fast)


@settings(max_examples=150, deadline=None)
@given(graph_and_subset(max_n=10), st.randoms(use_true_random=False), st.integers(1, 3))
def test_claim_holds_for_any_ordering(ga, rnd, extra):
    # a non-optimal ordering witnesses a larger d; the drop r - d must still hold
    g, a0 = ga
    order = list(range(g.n))
    rnd.shuffle(order)
    o = DegeneracyOrdering.from_order(g, order)
    trace = run(g, a0, o.d + extra)
    pt = compute_potential_trace(g, o, trace)
    assert pt == reference_potential_trace(g, o, trace)
    check_potential_invariants(pt, len(trace.a_f))
    assert verify_claim(pt)


@pytest.mark.parametrize("seed", range(20))
def test_zero_potential_stops_process(seed):
    g = random_tree(40, seed)
    o = compute_ordering(g)
    a0 = random.Random(seed).sample(range(40), 15)
    pt = compute_potential_trace(g, o, run(g, a0, 2))
    zeros = [i for i, x in enumerate(pt.psi) if x == 0]
    assert zeros in ([], [len(pt.psi) - 1])


def test_json_not_applicable():
    g = complete(4)
    pt = compute_potential_trace(g, compute_ordering(g), run(g, {0, 1}, 2))
    assert pt.to_json()["claim_holds"] is None

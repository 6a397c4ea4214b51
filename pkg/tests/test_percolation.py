import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bootperc.errors import ParameterError
from bootperc.extremal import ExtremalParams, build_extremal
from bootperc.graph import Graph, complete, cycle, gnp, path, star
from bootperc.percolation import check_trace, is_minimal_percolating, percolates, run

from conftest import graph_and_subset, graphs, naive_final_set


class TestRun:
    def test_p3_endpoints(self, p3):
        t = run(p3, {0, 2}, 2)
        assert t.a_f == {0, 1, 2}
        assert t.tau == 1
        assert t.rounds == ((1,),)
        assert t.infection_order == [(1, 1)]

    @pytest.mark.parametrize("r", [1, 2, 5])
    def test_empty_a0(self, r):
        t = run(complete(5), set(), r)
        assert t.a_f == frozenset() and t.tau == 0

    def test_full_a0(self):
        t = run(cycle(6), range(6), 3)
        assert t.a_f == frozenset(range(6)) and t.tau == 0

    def test_extremal_d1_r2_k1(self):
        g, a0 = build_extremal(ExtremalParams(1, 2, 1))
        t = run(g, a0, 2)
        assert len(t.a_f) == 3 and t.tau == 1

    def test_path_r1_takes_many_rounds(self):
        t = run(path(6), {0}, 1)
        assert t.rounds == ((1,), (2,), (3,), (4,), (5,))
        assert t.tau == 5

    def test_same_round_ascending(self):
        t = run(star(6), {0}, 1)
        assert t.rounds == ((1, 2, 3, 4, 5),)

    def test_synchronous_not_cascading_within_round(self):
        # on P4 with r=1 from {0}: vertex 2 must wait for round 2
        t = run(path(4), {0}, 1)
        assert t.infection_order == [(1, 1), (2, 2), (3, 3)]

    def test_bad_r(self, p3):
        with pytest.raises(ParameterError):
            run(p3, {0}, 0)

    def test_bad_vertex(self, p3):
        with pytest.raises(ParameterError):
            run(p3, {3}, 1)

    def test_json(self, p3):
        assert run(p3, [0, 2], 2).to_json() == {
            "r": 2, "a0": [0, 2], "rounds": [[1]], "tau": 1, "af_size": 3
        }

    @settings(max_examples=200)
    @given(graph_and_subset(max_n=12), st.integers(1, 5))
    def test_matches_literal_recurrence(self, ga, r):
        g, a0 = ga
        t = run(g, a0, r)
        assert t.a_f == naive_final_set(g, a0, r)
        check_trace(g, t)
        assert t.tau <= len(t.a_f - t.a0)
        assert t.tau <= g.n

    @settings(max_examples=100)
    @given(graph_and_subset(max_n=12), st.integers(1, 5))
    def test_low_degree_never_infected(self, ga, r):
        g, a0 = ga
        t = run(g, a0, r)
        for v in t.a_f - t.a0:
            assert g.degree(v) >= r

    @settings(max_examples=150)
    @given(graphs(max_n=12), st.data())
    def test_monotone_in_a0(self, g, data):
        if g.n == 0:
            return
        big = data.draw(st.frozensets(st.integers(0, g.n - 1)))
        small = data.draw(st.frozensets(st.sampled_from(sorted(big)))) if big else frozenset()
        r = data.draw(st.integers(1, 4))
        assert run(g, small, r).a_f <= run(g, big, r).a_f

    @settings(max_examples=150)
    @given(graph_and_subset(max_n=12), st.integers(1, 4), st.integers(0, 3))
    def test_monotone_in_r(self, ga, r, extra):
        g, a0 = ga
        assert run(g, a0, r + extra).a_f <= run(g, a0, r).a_f

    def test_large_graph_invariants(self):
        g = gnp(300, 0.03, 4)
        t = run(g, range(0, 300, 7), 2)
        check_trace(g, t)


class TestPercolates:
    def test_p3(self, p3):
        assert percolates(p3, {0, 2}, 2)
        assert not percolates(p3, {1}, 2)

    @pytest.mark.parametrize("pair", [(0, 1), (0, 3), (2, 3)])
    def test_k4_pairs(self, pair):
        assert percolates(complete(4), pair, 2)

    def test_empty_graph(self):
        assert percolates(Graph(0, ()), set(), 1)


class TestMinimal:
    def test_p3_endpoints(self, p3):
        assert is_minimal_percolating(p3, {0, 2}, 2)

    def test_p3_all(self, p3):
        assert not is_minimal_percolating(p3, {0, 1, 2}, 2)

    def test_star_leaves(self):
        assert is_minimal_percolating(star(4), {1, 2, 3}, 2)

    def test_non_percolating(self, p3):
        assert not is_minimal_percolating(p3, {0}, 2)

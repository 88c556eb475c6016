import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from upperchrom.core import InvalidInstance, upper_chromatic_2uniform, verify_host_tree
from upperchrom.approx import build_line_hypergraph
from upperchrom.exact import (
    CnfFormula,
    exact_decrement_hypertree,
    exact_k_transversal,
    exact_transversal,
    exact_upper_chromatic,
)
from upperchrom.gen import (
    gen_prop3_lower_family,
    gen_prop3_upper_family,
    gen_random_hypergraph,
    gen_random_hyperstar,
    gen_random_hypertree,
    gen_sat_gadget,
    gen_single_edge,
    prufer_to_lines,
)


def test_single_edge():
    assert gen_single_edge(2).edges == (frozenset({0, 1}),)
    assert exact_upper_chromatic(gen_single_edge(5)).k == 4
    assert exact_upper_chromatic(gen_single_edge(12)).dec == 1
    with pytest.raises(InvalidInstance):
        gen_single_edge(1)


class TestUpperFamily:
    def test_count(self):
        assert gen_prop3_upper_family(4, 2).m == 2
        assert gen_prop3_upper_family(7, 3).m == math.comb(3, 2) * 4

    def test_n5_s2(self):
        H = gen_prop3_upper_family(5, 2)
        res = exact_upper_chromatic(H)
        assert res.dec == exact_k_transversal(H, 2)[0] - 1 == 1
        assert res.k == 5 - 2 + 1

    def test_n6_s3(self):
        H = gen_prop3_upper_family(6, 3)
        tau2, S = exact_k_transversal(H, 2)
        assert S == {0, 1, 2}
        assert exact_upper_chromatic(H).dec == tau2 - 1

    def test_bounds(self):
        for n, s in ((5, 1), (5, 4)):
            with pytest.raises(InvalidInstance):
                gen_prop3_upper_family(n, s)


class TestLowerFamily:
    def test_k1(self):
        H, t = gen_prop3_lower_family(1)
        assert H.n == 4 and H.m == 2 and verify_host_tree(H, t)

    def test_k2(self):
        H, t = gen_prop3_lower_family(2)
        assert exact_k_transversal(H, 2)[0] == 4
        assert exact_decrement_hypertree(H, t)[0] == 2

    @pytest.mark.parametrize("k", range(1, 9))
    def test_line_oracle(self, k):
        H, t = gen_prop3_lower_family(k)
        assert exact_decrement_hypertree(H, t)[0] == k


class TestGadget:
    def test_positive_clause(self):
        g = gen_sat_gadget(CnfFormula(3, ((1, 2, 3),)))
        H = g.hypergraph
        assert H.n == 10 and H.m == 4
        assert g.roles == (("variable", 1), ("variable", 2), ("variable", 3), ("clause", 1))
        names = {g.names[x] for x in H.edges[3]}
        assert names == {"c*", "x'1", "t1", "x'2", "t2", "x'3", "t3"}
        assert verify_host_tree(H, g.tree)
        expected = set()
        for i in (1, 2, 3):
            xp = g.vertex(f"x'{i}")
            expected |= {(0, xp), (xp, g.vertex(f"t{i}")), (xp, g.vertex(f"f{i}"))}
        assert set(g.tree.lines) == expected

    def test_negative_literals(self):
        g = gen_sat_gadget(CnfFormula(3, ((-1, 2, -3),)))
        names = {g.names[x] for x in g.hypergraph.edges[3]}
        assert names == {"c*", "x'1", "f1", "x'2", "t2", "x'3", "f3"}

    def test_vertex_numbering(self):
        g = gen_sat_gadget(CnfFormula(2, ()))
        assert g.names == ("c*", "x'1", "t1", "f1", "x'2", "t2", "f2")

    def test_satisfiable_v3(self):
        g = gen_sat_gadget(CnfFormula(3, ((1, 2, 3), (-1, 2, 3))))
        res = exact_upper_chromatic(g.hypergraph)
        assert (res.dec, res.k) == (3, 7)

    def test_line_hypergraph_of_gadget(self):
        g = gen_sat_gadget(CnfFormula(4, ((1, 2, -3), (-2, 3, 4))))
        L = build_line_hypergraph(g.hypergraph, g.tree)
        assert exact_transversal(L.hypergraph)[0] == 4


def test_prufer_decoding():
    # every sequence of length n-2 decodes to a distinct tree
    n = 5
    trees = {tuple(sorted(prufer_to_lines(seq, n))) for seq in itertools.product(range(n), repeat=n - 2)}
    assert len(trees) == n ** (n - 2)


class TestRandom:
    def test_hypertree_deterministic(self):
        assert gen_random_hypertree(9, 7, 4, 42) == gen_random_hypertree(9, 7, 4, 42)
        assert gen_random_hypertree(9, 7, 4, 42) != gen_random_hypertree(9, 7, 4, 43)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(2, 12), st.integers(0, 12), st.integers(2, 6), st.integers(0, 10**6))
    def test_hypertree_valid(self, n, m, size, seed):
        H, t = gen_random_hypertree(n, m, size, seed)
        assert verify_host_tree(H, t) and H.m == m
        assert all(2 <= len(e) <= size for e in H.edges)

    def test_hypertree_n10_m10_line_identity(self):
        H, t = gen_random_hypertree(10, 10, 5, 5)
        assert exact_decrement_hypertree(H, t)[0] == exact_upper_chromatic(H).dec

    def test_hypergraph_reproducible(self):
        assert gen_random_hypergraph(5, 3, 2, 3, 9) == gen_random_hypergraph(5, 3, 2, 3, 9)

    def test_hypergraph_sandwich(self):
        H = gen_random_hypergraph(10, 8, 2, 5, 1)
        tau2 = exact_k_transversal(H, 2)[0]
        dec = exact_upper_chromatic(H).dec
        assert tau2 / 2 <= dec <= tau2 - 1

    def test_complete_graph(self):
        H = gen_random_hypergraph(4, 6, 2, 2, 0)
        assert len(set(H.edges)) == 6
        assert upper_chromatic_2uniform(H) == 1 == exact_upper_chromatic(H).k

    def test_too_many_edges(self):
        with pytest.raises(InvalidInstance):
            gen_random_hypergraph(4, 7, 2, 2, 0)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 12), st.integers(1, 10), st.integers(0, 10**6))
    def test_hyperstar(self, n, m, seed):
        H = gen_random_hyperstar(n, m, 5, seed)
        assert frozenset.intersection(*H.edges)

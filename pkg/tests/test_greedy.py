import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from upperchrom.core import DemandVector, Hypergraph, InfeasibleDemand, InvalidInstance, verify_multitransversal
from upperchrom.exact import exact_multitransversal, exact_transversal
from upperchrom.gen import gen_prop3_lower_family, gen_random_hypergraph
from upperchrom.greedy import (
    greedy_k_transversal,
    greedy_multitransversal,
    greedy_transversal,
    harmonic,
    usefulness,
)

import brute


def test_harmonic():
    assert harmonic(0) == 0
    assert harmonic(3) == Fraction(11, 6)
    for W in range(1, 40):
        assert harmonic(W) < 1 + math.log(W) + 1e-12


class TestUsefulness:
    H = Hypergraph(3, ({0, 1, 2},))

    def test_unmet(self):
        assert usefulness(self.H, DemandVector((2,)), set(), 0) == 1

    def test_met(self):
        assert usefulness(self.H, DemandVector((2,)), {1, 2}, 0) == 0

    def test_membership(self):
        H = Hypergraph(5, ({0, 1, 2}, {0, 3, 4}))
        assert usefulness(H, DemandVector((1, 1)), set(), 0) == 2

    def test_selected_vertex(self):
        with pytest.raises(InvalidInstance):
            usefulness(self.H, DemandVector((2,)), {0}, 0)


def test_forced_size():
    S = greedy_multitransversal(Hypergraph(3, ({0, 1, 2},)), DemandVector((2,)))
    assert len(S) == 2 and S <= {0, 1, 2}


def test_triangle_of_triples():
    H = Hypergraph(6, ({0, 1, 2}, {2, 3, 4}, {4, 5, 0}))
    S = greedy_multitransversal(H, DemandVector((1, 1, 1)))
    assert S == {0, 2}
    assert brute.min_transversal(6, H.edges) == 2


def test_lower_family_k2():
    H, _ = gen_prop3_lower_family(2)
    d = DemandVector.uniform(H, 2)
    S = greedy_multitransversal(H, d)
    assert verify_multitransversal(H, d, S)
    assert len(S) <= (1 + math.log(8)) * 4
    assert exact_multitransversal(H, d)[0] == 4


def test_k_transversal_lower_family_k3():
    H, _ = gen_prop3_lower_family(3)
    S = greedy_k_transversal(H, 2)
    assert verify_multitransversal(H, DemandVector.uniform(H, 2), S)
    assert len(S) <= (1 + math.log(12)) * 6


def test_k_transversal_specializations():
    H = Hypergraph(3, ({0, 1, 2},))
    assert len(greedy_k_transversal(H, 2)) == 2
    with pytest.raises(InvalidInstance):
        greedy_k_transversal(H, 4)


def test_transversal():
    assert greedy_transversal(Hypergraph(3, ({0, 1}, {0, 2}))) == {0}
    assert greedy_transversal(Hypergraph(3, ())) == frozenset()


def test_random_transversal_ratio():
    H = gen_random_hypergraph(10, 15, 2, 4, 7)
    S = greedy_transversal(H)
    tau = brute.min_transversal(10, H.edges)
    assert tau == exact_transversal(H)[0]
    assert len(S) <= (1 + math.log(15)) * tau


def test_infeasible_rejected():
    with pytest.raises(InfeasibleDemand):
        greedy_multitransversal(Hypergraph(3, ({0, 1},)), DemandVector((3,)))


@st.composite
def demand_instances(draw):
    n = draw(st.integers(2, 12))
    m = draw(st.integers(0, min(12, 2**n - n - 1)))
    H = gen_random_hypergraph(n, m, 2, min(n, 6), draw(st.integers(0, 10**6)))
    w = tuple(draw(st.integers(1, min(3, len(e)))) for e in H.edges)
    return H, DemandVector(w)


@settings(max_examples=80, deadline=None)
@given(demand_instances())
def test_ratio_and_feasibility(inst):
    H, d = inst
    S = greedy_multitransversal(H, d)
    assert verify_multitransversal(H, d, S)
    opt, _ = exact_multitransversal(H, d)
    assert len(S) <= harmonic(d.W) * opt
    assert len(S) <= min(H.n, d.W)
    assert greedy_multitransversal(H, d) == S

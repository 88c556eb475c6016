"""Greedy selection of multiple transversals with pairwise distinct vertices.

A vertex's *usefulness* is the number of edges containing it whose demand
is still unmet.  The greedy repeatedly takes an unselected vertex of
maximum usefulness (smallest id on ties) until every usefulness is zero.
The result is within a factor ``H_W = 1 + 1/2 + ... + 1/W`` of the optimum,
``W`` being the total demand.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .core import DemandVector, Hypergraph, InvalidInstance, check_demands


def harmonic(W: int) -> Fraction:
    """Exact ``sum_{i=1..W} 1/i``; zero for ``W = 0``."""
    return sum((Fraction(1, i) for i in range(1, W + 1)), Fraction(0))


def usefulness(H: Hypergraph, d: DemandVector, Y: Iterable[int], x: int) -> int:
    Y = frozenset(Y)
    if x in Y:
        raise InvalidInstance(f"vertex {x} is already selected")
    return sum(1 for i in H.incidence[x] if d.w[i] - len(H.edges[i] & Y) > 0)


def greedy_multitransversal(H: Hypergraph, d: DemandVector) -> frozenset:
    """Greedy set ``S`` with ``|S & E_i| >= w_i`` for every edge ``i``."""
    check_demands(H, d)
    residual = list(d.w)
    # usefulness of every unselected vertex, kept up to date incrementally
    useful = [len(H.incidence[x]) for x in range(H.n)]
    selected = [False] * H.n
    chosen = []
    while True:
        best, best_u = -1, 0
        for x in range(H.n):
            if not selected[x] and useful[x] > best_u:
                best, best_u = x, useful[x]
        if best_u == 0:
            break
        selected[best] = True
        chosen.append(best)
        for i in H.incidence[best]:
            if residual[i] == 0:
                continue
            residual[i] -= 1
            if residual[i] == 0:
                for y in H.edges[i]:
                    if not selected[y]:
                        useful[y] -= 1
    return frozenset(chosen)


def greedy_k_transversal(H: Hypergraph, k: int) -> frozenset:
    if k < 1:
        raise InvalidInstance("k must be positive")
    for i, e in enumerate(H.edges):
        if len(e) < k:
            raise InvalidInstance(f"k={k} exceeds the size of edge {i}")
    return greedy_multitransversal(H, DemandVector.uniform(H, k))


def greedy_transversal(H: Hypergraph) -> frozenset:
    return greedy_k_transversal(H, 1)

"""Approximation pipelines for the decrement ``n - upper chromatic number``.

* general hypergraphs: greedy 2-transversal, colored as one class
  (ratio ``2 + 2 ln 2m``);
* hypertrees: greedy transversal of the line hypergraph, colored by the
  components of the chosen lines (ratio ``1 + ln m``);
* hyperstars: greedy transversal of the center-stripped hypergraph, its
  complement kept as singletons (ratio ``1 + ln m``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import (
    CColoring,
    DemandVector,
    Hypergraph,
    HostTree,
    InvalidInstance,
    connected_components,
    hyperstar_center,
    host_tree_problem,
    is_independent,
    verify_multitransversal,
)
from .greedy import greedy_k_transversal, greedy_transversal


@dataclass(frozen=True)
class ApproxReport:
    """Output of one pipeline run.

    ``witness`` is the set the coloring was built from: vertices for the
    general and hyperstar pipelines, host-tree lines for the hypertree one.
    """

    algorithm: str
    coloring: CColoring
    witness: frozenset
    bound: float
    oracle: Optional[int] = None

    @property
    def decrement(self) -> int:
        return self.coloring.n - self.coloring.k


@dataclass(frozen=True)
class LineHypergraph:
    """Hypergraph on host-tree lines; edge ``i`` holds the lines inside ``E_i``.

    Vertex ``j`` of :attr:`hypergraph` is the line ``lines[j]``.
    """

    hypergraph: Hypergraph
    lines: tuple

    def line_ids(self, pairs: Iterable) -> frozenset:
        index = {l: j for j, l in enumerate(self.lines)}
        try:
            return frozenset(index[(min(u, v), max(u, v))] for u, v in pairs)
        except KeyError as exc:
            raise InvalidInstance(f"{exc.args[0]} is not a host-tree line") from None


def general_bound(m: int) -> float:
    return 2 + 2 * math.log(2 * m)


def hypertree_bound(m: int) -> float:
    return 1 + math.log(m) if m else 1.0


def coloring_from_2transversal(H: Hypergraph, S: Iterable[int]) -> CColoring:
    """``S`` as one color class, every other vertex on its own."""
    S = frozenset(S)
    if not verify_multitransversal(H, DemandVector.uniform(H, 2), S):
        raise InvalidInstance("set is not a 2-transversal")
    anchor = min(S) if S else None
    return CColoring(tuple(anchor if x in S else x for x in range(H.n)))


def approx_decrement_general(H: Hypergraph) -> ApproxReport:
    if H.m == 0:
        raise InvalidInstance("general pipeline needs at least one edge")
    T = greedy_k_transversal(H, 2)
    return ApproxReport("general", coloring_from_2transversal(H, T), T, general_bound(H.m))


def build_line_hypergraph(H: Hypergraph, t: HostTree) -> LineHypergraph:
    problem = host_tree_problem(H, t)
    if problem:
        raise InvalidInstance(problem)
    edges = []
    for e in H.edges:
        edges.append(frozenset(j for j, (u, v) in enumerate(t.lines) if u in e and v in e))
    # every edge induces a subtree with >= 2 vertices, so no image is empty
    return LineHypergraph(Hypergraph(len(t.lines), tuple(edges), relaxed=True), t.lines)


def coloring_from_line_set(H: Hypergraph, t: HostTree, T: Iterable) -> CColoring:
    """Color classes are the components of ``(X, T)`` for a line set ``T``."""
    L = build_line_hypergraph(H, t)
    ids = L.line_ids(T)
    for i, e in enumerate(L.hypergraph.edges):
        if not e & ids:
            raise InvalidInstance(f"line set misses edge {i}; the coloring would leave it rainbow")
    comp_of = [0] * H.n
    for c, comp in enumerate(connected_components(H.n, (L.lines[j] for j in ids))):
        for x in comp:
            comp_of[x] = c
    return CColoring(tuple(comp_of))


def approx_decrement_hypertree(H: Hypergraph, t: HostTree) -> ApproxReport:
    L = build_line_hypergraph(H, t)
    ids = greedy_transversal(L.hypergraph)
    lines = frozenset(L.lines[j] for j in ids)
    return ApproxReport("hypertree", coloring_from_line_set(H, t, lines), lines,
                        hypertree_bound(H.m))


def strip_center(H: Hypergraph, relaxed: bool = True) -> tuple:
    """Remove the hyperstar center from the vertex set and every edge.

    Returns ``(H_minus, center, mapping)`` where ``mapping[y]`` is the
    original id of vertex ``y`` of ``H_minus``.  With ``relaxed=False`` a
    resulting singleton edge is an error.
    """
    c = hyperstar_center(H) if H.m else None
    if c is None:
        raise InvalidInstance("not a hyperstar: no vertex lies in every edge")
    mapping = tuple(x for x in range(H.n) if x != c)
    new_id = {x: y for y, x in enumerate(mapping)}
    edges = tuple(frozenset(new_id[x] for x in e if x != c) for e in H.edges)
    return Hypergraph(H.n - 1, edges, relaxed=relaxed), c, mapping


def hyperstar_coloring_from_independent_set(H: Hypergraph, S: Iterable[int]) -> CColoring:
    """``X - S`` as one class (it holds the center), each ``s`` in ``S`` alone."""
    S = frozenset(S)
    H_minus, c, mapping = strip_center(H)
    if c in S:
        raise InvalidInstance("independent set must exclude the center")
    new_id = {x: y for y, x in enumerate(mapping)}
    if not is_independent(H_minus, (new_id[x] for x in S)):
        raise InvalidInstance("set is not independent in the center-stripped hypergraph")
    return CColoring(tuple(x if x in S else c for x in range(H.n)))


def approx_decrement_hyperstar(H: Hypergraph) -> ApproxReport:
    H_minus, c, mapping = strip_center(H)
    T = greedy_transversal(H_minus)
    S = frozenset(mapping[y] for y in range(H_minus.n) if y not in T)
    coloring = hyperstar_coloring_from_independent_set(H, S)
    return ApproxReport("hyperstar", coloring, frozenset(mapping[y] for y in T),
                        hypertree_bound(H.m))

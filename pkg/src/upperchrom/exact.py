"""Brute-force oracles for small instances.

Subset oracles scan candidates by increasing (or, for independence,
decreasing) cardinality in lexicographic order, so the witness returned is
the lexicographically smallest optimum.  Every oracle refuses instances
above a hard size limit by raising :class:`SizeLimitExceeded`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .core import (
    CColoring,
    DemandVector,
    Hypergraph,
    HostTree,
    InvalidInstance,
    check_demands,
    host_tree_problem,
)
from .greedy import greedy_k_transversal

SUBSET_LIMIT = 24
PARTITION_LIMIT = 12
LINE_LIMIT = 25
CNF_LIMIT = 20


class SizeLimitExceeded(RuntimeError):
    """The instance is too large for exhaustive search."""


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF over variables ``1..v``; literal ``-i`` is the negation of ``x_i``.

    Each clause uses three distinct variables.
    """

    v: int
    clauses: tuple

    def __post_init__(self):
        clauses = tuple(tuple(int(l) for l in c) for c in self.clauses)
        for j, c in enumerate(clauses):
            if len(c) != 3:
                raise InvalidInstance(f"clause {j + 1} has {len(c)} literals, expected 3")
            vars_ = {abs(l) for l in c}
            if len(vars_) != 3:
                raise InvalidInstance(f"clause {j + 1} repeats a variable: {c}")
            if any(l == 0 or abs(l) > self.v for l in c):
                raise InvalidInstance(f"clause {j + 1} has a literal outside 1..{self.v}")
        object.__setattr__(self, "clauses", clauses)


@dataclass(frozen=True)
class ChromaticResult:
    k: int
    coloring: CColoring
    dec: int


def _guard(size, limit, what):
    if size > limit:
        raise SizeLimitExceeded(f"{what}: {size} exceeds the exhaustive-search limit {limit}")


def _min_subset(n, masks, demands):
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            s = 0
            for x in combo:
                s |= 1 << x
            if all((s & e).bit_count() >= w for e, w in zip(masks, demands)):
                return size, frozenset(combo)
    raise AssertionError("unreachable for feasible demands")


def exact_multitransversal(H: Hypergraph, d: DemandVector, limit: int = SUBSET_LIMIT):
    """Minimum ``|S|`` with ``|S & E_i| >= w_i``; returns ``(size, witness)``."""
    _guard(H.n, limit, "vertices")
    check_demands(H, d)
    return _min_subset(H.n, H.masks, d.w)


def exact_k_transversal(H: Hypergraph, k: int, limit: int = SUBSET_LIMIT):
    for i, e in enumerate(H.edges):
        if len(e) < k:
            raise InvalidInstance(f"k={k} exceeds the size of edge {i}")
    return exact_multitransversal(H, DemandVector.uniform(H, k), limit)


def exact_transversal(H: Hypergraph, limit: int = SUBSET_LIMIT):
    _guard(H.n, limit, "vertices")
    return _min_subset(H.n, H.masks, (1,) * H.m)


def exact_independence(H: Hypergraph, limit: int = SUBSET_LIMIT):
    """Largest vertex set containing no edge entirely; ``(size, witness)``."""
    _guard(H.n, limit, "vertices")
    masks = H.masks
    for size in range(H.n, -1, -1):
        for combo in combinations(range(H.n), size):
            s = 0
            for x in combo:
                s |= 1 << x
            if all(s & e != e for e in masks):
                return size, frozenset(combo)
    raise AssertionError("the empty set is always independent")


def exact_upper_chromatic(H: Hypergraph, limit: int = PARTITION_LIMIT) -> ChromaticResult:
    """Maximum number of colors in a C-coloring, by pruned partition search.

    Vertices receive colors in restricted-growth order (vertex ``x`` gets
    an existing color or the next new one), which enumerates each set
    partition exactly once.  A branch is cut when an edge is completed
    rainbow, or when the reuses made so far plus a packing lower bound on
    the reuses still forced cannot beat the incumbent.  The search visits
    branches in lexicographic order, so the first optimum found is the
    lexicographically smallest normalized coloring.
    """
    _guard(H.n, limit, "vertices")
    n = H.n
    if H.m == 0:
        return ChromaticResult(n, CColoring(tuple(range(n))), 0)
    masks = H.masks
    closing = [[] for _ in range(n)]
    for e, mask in zip(H.edges, masks):
        closing[max(e)].append(mask)

    colors = [0] * n
    # vertices of each color as a bitmask, indexed by color - 1
    class_masks = []
    # the greedy 2-transversal coloring is achievable, so only strictly
    # better decrements than (its decrement + 1) need to be searched
    best = {"dec": len(greedy_k_transversal(H, 2)), "colors": None}

    def forced_reuses(assigned_mask):
        # Unsatisfied edges pairwise disjoint on their unassigned parts each
        # force a separate future reuse; greedy packing gives a lower bound.
        used = 0
        count = 0
        for mask in masks:
            rest = mask & ~assigned_mask
            if not rest:
                continue
            if _satisfied(mask & assigned_mask):
                continue
            if rest & used:
                continue
            used |= rest
            count += 1
        return count

    def _satisfied(part):
        for cm in class_masks:
            if (part & cm).bit_count() >= 2:
                return True
        return False

    def search(x, reuses, assigned_mask):
        if x == n:
            if reuses < best["dec"]:
                best["dec"] = reuses
                best["colors"] = tuple(colors)
            return
        k = len(class_masks)
        bit = 1 << x
        new_assigned = assigned_mask | bit
        for c in range(1, k + 2):
            extra = 0 if c == k + 1 else 1
            if reuses + extra >= best["dec"]:
                continue
            colors[x] = c
            if c == k + 1:
                class_masks.append(bit)
            else:
                class_masks[c - 1] |= bit
            ok = all(_satisfied(mask) for mask in closing[x])
            if ok and reuses + extra + forced_reuses(new_assigned) < best["dec"]:
                search(x + 1, reuses + extra, new_assigned)
            if c == k + 1:
                class_masks.pop()
            else:
                class_masks[c - 1] &= ~bit
        colors[x] = 0

    search(0, 0, 0)
    assert best["colors"] is not None
    coloring = CColoring(best["colors"])
    return ChromaticResult(coloring.k, coloring, n - coloring.k)


def exact_decrement_hypertree(H: Hypergraph, t: HostTree, limit: int = LINE_LIMIT):
    """Decrement of a hypertree as the transversal number of its line hypergraph.

    Returns ``(dec, witness lines)``.
    """
    from .approx import build_line_hypergraph

    _guard(H.n, limit, "vertices")
    problem = host_tree_problem(H, t)
    if problem:
        raise InvalidInstance(problem)
    L = build_line_hypergraph(H, t)
    size, witness = _min_subset(L.hypergraph.n, L.hypergraph.masks, (1,) * H.m)
    return size, frozenset(L.lines[j] for j in witness)


def _backtrack_sat(clauses, assignment):
    # clauses are lists of literals; simple DPLL with unit propagation
    for c in clauses:
        if all(assignment.get(abs(l)) == (l < 0) for l in c):
            return None
    pending = [c for c in clauses if not any(assignment.get(abs(l)) == (l > 0) for l in c)]
    if not pending:
        return dict(assignment)
    for c in pending:
        free = [l for l in c if abs(l) not in assignment]
        if len(free) == 1:
            lit = free[0]
            assignment[abs(lit)] = lit > 0
            res = _backtrack_sat(clauses, assignment)
            del assignment[abs(lit)]
            return res
    var = min(abs(l) for c in pending for l in c if abs(l) not in assignment)
    for value in (True, False):
        assignment[var] = value
        res = _backtrack_sat(clauses, assignment)
        del assignment[var]
        if res is not None:
            return res
    return None


def min_variable_deletion(f: CnfFormula, limit: int = CNF_LIMIT):
    """Fewest variables whose clauses must be dropped to leave a satisfiable formula.

    Deleting variable ``i`` removes every clause containing ``x_i`` or
    ``-x_i``.  Returns ``(count, witness variable set)`` with 1-based ids.
    """
    _guard(f.v, limit, "variables")
    for size in range(f.v + 1):
        for I in combinations(range(1, f.v + 1), size):
            rest = [c for c in f.clauses if not any(abs(l) in I for l in c)]
            if _backtrack_sat(rest, {}) is not None:
                return size, frozenset(I)
    raise AssertionError("deleting every variable leaves the empty formula")

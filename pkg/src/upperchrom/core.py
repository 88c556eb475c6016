"""Instance types and the elementary checks shared by every algorithm.

Vertices are the integers ``0 .. n-1``.  Every object here is immutable;
operations are plain functions over them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence


class InvalidInstance(ValueError):
    """Raised when an input violates a structural invariant."""


class InfeasibleDemand(InvalidInstance):
    """Some demand exceeds the size of its edge, so no solution exists."""


@dataclass(frozen=True)
class Hypergraph:
    """A vertex count plus an ordered list of vertex-subset edges.

    Edges must have at least two vertices.  ``relaxed`` hypergraphs also
    admit singleton edges; they only arise as auxiliary objects (the
    center-stripped hyperstar, the line hypergraph) fed to the exact
    oracles and the plain greedy transversal.
    """

    n: int
    edges: tuple
    relaxed: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInstance(f"negative vertex count {self.n}")
        edges = tuple(frozenset(e) for e in self.edges)
        min_size = 1 if self.relaxed else 2
        for i, e in enumerate(edges):
            for x in e:
                if not isinstance(x, int) or x < 0 or x >= self.n:
                    raise InvalidInstance(
                        f"edge {i}: vertex {x!r} out of range 0..{self.n - 1}")
            if len(e) < min_size:
                raise InvalidInstance(
                    f"edge {i} has {len(e)} distinct vertices, need >= {min_size}")
        object.__setattr__(self, "edges", edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple:
        """Edges as integer bitmasks, bit ``x`` set for vertex ``x``."""
        return tuple(to_mask(e) for e in self.edges)

    @cached_property
    def incidence(self) -> tuple:
        """``incidence[x]`` lists the indices of the edges containing ``x``."""
        inc = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for x in e:
                inc[x].append(i)
        return tuple(tuple(row) for row in inc)

    def sorted_edges(self) -> list:
        return [sorted(e) for e in self.edges]


@dataclass(frozen=True)
class HostTree:
    """Candidate host tree: ``n - 1`` unordered lines on ``0 .. n-1``.

    Lines are stored as ``(u, v)`` with ``u < v``, sorted; a line's id is
    its position in that order.  Tree-ness is checked by
    :func:`verify_host_tree`, not here.
    """

    n: int
    lines: tuple

    def __post_init__(self):
        norm = []
        for pair in self.lines:
            u, v = pair
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidInstance(f"bad line {pair!r} for n={self.n}")
            norm.append((min(u, v), max(u, v)))
        norm.sort()
        if len(set(norm)) != len(norm):
            raise InvalidInstance("duplicate line in host tree")
        if self.n >= 1 and len(norm) != self.n - 1:
            raise InvalidInstance(
                f"host tree on {self.n} vertices needs {self.n - 1} lines, got {len(norm)}")
        object.__setattr__(self, "lines", tuple(norm))

    @cached_property
    def adjacency(self) -> tuple:
        adj = [[] for _ in range(self.n)]
        for u, v in self.lines:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)


@dataclass(frozen=True)
class CColoring:
    """Colors per vertex, relabelled ``1..k`` in order of first appearance."""

    colors: tuple

    def __post_init__(self):
        object.__setattr__(self, "colors", normalize_colors(self.colors))

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def classes(self) -> list:
        out = [[] for _ in range(self.k)]
        for x, c in enumerate(self.colors):
            out[c - 1].append(x)
        return out


@dataclass(frozen=True)
class DemandVector:
    """Required intersection size ``w[i]`` for each edge ``i``."""

    w: tuple

    def __post_init__(self):
        w = tuple(int(x) for x in self.w)
        if any(x < 1 for x in w):
            raise InvalidInstance("demands must be positive integers")
        object.__setattr__(self, "w", w)

    @property
    def W(self) -> int:
        return sum(self.w)

    @classmethod
    def uniform(cls, H: Hypergraph, k: int) -> "DemandVector":
        return cls((k,) * H.m)


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for x in vertices:
        mask |= 1 << x
    return mask


def from_mask(mask: int) -> list:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return out


def normalize_colors(colors: Sequence) -> tuple:
    relabel = {}
    out = []
    for c in colors:
        if c not in relabel:
            relabel[c] = len(relabel) + 1
        out.append(relabel[c])
    return tuple(out)


def validate_hypergraph(edges: Iterable[Iterable[int]], n: int) -> Hypergraph:
    """Build a :class:`Hypergraph` from raw 0-based edge lists.

    Duplicate vertices inside an edge are collapsed first, so ``[0, 0, 1]``
    is the valid edge ``{0, 1}`` while ``[0, 0]`` is rejected.
    """
    return Hypergraph(n, tuple(frozenset(e) for e in edges))


def check_demands(H: Hypergraph, d: DemandVector) -> None:
    if len(d.w) != H.m:
        raise InvalidInstance(f"{len(d.w)} demands for {H.m} edges")
    for i, (w, e) in enumerate(zip(d.w, H.edges)):
        if w > len(e):
            raise InfeasibleDemand(f"edge {i} has {len(e)} vertices but demand {w}")


def verify_c_coloring(H: Hypergraph, c: CColoring) -> bool:
    """True iff every edge has two vertices of a common color."""
    if c.n != H.n:
        raise InvalidInstance(f"coloring has {c.n} entries, hypergraph has {H.n} vertices")
    colors = c.colors
    for e in H.edges:
        if len({colors[x] for x in e}) == len(e):
            return False
    return True


def decrement_of_coloring(c: CColoring) -> int:
    return c.n - c.k


def host_tree_problem(H: Hypergraph, t: HostTree) -> Optional[str]:
    """Describe why ``t`` is not a host tree of ``H``, or None if it is."""
    if t.n != H.n:
        return f"host tree has {t.n} vertices, hypergraph has {H.n}"
    if t.n == 0:
        return None
    # n-1 lines plus connectivity is equivalent to being a spanning tree
    seen = _component(t.adjacency, 0, None)
    if len(seen) != t.n:
        missing = min(set(range(t.n)) - seen)
        return f"lines are disconnected or contain a cycle (vertex {missing} unreachable from 0)"
    for i, e in enumerate(H.edges):
        start = min(e)
        if _component(t.adjacency, start, e) != e:
            return f"edge {i} {sorted(e)} does not induce a connected subtree"
    return None


def verify_host_tree(H: Hypergraph, t: HostTree) -> bool:
    return host_tree_problem(H, t) is None


def _component(adj, start, within) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen and (within is None or v in within):
                seen.add(v)
                queue.append(v)
    return seen


def monochromatic_lines(t: HostTree, c: CColoring) -> set:
    if c.n != t.n:
        raise InvalidInstance("coloring and host tree sizes differ")
    return {(u, v) for u, v in t.lines if c.colors[u] == c.colors[v]}


def is_connected_coloring(t: HostTree, c: CColoring) -> bool:
    """True iff every color class induces a connected subgraph of ``t``."""
    for cls in c.classes():
        if _component(t.adjacency, cls[0], set(cls)) != set(cls):
            return False
    return True


def hyperstar_center(H: Hypergraph) -> Optional[int]:
    """Smallest vertex lying in every edge, or None."""
    if H.m == 0:
        raise InvalidInstance("a hypergraph without edges has no meaningful center")
    common = frozenset.intersection(*H.edges)
    return min(common) if common else None


def connected_components(n: int, pairs: Iterable) -> list:
    """Components of the graph on ``0..n-1`` with the given lines (union-find)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def upper_chromatic_2uniform(H: Hypergraph) -> int:
    """Upper chromatic number of a graph: its number of connected components."""
    if any(len(e) != 2 for e in H.edges):
        raise InvalidInstance("upper_chromatic_2uniform needs every edge of size 2")
    return len(connected_components(H.n, (tuple(e) for e in H.edges)))


def verify_multitransversal(H: Hypergraph, d: DemandVector, S: Iterable[int]) -> bool:
    if len(d.w) != H.m:
        raise InvalidInstance(f"{len(d.w)} demands for {H.m} edges")
    S = frozenset(S)
    return all(len(e & S) >= w for e, w in zip(H.edges, d.w))


def is_transversal(H: Hypergraph, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return all(e & S for e in H.edges)


def is_independent(H: Hypergraph, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return not any(e <= S for e in H.edges)

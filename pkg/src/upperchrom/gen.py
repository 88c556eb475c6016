"""Instance generators: tight families, the 3-SAT gadget, seeded random instances."""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass
from itertools import combinations

from .core import Hypergraph, HostTree, InvalidInstance
from .exact import CnfFormula


@dataclass(frozen=True)
class GadgetInstance:
    """The hypertree built from a 3-CNF formula, with vertex and edge roles.

    Vertex 0 is the center ``c*``; variable ``i`` (1-based) owns vertices
    ``3i-2, 3i-1, 3i`` named ``x'i, ti, fi``.  Edges ``0..v-1`` are the
    variable-edges, followed by one clause-edge per clause.
    """

    hypergraph: Hypergraph
    tree: HostTree
    names: tuple
    roles: tuple

    def vertex(self, name: str) -> int:
        return self.names.index(name)


def gen_single_edge(n: int) -> Hypergraph:
    if n < 2:
        raise InvalidInstance("single-edge hypergraph needs n >= 2")
    return Hypergraph(n, (frozenset(range(n)),))


def gen_prop3_upper_family(n: int, s: int) -> Hypergraph:
    """All triples with two vertices in ``S = {0..s-1}`` and one outside."""
    if not 2 <= s <= n - 2:
        raise InvalidInstance(f"need 2 <= s <= n-2, got n={n}, s={s}")
    edges = [frozenset((a, b, x)) for a, b in combinations(range(s), 2) for x in range(s, n)]
    return Hypergraph(n, tuple(edges))


def gen_prop3_lower_family(k: int):
    """Overlapping triples on a path of ``3k+1`` vertices, with the path as host."""
    if k < 1:
        raise InvalidInstance("k must be >= 1")
    n = 3 * k + 1
    # 0-based shift of {3r+1, 3r+2, 3r+3} and {3r+2, 3r+3, 3r+4}
    edges = [frozenset((3 * r, 3 * r + 1, 3 * r + 2)) for r in range(k)]
    edges += [frozenset((3 * r + 1, 3 * r + 2, 3 * r + 3)) for r in range(k)]
    tree = HostTree(n, tuple((i, i + 1) for i in range(n - 1)))
    return Hypergraph(n, tuple(edges)), tree


def gen_sat_gadget(f: CnfFormula) -> GadgetInstance:
    v = f.v
    n = 3 * v + 1
    names = ["c*"]
    for i in range(1, v + 1):
        names += [f"x'{i}", f"t{i}", f"f{i}"]

    def xp(i):
        return 3 * i - 2

    lines = []
    edges = []
    roles = []
    for i in range(1, v + 1):
        lines += [(0, xp(i)), (xp(i), xp(i) + 1), (xp(i), xp(i) + 2)]
        edges.append(frozenset((xp(i), xp(i) + 1, xp(i) + 2)))
        roles.append(("variable", i))
    for j, clause in enumerate(f.clauses, start=1):
        e = {0}
        for lit in clause:
            i = abs(lit)
            e.add(xp(i))
            e.add(xp(i) + 1 if lit > 0 else xp(i) + 2)
        edges.append(frozenset(e))
        roles.append(("clause", j))
    return GadgetInstance(Hypergraph(n, tuple(edges)), HostTree(n, tuple(lines)),
                          tuple(names), tuple(roles))


def prufer_to_lines(seq, n: int) -> list:
    """Decode a Prüfer sequence of length ``n-2`` into the lines of a labeled tree."""
    if n == 1:
        return []
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [x for x in range(n) if degree[x] == 1]
    heapq.heapify(leaves)
    lines = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        lines.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    lines.append((u, v))
    return lines


def random_tree(n: int, rng: random.Random) -> HostTree:
    if n < 1:
        raise InvalidInstance("tree needs n >= 1")
    seq = [rng.randrange(n) for _ in range(n - 2)] if n >= 2 else []
    return HostTree(n, tuple(prufer_to_lines(seq, n)))


def random_subtree(tree: HostTree, size: int, rng: random.Random) -> frozenset:
    """Connected vertex set of ``size`` grown from a random root along random frontier lines."""
    adj = tree.adjacency
    root = rng.randrange(tree.n)
    chosen = {root}
    while len(chosen) < size:
        frontier = sorted({(u, w) for u in chosen for w in adj[u] if w not in chosen})
        _, w = rng.choice(frontier)
        chosen.add(w)
    return frozenset(chosen)


def gen_random_hypertree(n: int, m: int, max_edge_size: int, seed: int):
    if n < 2 or max_edge_size < 2 or m < 0:
        raise InvalidInstance("need n >= 2, m >= 0 and max_edge_size >= 2")
    rng = random.Random(seed)
    tree = random_tree(n, rng)
    top = min(max_edge_size, n)
    edges = tuple(random_subtree(tree, rng.randint(2, top), rng) for _ in range(m))
    return Hypergraph(n, edges), tree


def gen_random_hypergraph(n: int, m: int, min_size: int, max_size: int, seed: int) -> Hypergraph:
    """``m`` distinct edges drawn uniformly from all subsets with size in range."""
    if not 2 <= min_size <= max_size <= n:
        raise InvalidInstance(f"need 2 <= min_size <= max_size <= n, got {min_size}, {max_size}, {n}")
    sizes = list(range(min_size, max_size + 1))
    weights = [math.comb(n, s) for s in sizes]
    if sum(weights) < m:
        raise InvalidInstance(f"only {sum(weights)} distinct edges exist, {m} requested")
    rng = random.Random(seed)
    if m > sum(weights) // 2:
        # dense request: shuffle the full pool instead of rejection sampling
        pool = [frozenset(c) for s in sizes for c in combinations(range(n), s)]
        rng.shuffle(pool)
        return Hypergraph(n, tuple(pool[:m]))
    seen = set()
    edges = []
    while len(edges) < m:
        s = rng.choices(sizes, weights)[0]
        e = frozenset(rng.sample(range(n), s))
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return Hypergraph(n, tuple(edges))


def gen_random_hyperstar(n: int, m: int, max_edge_size: int, seed: int) -> Hypergraph:
    """Random edges through a random center; sizes uniform in ``2..max_edge_size``."""
    if n < 2 or max_edge_size < 2:
        raise InvalidInstance("need n >= 2 and max_edge_size >= 2")
    rng = random.Random(seed)
    center = rng.randrange(n)
    others = [x for x in range(n) if x != center]
    top = min(max_edge_size, n)
    edges = []
    for _ in range(m):
        size = rng.randint(2, top)
        edges.append(frozenset(rng.sample(others, size - 1)) | {center})
    return Hypergraph(n, tuple(edges))


def star_tree(n: int, center: int) -> HostTree:
    return HostTree(n, tuple((center, x) for x in range(n) if x != center))

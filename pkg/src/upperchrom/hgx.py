"""Text formats: HGX instances, DIMACS CNF and witness files.

HGX is line oriented, with 1-based vertex ids::

    hg <n> <m>
    <m lines, one edge each: space separated vertex ids>
    host                      (optional, followed by n-1 lines "<u> <v>")
    demands <w_1> ... <w_m>   (optional)

Lines starting with ``#`` are comments and blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
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
from .exact import CnfFormula


class FormatError(InvalidInstance):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Instance:
    hypergraph: Hypergraph
    host: Optional[HostTree] = None
    demands: Optional[DemandVector] = None


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(lineno, tokens):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_instance(text: str) -> Instance:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError(1, "empty instance")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "hg":
        raise FormatError(lineno, "expected header 'hg <n> <m>'")
    n, m = _ints(lineno, parts[1:])
    if n < 0 or m < 0:
        raise FormatError(lineno, "n and m must be non-negative")
    pos = 1
    edges = []
    for _ in range(m):
        if pos >= len(lines):
            raise FormatError(lines[-1][0], f"expected {m} edges, found {len(edges)}")
        lineno, line = lines[pos]
        pos += 1
        ids = _ints(lineno, line.split())
        if any(x < 1 or x > n for x in ids):
            raise FormatError(lineno, f"vertex id out of range 1..{n}")
        e = frozenset(x - 1 for x in ids)
        if len(e) < 2:
            raise FormatError(lineno, "edge needs at least two distinct vertices")
        edges.append(e)
    H = Hypergraph(n, tuple(edges))

    host = demands = None
    while pos < len(lines):
        lineno, line = lines[pos]
        pos += 1
        parts = line.split()
        if parts[0] == "host":
            if host is not None:
                raise FormatError(lineno, "duplicate host section")
            pairs = []
            for _ in range(max(n - 1, 0)):
                if pos >= len(lines):
                    raise FormatError(lineno, f"host section needs {n - 1} lines")
                ln, l = lines[pos]
                pos += 1
                uv = _ints(ln, l.split())
                if len(uv) != 2 or not all(1 <= x <= n for x in uv):
                    raise FormatError(ln, "expected a line '<u> <v>' with ids in range")
                pairs.append((uv[0] - 1, uv[1] - 1))
            try:
                host = HostTree(n, tuple(pairs))
            except InvalidInstance as exc:
                raise FormatError(lineno, str(exc)) from None
            problem = host_tree_problem(H, host)
            if problem:
                raise FormatError(lineno, problem)
        elif parts[0] == "demands":
            if demands is not None:
                raise FormatError(lineno, "duplicate demands section")
            w = _ints(lineno, parts[1:])
            if len(w) != m:
                raise FormatError(lineno, f"expected {m} demands, got {len(w)}")
            try:
                demands = DemandVector(tuple(w))
                check_demands(H, demands)
            except InvalidInstance as exc:
                raise FormatError(lineno, str(exc)) from None
        else:
            raise FormatError(lineno, f"unexpected content {line!r}")
    return Instance(H, host, demands)


def render_instance(inst: Instance, comment: Optional[str] = None) -> str:
    H = inst.hypergraph
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"hg {H.n} {H.m}")
    for e in H.edges:
        out.append(" ".join(str(x + 1) for x in sorted(e)))
    if inst.host is not None:
        out.append("host")
        out.extend(f"{u + 1} {v + 1}" for u, v in inst.host.lines)
    if inst.demands is not None:
        out.append("demands " + " ".join(map(str, inst.demands.w)))
    return "\n".join(out) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    v = None
    expected = None
    literals = []
    for lineno, line in _content_lines(text):
        if line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError(lineno, "expected 'p cnf <vars> <clauses>'")
            v, expected = _ints(lineno, parts[2:])
            continue
        if v is None:
            raise FormatError(lineno, "clause before 'p cnf' header")
        if line.startswith("%"):
            break
        literals.extend((lineno, x) for x in _ints(lineno, line.split()))
    if v is None:
        raise FormatError(1, "missing 'p cnf' header")
    clauses, current = [], []
    for lineno, x in literals:
        if x == 0:
            clauses.append(tuple(current))
            current = []
        else:
            current.append(x)
    if current:
        clauses.append(tuple(current))
    if len(clauses) != expected:
        raise FormatError(1, f"header announces {expected} clauses, found {len(clauses)}")
    return CnfFormula(v, tuple(clauses))


def render_dimacs(f: CnfFormula) -> str:
    out = [f"p cnf {f.v} {len(f.clauses)}"]
    out.extend(" ".join(map(str, c)) + " 0" for c in f.clauses)
    return "\n".join(out) + "\n"


# witness files -------------------------------------------------------------

SET_KINDS = ("transversal", "independent", "multitransversal", "deleted")


def format_coloring(c: CColoring) -> str:
    return "coloring " + " ".join(map(str, c.colors))


def format_set(kind: str, S, k: Optional[int] = None) -> str:
    head = kind if k is None else f"{kind} {k}"
    return " ".join([head] + [str(x + 1) for x in sorted(S)])


def format_lines(T) -> str:
    return " ".join(["lines"] + [f"{u + 1}-{v + 1}" for u, v in sorted(T)])


def parse_witnesses(text: str) -> list:
    """Witness records ``(kind, payload)`` from solver output; 0-based payloads.

    Scalar report lines (``value 3``, ``dec 2`` ...) are skipped.
    """
    out = []
    for lineno, line in _content_lines(text):
        kind, *rest = line.split()
        if kind == "coloring":
            out.append(("coloring", CColoring(tuple(_ints(lineno, rest)))))
        elif kind == "ktransversal":
            if not rest:
                raise FormatError(lineno, "ktransversal needs k")
            k, *ids = _ints(lineno, rest)
            out.append(("ktransversal", (k, frozenset(x - 1 for x in ids))))
        elif kind in ("transversal", "independent", "multitransversal"):
            out.append((kind, frozenset(x - 1 for x in _ints(lineno, rest))))
        elif kind == "lines":
            pairs = []
            for tok in rest:
                u, sep, v = tok.partition("-")
                if not sep:
                    raise FormatError(lineno, f"bad line token {tok!r}, expected u-v")
                a, b = _ints(lineno, [u, v])
                pairs.append((a - 1, b - 1))
            out.append(("lines", frozenset(pairs)))
    return out

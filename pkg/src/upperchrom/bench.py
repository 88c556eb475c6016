"""Benchmark harness: run every applicable algorithm on a corpus and tabulate ratios."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from .approx import (
    approx_decrement_general,
    approx_decrement_hyperstar,
    approx_decrement_hypertree,
    general_bound,
    hypertree_bound,
)
from .core import DemandVector, hyperstar_center
from .exact import (
    LINE_LIMIT,
    PARTITION_LIMIT,
    SUBSET_LIMIT,
    exact_decrement_hypertree,
    exact_multitransversal,
    exact_upper_chromatic,
)
from .gen import star_tree
from .greedy import greedy_multitransversal, harmonic
from .hgx import Instance, parse_instance

COLUMNS = ("instance", "n", "m", "algo", "value", "oracle", "bound", "ratio", "ms")


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    n: int
    m: int
    algo: str
    value: int
    oracle: Optional[int]
    bound: float
    ratio: Optional[float]
    ms: float

    def within_bound(self) -> bool:
        # compared unrounded; the ratio column is for display only
        if self.oracle is None:
            return True
        if self.oracle == 0:
            return self.value == 0
        return self.value <= self.bound * self.oracle + 1e-9


def _timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, (time.perf_counter() - start) * 1000.0


def _oracle_dec(inst: Instance, host=None) -> Optional[int]:
    H = inst.hypergraph
    if H.n <= PARTITION_LIMIT:
        return exact_upper_chromatic(H).dec
    host = host or inst.host
    if host is not None and H.n <= LINE_LIMIT:
        return exact_decrement_hypertree(H, host)[0]
    return None


def _record(name, inst, algo, value, oracle, bound, ms):
    ratio = value / oracle if oracle else None
    H = inst.hypergraph
    return BenchRecord(name, H.n, H.m, algo, value, oracle, float(bound), ratio, ms)


def bench_instance(name: str, inst: Instance) -> list:
    H = inst.hypergraph
    small = H.n <= SUBSET_LIMIT
    records = []
    demand_runs = [("greedy-transversal", DemandVector.uniform(H, 1))]
    if H.m and min(len(e) for e in H.edges) >= 2:
        demand_runs.append(("greedy-2transversal", DemandVector.uniform(H, 2)))
    if inst.demands is not None:
        demand_runs.append(("greedy-multitransversal", inst.demands))
    for algo, d in demand_runs:
        S, ms = _timed(greedy_multitransversal, H, d)
        oracle = exact_multitransversal(H, d)[0] if small else None
        records.append(_record(name, inst, algo, len(S), oracle, harmonic(d.W), ms))
    if H.m == 0:
        return records

    rep, ms = _timed(approx_decrement_general, H)
    records.append(_record(name, inst, "general", rep.decrement, _oracle_dec(inst),
                           general_bound(H.m), ms))
    if inst.host is not None:
        rep, ms = _timed(approx_decrement_hypertree, H, inst.host)
        oracle = (exact_decrement_hypertree(H, inst.host)[0]
                  if H.n <= LINE_LIMIT else None)
        records.append(_record(name, inst, "hypertree", rep.decrement, oracle,
                               hypertree_bound(H.m), ms))
    center = hyperstar_center(H)
    if center is not None:
        rep, ms = _timed(approx_decrement_hyperstar, H)
        records.append(_record(name, inst, "hyperstar", rep.decrement,
                               _oracle_dec(inst, star_tree(H.n, center)),
                               hypertree_bound(H.m), ms))
    return records


def _bench_file(path: str) -> list:
    p = Path(path)
    return bench_instance(p.stem, parse_instance(p.read_text()))


def bench_corpus(directory, jobs: int = 1) -> list:
    paths = sorted(str(p) for p in Path(directory).glob("*.hgx"))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_bench_file, paths))
    else:
        chunks = [_bench_file(p) for p in paths]
    return [r for chunk in chunks for r in chunk]


def _fmt(x, digits=4):
    if x is None:
        return "-"
    if isinstance(x, float):
        return f"{x:.{digits}f}"
    return str(x)


def render_tsv(records) -> str:
    out = ["\t".join(COLUMNS)]
    for r in records:
        out.append("\t".join([r.instance, str(r.n), str(r.m), r.algo, str(r.value),
                              _fmt(r.oracle), _fmt(r.bound), _fmt(r.ratio),
                              _fmt(r.ms, 3)]))
    return "\n".join(out) + "\n"


def render_json(records) -> str:
    rows = []
    for r in records:
        row = asdict(r)
        row["bound"] = round(r.bound, 4)
        row["ratio"] = None if r.ratio is None else round(r.ratio, 4)
        row["ms"] = round(r.ms, 3)
        rows.append(row)
    return json.dumps(rows, indent=2) + "\n"

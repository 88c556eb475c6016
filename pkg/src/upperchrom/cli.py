"""Command-line front end.

Exit codes: 0 success, 1 invalid input (or a witness that fails
verification), 2 an exact oracle refused an instance above its size limit.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
from pathlib import Path

from . import approx, exact, gen, greedy
from .bench import bench_corpus, render_json, render_tsv
from .core import (
    DemandVector,
    InvalidInstance,
    is_independent,
    is_transversal,
    verify_c_coloring,
    verify_multitransversal,
)
from .hgx import (
    Instance,
    format_coloring,
    format_lines,
    format_set,
    parse_dimacs,
    parse_instance,
    parse_witnesses,
    render_instance,
)


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    return Path(path).read_text()


def _bound(x):
    return f"bound {float(x):.4f}"


def cmd_solve(args, out):
    inst = parse_instance(_read(args.file))
    H = inst.hypergraph
    if args.pipeline == "multitransversal":
        if args.k is not None:
            S = greedy.greedy_k_transversal(H, args.k)
            d = DemandVector.uniform(H, args.k)
            witness = format_set("ktransversal", S, args.k)
        elif inst.demands is not None:
            d = inst.demands
            S = greedy.greedy_multitransversal(H, d)
            witness = format_set("multitransversal", S)
        else:
            raise InvalidInstance("multitransversal needs a demands section or --k")
        print("algorithm multitransversal", file=out)
        print(f"value {len(S)}", file=out)
        print(_bound(greedy.harmonic(d.W)), file=out)
        print(witness, file=out)
        return 0
    if args.pipeline == "general":
        rep = approx.approx_decrement_general(H)
        witness = format_set("ktransversal", rep.witness, 2)
    elif args.pipeline == "hypertree":
        if inst.host is None:
            raise InvalidInstance("hypertree pipeline needs a host section")
        rep = approx.approx_decrement_hypertree(H, inst.host)
        witness = format_lines(rep.witness)
    else:
        rep = approx.approx_decrement_hyperstar(H)
        witness = format_set("transversal", rep.witness)
    print(f"algorithm {rep.algorithm}", file=out)
    print(f"decrement {rep.decrement}", file=out)
    print(f"colors {rep.coloring.k}", file=out)
    print(_bound(rep.bound), file=out)
    print(format_coloring(rep.coloring), file=out)
    print(witness, file=out)
    return 0


def cmd_exact(args, out):
    if args.oracle == "min-del":
        f = parse_dimacs(_read(args.file))
        count, I = exact.min_variable_deletion(f)
        print(f"min_deletions {count}", file=out)
        print(" ".join(["deleted"] + [str(i) for i in sorted(I)]), file=out)
        return 0
    inst = parse_instance(_read(args.file))
    H = inst.hypergraph
    if args.oracle == "tau":
        size, S = exact.exact_transversal(H)
        print(f"tau {size}", file=out)
        print(format_set("transversal", S), file=out)
    elif args.oracle == "alpha":
        size, S = exact.exact_independence(H)
        print(f"alpha {size}", file=out)
        print(format_set("independent", S), file=out)
    elif args.oracle == "tau-k":
        if args.k is not None:
            size, S = exact.exact_k_transversal(H, args.k)
            print(f"tau_{args.k} {size}", file=out)
            print(format_set("ktransversal", S, args.k), file=out)
        elif inst.demands is not None:
            size, S = exact.exact_multitransversal(H, inst.demands)
            print(f"tau_w {size}", file=out)
            print(format_set("multitransversal", S), file=out)
        else:
            raise InvalidInstance("tau-k needs --k or a demands section")
    elif args.oracle == "chibar":
        res = exact.exact_upper_chromatic(H)
        print(f"chibar {res.k}", file=out)
        print(f"dec {res.dec}", file=out)
        print(format_coloring(res.coloring), file=out)
    else:
        if inst.host is None:
            raise InvalidInstance("dec-hypertree needs a host section")
        dec, T = exact.exact_decrement_hypertree(H, inst.host)
        print(f"dec {dec}", file=out)
        print(format_lines(T), file=out)
    return 0


def cmd_gen(args, out):
    fam = args.family
    if fam == "single-edge":
        inst = Instance(gen.gen_single_edge(args.n))
    elif fam == "prop3-upper":
        inst = Instance(gen.gen_prop3_upper_family(args.n, args.s))
    elif fam == "prop3-lower":
        inst = Instance(*gen.gen_prop3_lower_family(args.k))
    elif fam == "sat-gadget":
        g = gen.gen_sat_gadget(parse_dimacs(_read(args.file)))
        inst = Instance(g.hypergraph, g.tree)
    elif fam == "random":
        inst = Instance(gen.gen_random_hypergraph(args.n, args.m, args.min_size,
                                                  args.max_size, args.seed))
    elif fam == "random-hypertree":
        inst = Instance(*gen.gen_random_hypertree(args.n, args.m, args.max_size, args.seed))
    elif fam == "random-hyperstar":
        inst = Instance(gen.gen_random_hyperstar(args.n, args.m, args.max_size, args.seed))
    else:
        return _gen_corpus(args, out)
    if args.demands is not None:
        inst = Instance(inst.hypergraph, inst.host,
                        DemandVector.uniform(inst.hypergraph, args.demands))
    out.write(render_instance(inst))
    return 0


def _gen_corpus(args, out):
    """Seeded mix of random hypergraphs, hypertrees and hyperstars."""
    directory = Path(args.directory)
    directory.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)
    for i in range(args.count):
        n = rng.randint(3, args.max_n)
        m = rng.randint(1, 8)
        seed = rng.randrange(2**31)
        kind = ("random", "hypertree", "hyperstar")[i % 3]
        if kind == "random":
            top = min(4, n)
            m = min(m, sum(math.comb(n, s) for s in range(2, top + 1)))
            H = gen.gen_random_hypergraph(n, m, 2, top, seed)
            inst = Instance(H, None, DemandVector(tuple(
                rng.randint(1, min(2, len(e))) for e in H.edges)))
        elif kind == "hypertree":
            inst = Instance(*gen.gen_random_hypertree(n, m, 4, seed))
        else:
            inst = Instance(gen.gen_random_hyperstar(n, m, 4, seed))
        (directory / f"{kind}-{i:03d}.hgx").write_text(render_instance(inst))
    print(f"wrote {args.count} instances to {directory}", file=out)
    return 0


def _check_witness(inst, kind, payload):
    H = inst.hypergraph
    if kind == "coloring":
        return verify_c_coloring(H, payload)
    if kind == "transversal":
        return is_transversal(H, payload)
    if kind == "independent":
        return is_independent(H, payload)
    if kind == "ktransversal":
        k, S = payload
        return verify_multitransversal(H, DemandVector.uniform(H, k), S)
    if kind == "multitransversal":
        if inst.demands is None:
            raise InvalidInstance("multitransversal witness needs a demands section")
        return verify_multitransversal(H, inst.demands, payload)
    if inst.host is None:
        raise InvalidInstance("lines witness needs a host section")
    try:
        approx.coloring_from_line_set(H, inst.host, payload)
    except InvalidInstance:
        return False
    return True


def cmd_verify(args, out):
    inst = parse_instance(_read(args.instance))
    records = parse_witnesses(_read(args.witness))
    if not records:
        raise InvalidInstance("no witness found")
    status = 0
    for kind, payload in records:
        ok = _check_witness(inst, kind, payload)
        print(f"{'ok' if ok else 'FAIL'} {kind}", file=out)
        status |= 0 if ok else 1
    return status


def cmd_bench(args, out):
    records = bench_corpus(args.directory, args.jobs)
    out.write(render_json(records) if args.json else render_tsv(records))
    return 0 if all(r.within_bound() for r in records) else 1


def build_parser():
    p = argparse.ArgumentParser(prog="upperchrom",
                                description="Upper chromatic number / decrement approximation toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="run an approximation pipeline")
    s.add_argument("pipeline", choices=["general", "hypertree", "hyperstar", "multitransversal"])
    s.add_argument("file", nargs="?", default="-", help="HGX instance (default: stdin)")
    s.add_argument("--k", type=int, help="uniform demand for multitransversal")
    s.set_defaults(func=cmd_solve)

    e = sub.add_parser("exact", help="run a brute-force oracle")
    e.add_argument("oracle", choices=["tau", "alpha", "tau-k", "chibar", "dec-hypertree", "min-del"])
    e.add_argument("file", nargs="?", default="-",
                   help="HGX instance, or DIMACS CNF for min-del (default: stdin)")
    e.add_argument("--k", type=int)
    e.set_defaults(func=cmd_exact)

    g = sub.add_parser("gen", help="generate an instance in HGX format")
    g.add_argument("--demands", type=int, help="attach a uniform demands section")
    fam = g.add_subparsers(dest="family", required=True)
    f = fam.add_parser("single-edge")
    f.add_argument("n", type=int)
    f = fam.add_parser("prop3-upper")
    f.add_argument("n", type=int)
    f.add_argument("s", type=int)
    f = fam.add_parser("prop3-lower")
    f.add_argument("k", type=int)
    f = fam.add_parser("sat-gadget")
    f.add_argument("file", nargs="?", default="-", help="DIMACS CNF (default: stdin)")
    f = fam.add_parser("random")
    f.add_argument("n", type=int)
    f.add_argument("m", type=int)
    f.add_argument("--min-size", type=int, default=2)
    f.add_argument("--max-size", type=int, default=3)
    f.add_argument("--seed", type=int, default=0)
    for name in ("random-hypertree", "random-hyperstar"):
        f = fam.add_parser(name)
        f.add_argument("n", type=int)
        f.add_argument("m", type=int)
        f.add_argument("--max-size", type=int, default=4)
        f.add_argument("--seed", type=int, default=0)
    f = fam.add_parser("corpus", help="write a seeded random corpus of .hgx files")
    f.add_argument("directory")
    f.add_argument("--count", type=int, default=50)
    f.add_argument("--max-n", type=int, default=10)
    f.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check witnesses against an instance")
    v.add_argument("instance")
    v.add_argument("witness", nargs="?", default="-")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="benchmark every applicable algorithm on a corpus")
    b.add_argument("directory")
    b.add_argument("--json", action="store_true")
    b.add_argument("--jobs", type=int, default=1)
    b.set_defaults(func=cmd_bench)
    return p


def run_command(argv, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args, out)
    except exact.SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvalidInstance, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""Command-line front end.

Exit status: 0 when every check passes, 1 when a mathematical check fails,
2 for usage or input errors (including bridge edges).
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .betti import (alternating_numbers, betti_table, check_alt_deletion_contraction,
                    check_vanishing_implies_equality)
from .checks import (appendix_suite, betti_tutte_check, merino_check, nonspecial_check,
                     riemann_roch_suite)
from .corpus import load_corpus
from .errors import CritModError
from .gradedalg import exactness_report
from .multigraph import format_graph, non_bridge_pairs, read_graph
from .poly import to_str as poly_str
from .report import CheckResult
from .tutte import tutte_polynomial

SCHEMA = 1


class UsageError(Exception):
    pass


def _sink(args, g):
    q = args.sink if args.sink is not None else (1 if g.n > 1 else 0)
    if not 0 <= q < g.n:
        raise UsageError(f"sink {q} is not a vertex of a {g.n}-vertex graph")
    return q


def _edge(args, g):
    u, v = args.edge
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise UsageError(f"edge {u} {v} is outside 0..{g.n - 1}")
    return u, v


def _edge_sink(args, g):
    u, v = _edge(args, g)
    if args.sink is not None:
        return (u, v), _sink(args, g)
    return (u, v), (1 if 1 in (u, v) else v)


def cmd_tutte(args, g):
    T = tutte_polynomial(g)
    t1 = T.at_x1()
    data = {"tutte": T.to_json(), "T_1_t": list(t1)}
    text = [f"T(x, y) = {T.to_str()}", f"T(1, t) = {_ptxt(t1)}"]
    return [], data, text


def cmd_betti(args, g):
    q = _sink(args, g)
    tab = betti_table(g, q)
    alt = alternating_numbers(g, q, tab.max_k(), table=tab)
    chk = betti_tutte_check(g, q)
    text = [f"beta_{{{i},{k}}} = {v}" for (i, k), v in sorted(tab.entries.items())]
    text.append("alternating numbers: " + " ".join(str(a) for a in alt))
    return [chk], {"sink": q, "betti": tab.to_json(), "alternating": alt}, text


def cmd_merino(args, g):
    q = _sink(args, g)
    chk = merino_check(g, q, args.max_degree)
    d = chk.details
    text = [f"presentation K(t) = {_ptxt(d['presentation'])}",
            f"T(1, t)          = {_ptxt(d['tutte'])}",
            f"reciprocity      = {_ptxt(d['reciprocity'])}"]
    return [chk], {"sink": q}, text


def cmd_exactness(args, g):
    e, q = _edge_sink(args, g)
    rep = exactness_report(args.kind, g, e, q, args.max_degree)
    chk = CheckResult(f"exactness-{args.kind}", rep.verdict, rep.to_json())
    text = [f"{args.kind} sequence, edge {e}, sink {q}, degrees 0..{rep.max_degree}"]
    for r in rep.per_degree:
        flags = " ".join(k for k, v in r.flags.items() if not v) or "ok"
        text.append(f"  t={r.t}: {r.dimM} = {r.dimL} + {r.dimR}  "
                    f"im psi={r.dim_im_psi} ker phi={r.dim_ker_phi}  {flags}")
    return [chk], {}, text


def cmd_riemann_roch(args, g):
    q = _sink(args, g)
    return [riemann_roch_suite(g, q, args.max_deg), nonspecial_check(g, q)], {"sink": q}, []


def cmd_appendix(args, g):
    q = _sink(args, g)
    return [appendix_suite(g, q)], {"sink": q}, []


def cmd_alt_dc(args, g):
    e, q = _edge_sink(args, g)
    return [check_alt_deletion_contraction(g, *e, sink=q)], {"sink": q}, []


def cmd_vanishing(args, g):
    e, q = _edge_sink(args, g)
    return [check_vanishing_implies_equality(g, *e, sink=q)], {"sink": q}, []


def graph_suite(g):
    """Every check on one graph, every non-bridge edge and both endpoint sinks."""
    q = 1 if g.n > 1 else 0
    out = [merino_check(g, q), betti_tutte_check(g, q), riemann_roch_suite(g, q),
           nonspecial_check(g, q), appendix_suite(g, q)]
    for u, v in non_bridge_pairs(g):
        for s in (u, v):
            out.append(check_alt_deletion_contraction(g, u, v, s))
            out.append(check_vanishing_implies_equality(g, u, v, s))
            if g.n >= 3:
                for kind in ("gpark", "toppling"):
                    rep = exactness_report(kind, g, (u, v), s)
                    out.append(CheckResult(f"exactness-{kind}", rep.verdict,
                                           {"edge": [u, v], "sink": s}))
    return out


def _suite_one(item):
    name, g = item
    return name, [c.to_json() for c in graph_suite(g)]


def _jobs(args):
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get("CRITMOD_JOBS")
    return int(env) if env else 1


def run_suite(args):
    try:
        graphs = load_corpus(args.corpus)
    except OSError as exc:
        raise UsageError(f"cannot read corpus {args.corpus}: {exc}")
    items = sorted(graphs.items())
    jobs = _jobs(args)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_suite_one, items))
    else:
        results = [_suite_one(it) for it in items]
    passed = all(c["passed"] for _, cs in results for c in cs)
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": "suite", "corpus": args.corpus,
                          "graphs": [{"name": n, "checks": cs} for n, cs in results],
                          "passed": passed}, sort_keys=True))
    else:
        for name, cs in results:
            bad = [c["name"] for c in cs if not c["passed"]]
            print(f"{name}: {len(cs) - len(bad)}/{len(cs)} checks passed"
                  + (f"  failed: {', '.join(sorted(set(bad)))}" if bad else ""))
        print("PASS" if passed else "FAIL")
    return 0 if passed else 1


COMMANDS = {
    "tutte": cmd_tutte, "betti": cmd_betti, "merino": cmd_merino, "exactness": cmd_exactness,
    "riemann-roch": cmd_riemann_roch, "appendix": cmd_appendix, "alt-dc": cmd_alt_dc,
    "vanishing": cmd_vanishing,
}


def _ptxt(coeffs):
    return poly_str(tuple(coeffs))


def build_parser():
    ap = argparse.ArgumentParser(prog="critmod",
                                 description="Critical modules of multigraphs over GF(2).")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_, sink=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("graph", help="graph file: vertex count, then one 'u v' per edge")
        if sink:
            p.add_argument("--sink", type=int, default=None, help="sink vertex (default 1)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    graph_cmd("tutte", "Tutte polynomial and T(1, t)", sink=False)
    graph_cmd("betti", "Betti table and alternating numbers")
    p = graph_cmd("merino", "three-way K-polynomial check")
    p.add_argument("--max-degree", type=int, default=None)
    p = sub.add_parser("exactness", help="verify a Tutte short exact sequence degree by degree")
    p.add_argument("kind", choices=["gpark", "toppling"])
    p.add_argument("graph")
    p.add_argument("--edge", type=int, nargs=2, required=True, metavar=("U", "V"))
    p.add_argument("--sink", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p = graph_cmd("riemann-roch", "Riemann-Roch and rank checks")
    p.add_argument("--max-deg", type=int, default=None)
    graph_cmd("appendix", "Hilbert-coefficient relations of the Bayer-Sturmfels module")
    for name, h in (("alt-dc", "deletion-contraction for alternating numbers"),
                    ("vanishing", "Betti vanishing scan for an edge")):
        p = graph_cmd(name, h)
        p.add_argument("--edge", type=int, nargs=2, required=True, metavar=("U", "V"))
    p = sub.add_parser("suite", help="run every check on every graph of a corpus directory")
    p.add_argument("--corpus", required=True)
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: CRITMOD_JOBS or 1)")
    p.add_argument("--json", action="store_true")
    return ap


def run(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "suite":
            return run_suite(args)
        try:
            g = read_graph(args.graph)
        except OSError as exc:
            raise UsageError(f"cannot read {args.graph}: {exc}")
        checks, data, text = COMMANDS[args.command](args, g)
    except (UsageError, CritModError) as exc:
        print(f"critmod: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    passed = all(c.passed for c in checks)
    if args.json:
        out = {"schema": SCHEMA, "command": args.command, "graph": format_graph(g),
               "checks": [c.to_json() for c in checks], "passed": passed}
        out.update(data)
        print(json.dumps(out, sort_keys=True))
    else:
        for line in text:
            print(line)
        for c in checks:
            print(c.line())
    return 0 if passed else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

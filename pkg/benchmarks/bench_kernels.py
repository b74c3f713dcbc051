"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]

Times the two hot kernels directly and one end-to-end exactness run per
backend, and checks that both backends return identical results.
"""

import argparse
import random
import time

from critmod import kernels
from critmod.corpus import named_graphs
from critmod.gradedalg import exactness_report
from critmod.multigraph import complete_graph


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_acyclic():
    g = complete_graph(5)
    return lambda: kernels.acyclic_codes(g.n, g.pairs, 1)


def bench_rank(rows=600, cols=500, seed=7):
    rng = random.Random(seed)
    base = [rng.getrandbits(cols) for _ in range(rows // 2)]
    extra = [rng.getrandbits(cols) for _ in range(rows // 2)]
    return lambda: kernels.gf2_rank_extended(base, extra)


def bench_exactness():
    g = named_graphs()["theta"]
    return lambda: exactness_report("toppling", g, (0, 2), 2).verdict


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    cases = [("acyclic_codes K5", bench_acyclic), ("gf2_rank 600x500", bench_rank),
             ("exactness theta", bench_exactness)]
    names = kernels.available_backends()
    print(f"backends: {', '.join(names)}")
    if "compiled" not in names:
        print("compiled extension not built; only the Python backend is timed")
    prev = kernels.backend()
    try:
        for label, make in cases:
            row, results = [], {}
            for name in names:
                kernels.use_backend(name)
                secs, out = _time(make(), args.repeat)
                results[name] = out
                row.append((name, secs))
            agree = len({repr(v) for v in results.values()}) == 1
            cells = "  ".join(f"{n}={s * 1e3:9.2f} ms" for n, s in row)
            speed = ""
            if len(row) == 2 and row[0][1] > 0:
                speed = f"  speedup x{row[1][1] / row[0][1]:.1f}"
            print(f"{label:20s} {cells}{speed}  agree={agree}")
    finally:
        kernels.use_backend(prev)


if __name__ == "__main__":
    main()

"""Combinatorial graded Betti numbers and alternating numbers.

beta_{i, j + ell} counts unique-sink acyclic orientations over connected
partitions with ``i`` merges whose partition graph keeps ``m - j`` edges,
where ``m`` is the number of non-loop edges.
"""

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType

from . import poly
from .errors import BridgeEdge
from .multigraph import (connected_partitions, contract_edge, delete_edge,
                         is_bridge, merge_relabel, partition_graph)
from .orientations import enumerate_unique_sink
from .report import CheckResult
from .tutte import tutte_eval_1_t


@dataclass(frozen=True)
class BettiTable:
    entries: dict
    n: int
    m: int
    loops: int
    sink: int

    def __getitem__(self, ik):
        return self.entries.get(ik, 0)

    def get(self, i, k):
        return self.entries.get((i, k), 0)

    def max_k(self):
        return self.m + self.loops

    def to_json(self):
        return [[i, k, v] for (i, k), v in sorted(self.entries.items())]


@lru_cache(maxsize=8192)
def betti_table(h, sink):
    ent = {}
    for i in range(h.n):
        for p in connected_partitions(h, i):
            P = partition_graph(h, p)
            j = h.m - P.m
            c = len(enumerate_unique_sink(P, p.block_of(sink)))
            if c:
                key = (i, j + h.loops)
                ent[key] = ent.get(key, 0) + c
    return BettiTable(MappingProxyType(ent), h.n, h.m, h.loops, sink)


def alternating_numbers(h, sink, K=None, table=None):
    t = table if table is not None else betti_table(h, sink)
    K = t.max_k() if K is None else K
    out = [0] * (K + 1)
    for (i, k), v in t.entries.items():
        if k <= K:
            out[k] += (-1) ** i * v
    return out


def alternating_polynomial(h, sink, table=None):
    return poly.trim(alternating_numbers(h, sink, table=table))


def tutte_side(h):
    """T_h(1, t) * (1 - t)^(n - 1)."""
    return poly.mul(tutte_eval_1_t(h), poly.power((1, -1), h.n - 1))


def _surgeries(g, u, v, sink):
    if is_bridge(g, u, v):
        raise BridgeEdge(f"edge {(u, v)} is a bridge")
    r = merge_relabel(g.n, u, v)
    return contract_edge(g, u, v), r[sink], delete_edge(g, u, v)


def check_alt_deletion_contraction(g, u, v, sink=1):
    """A_k(G) + A_{k-1}(G/e) = A_k(G/e) + A_k(G - e) for every k."""
    ge, s_e, gd = _surgeries(g, u, v, sink)
    K = g.m + g.loops + 1
    a = alternating_numbers(g, sink, K)
    ac = alternating_numbers(ge, s_e, K)
    ad = alternating_numbers(gd, sink, K)
    bad = [k for k in range(K + 1)
           if a[k] + (ac[k - 1] if k else 0) != ac[k] + ad[k]]
    return CheckResult("alt-deletion-contraction", not bad,
                       {"edge": [u, v], "A_G": a, "A_G/e": ac, "A_G-e": ad, "failing_k": bad})


def check_vanishing_implies_equality(g, u, v, sink=1):
    """Wherever the four G/e Betti numbers vanish, beta_{i,j}(G) = beta_{i,j}(G - e)."""
    ge, s_e, gd = _surgeries(g, u, v, sink)
    bg, bc, bd = betti_table(g, sink), betti_table(ge, s_e), betti_table(gd, sink)
    tested, bad = [], []
    for i in range(g.n + 1):
        for j in range(g.m + g.loops + 2):
            if bc.get(i, j) or bc.get(i - 1, j - 1) or bc.get(i - 1, j) or bc.get(i - 2, j - 1):
                continue
            tested.append([i, j])
            if bg.get(i, j) != bd.get(i, j):
                bad.append([i, j, bg.get(i, j), bd.get(i, j)])
    return CheckResult("vanishing-implies-equality", not bad,
                       {"edge": [u, v], "tested": tested, "counterexamples": bad})

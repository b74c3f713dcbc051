"""Named fixture graphs and exhaustive small-multigraph corpora.

Multigraphs are generated up to isomorphism from their underlying simple
graph: fix one representative per simple graph, then keep one assignment of
edge multiplicities and loop counts per orbit of its automorphism group.
"""

import os
from functools import lru_cache
from itertools import combinations, permutations

from .multigraph import (Multigraph, _is_connected, complete_graph, cycle_graph, format_graph,
                         path_graph, read_graph)


def named_graphs():
    return {
        "triangle": complete_graph(3),
        "c4": cycle_graph(4),
        "k4": complete_graph(4),
        "theta": Multigraph(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]),
        "triple_path": Multigraph(4, [(0, 1)] * 3 + [(1, 2), (2, 3)]),
        "triangle_double": Multigraph(3, [(0, 1), (0, 1), (0, 2), (1, 2)]),
        "triangle_loop": Multigraph(3, [(0, 1), (0, 2), (1, 2), (0, 0)]),
        "path3": path_graph(3),
    }


EXACTNESS_GRAPHS = ("triangle", "c4", "k4", "theta", "triple_path", "triangle_double",
                    "triangle_loop")


def _canon_simple(n, edges, perms):
    return min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)) for p in perms)


@lru_cache(maxsize=None)
def simple_connected_graphs(n):
    """One edge list per isomorphism class of connected simple graphs on n vertices."""
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        nbrs = [[] for _ in range(n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        if not _is_connected(n, nbrs):
            continue
        seen.add(_canon_simple(n, edges, perms))
    return sorted(seen, key=lambda es: (len(es), es))


def _automorphisms(n, edges):
    es = set(edges)
    out = []
    for p in permutations(range(n)):
        if all(tuple(sorted((p[u], p[v]))) in es for u, v in edges):
            out.append(p)
    return out


def _compositions(total, parts, minimum):
    """Tuples of ``parts`` ints, each >= minimum, summing to at most ``total``."""
    if parts == 0:
        yield ()
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, minimum):
            yield (first,) + rest


def generate_multigraphs(max_n, max_edges):
    """Connected multigraphs with at most max_n vertices and max_edges edges (loops count)."""
    out = []
    for n in range(1, max_n + 1):
        for simple in simple_connected_graphs(n):
            k = len(simple)
            if k > max_edges:
                continue
            auts = _automorphisms(n, simple)
            eidx = {e: i for i, e in enumerate(simple)}
            maps = [[eidx[tuple(sorted((p[u], p[v])))] for u, v in simple] for p in auts]
            seen = set()
            for mult in _compositions(max_edges, k, 1):
                spare = max_edges - sum(mult)
                for loops in _compositions(spare, n, 0):
                    key = min(_relabel(mult, loops, p, m) for p, m in zip(auts, maps))
                    if key in seen:
                        continue
                    seen.add(key)
            for mult, loops in sorted(seen):
                edges = [e for e, c in zip(simple, mult) for _ in range(c)]
                edges += [(v, v) for v in range(n) for _ in range(loops[v])]
                out.append(Multigraph(n, edges))
    return out


def _relabel(mult, loops, p, m):
    new_mult = [0] * len(mult)
    for i, j in enumerate(m):
        new_mult[j] = mult[i]
    new_loops = [0] * len(loops)
    for v, c in enumerate(loops):
        new_loops[p[v]] = c
    return tuple(new_mult), tuple(new_loops)


def merino_corpus():
    return generate_multigraphs(5, 8)


def medium_corpus():
    """Named graphs plus every connected multigraph with <= 4 vertices and <= 6 edges."""
    gs = list(named_graphs().values())
    seen = set(gs)
    for g in generate_multigraphs(4, 6):
        if g not in seen:
            seen.add(g)
            gs.append(g)
    return gs


def write_corpus(directory, graphs):
    os.makedirs(directory, exist_ok=True)
    for name, g in graphs.items():
        with open(os.path.join(directory, f"{name}.txt"), "w") as fh:
            fh.write(format_graph(g))


def load_corpus(directory):
    out = {}
    for fn in sorted(os.listdir(directory)):
        if fn.endswith(".txt"):
            out[fn[:-4]] = read_graph(os.path.join(directory, fn))
    return out

"""Connected undirected multigraphs with loops, and the three edge surgeries.

Vertices are the integers ``0..n-1``.  Edges are stored as a sorted tuple of
``(u, v)`` pairs with ``u <= v``; a loop is ``(u, u)``.  Graphs are immutable
and compare by their labelled edge multiset.

Surgeries that merge two vertices ``u, v`` relabel deterministically: the
merged vertex takes ``min(u, v)`` and every vertex above ``max(u, v)`` shifts
down by one (see :func:`merge_relabel`).
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    DisconnectedGraph,
    GraphError,
    GraphFormatError,
    InvalidPartition,
    NoSuchEdge,
    SameVertex,
)


def _norm(u, v):
    return (u, v) if u <= v else (v, u)


class Multigraph:
    """An immutable connected multigraph.

    Derived data computed once: ``loops`` (count), ``m`` (non-loop edge
    count), ``mult`` (multiplicity per adjacent pair), ``pairs`` (the adjacent
    pairs in sorted order) and ``pair_index``.
    """

    __slots__ = ("n", "edges", "loops", "m", "mult", "pairs", "pair_index",
                 "_nbrs", "_hash")

    def __init__(self, n, edges=(), check_connected=True):
        n = int(n)
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        es = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
            es.append(_norm(u, v))
        es.sort()
        set_ = object.__setattr__
        set_(self, "n", n)
        set_(self, "edges", tuple(es))
        set_(self, "loops", sum(1 for u, v in es if u == v))
        set_(self, "m", len(es) - self.loops)
        set_(self, "mult", Counter(e for e in es if e[0] != e[1]))
        set_(self, "pairs", tuple(sorted(self.mult)))
        set_(self, "pair_index", {p: k for k, p in enumerate(self.pairs)})
        nbrs = [[] for _ in range(n)]
        for u, v in self.pairs:
            nbrs[u].append(v)
            nbrs[v].append(u)
        set_(self, "_nbrs", tuple(tuple(sorted(x)) for x in nbrs))
        set_(self, "_hash", hash((n, self.edges)))
        if check_connected and not _is_connected(n, self._nbrs):
            raise DisconnectedGraph(f"graph {self!r} is not connected")

    def __setattr__(self, name, value):
        raise AttributeError("Multigraph is immutable")

    def __reduce__(self):
        return (Multigraph, (self.n, self.edges, False))

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Multigraph({self.n}, {list(self.edges)})"

    @property
    def genus(self):
        """Cycle rank ``m - n + 1`` of the loopless part."""
        return self.m - self.n + 1

    def neighbors(self, v):
        return self._nbrs[v]

    def multiplicity(self, u, v):
        return self.mult.get(_norm(u, v), 0)

    def valence(self, v):
        """Non-loop valence, counting parallel edges."""
        return sum(self.multiplicity(v, w) for w in self._nbrs[v])

    def adjacent(self, u, v):
        return u != v and _norm(u, v) in self.mult

    def without_loops(self):
        if not self.loops:
            return self
        return Multigraph(self.n, [e for e in self.edges if e[0] != e[1]],
                          check_connected=False)

    def add_edge(self, u, v):
        return Multigraph(self.n, self.edges + (_norm(u, v),))


def _is_connected(n, nbrs, keep=None):
    verts = range(n) if keep is None else keep
    verts = list(verts)
    if not verts:
        return True
    allowed = set(verts)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if y in allowed and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(allowed)


def merge_relabel(n, u, v):
    """Vertex map used by every merging surgery: old index -> new index."""
    lo, hi = min(u, v), max(u, v)
    out = []
    for w in range(n):
        if w == hi:
            out.append(lo)
        elif w > hi:
            out.append(w - 1)
        else:
            out.append(w)
    return out


def _check_pair(g, u, v):
    if u == v:
        raise SameVertex(f"vertices {u} and {v} coincide")
    if not g.adjacent(u, v):
        raise NoSuchEdge(f"no edge between {u} and {v}")


def contract_edge(g, u, v):
    """G/e: merge u and v, turning the other ``m_uv - 1`` parallel copies into loops."""
    _check_pair(g, u, v)
    r = merge_relabel(g.n, u, v)
    key = _norm(u, v)
    edges = []
    dropped = False
    for a, b in g.edges:
        if (a, b) == key and not dropped:
            dropped = True
            continue
        edges.append((r[a], r[b]))
    return Multigraph(g.n - 1, edges)


def contract_pair(g, u, v):
    """G/(u,v): merge u and v and remove every edge between them."""
    _check_pair(g, u, v)
    r = merge_relabel(g.n, u, v)
    key = _norm(u, v)
    return Multigraph(g.n - 1, [(r[a], r[b]) for a, b in g.edges if (a, b) != key])


def delete_edge(g, u, v):
    """G minus one copy of the edge (u, v).

    Raises :class:`DisconnectedGraph` when the copy is a bridge.
    """
    key = _norm(u, v)
    if u == v:
        if key not in g.edges:
            raise NoSuchEdge(f"no loop at {u}")
    elif not g.adjacent(u, v):
        raise NoSuchEdge(f"no edge between {u} and {v}")
    edges = list(g.edges)
    edges.remove(key)
    return Multigraph(g.n, edges)


def is_bridge(g, u, v):
    if u == v:
        raise NoSuchEdge("a loop is never a bridge; expected two distinct vertices")
    if not g.adjacent(u, v):
        raise NoSuchEdge(f"no edge between {u} and {v}")
    if g.multiplicity(u, v) > 1:
        return False
    key = _norm(u, v)
    nbrs = [[w for w in g.neighbors(x) if _norm(x, w) != key] for x in range(g.n)]
    return not _is_connected(g.n, nbrs)


def non_bridge_pairs(g):
    return [p for p in g.pairs if not is_bridge(g, *p)]


@dataclass(frozen=True)
class VertexPartition:
    """Blocks are sorted tuples, ordered by their smallest vertex."""

    blocks: tuple

    @property
    def n(self):
        return sum(len(b) for b in self.blocks)

    @property
    def size(self):
        return self.n - len(self.blocks)

    def block_of(self, v):
        for k, b in enumerate(self.blocks):
            if v in b:
                return k
        raise InvalidPartition(f"vertex {v} is in no block")

    @classmethod
    def from_blocks(cls, blocks):
        bs = [tuple(sorted(b)) for b in blocks if len(b)]
        bs.sort()
        return cls(tuple(bs))


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def connected_partitions(g, i):
    """Partitions of the vertex set into ``n - i`` blocks, each inducing a connected subgraph."""
    if not 0 <= i <= g.n - 1:
        return []
    want = g.n - i
    out = []
    for part in _set_partitions(list(range(g.n))):
        if len(part) != want:
            continue
        if all(_is_connected(g.n, g._nbrs, keep=b) for b in part):
            out.append(VertexPartition.from_blocks(part))
    out.sort(key=lambda p: p.blocks)
    return out


def partition_graph(g, p):
    """Quotient graph on the blocks; intra-block edges and loops are discarded."""
    seen = [v for b in p.blocks for v in b]
    if sorted(seen) != list(range(g.n)):
        raise InvalidPartition(f"{p.blocks} is not a partition of 0..{g.n - 1}")
    for b in p.blocks:
        if not _is_connected(g.n, g._nbrs, keep=b):
            raise InvalidPartition(f"block {b} does not induce a connected subgraph")
    where = {}
    for k, b in enumerate(p.blocks):
        for v in b:
            where[v] = k
    edges = [(where[a], where[b]) for a, b in g.edges if where[a] != where[b]]
    return Multigraph(len(p.blocks), edges)


def laplacian(g):
    """Integer Laplacian D - A of the loopless part."""
    n = g.n
    Q = [[0] * n for _ in range(n)]
    for (u, v), k in g.mult.items():
        Q[u][v] -= k
        Q[v][u] -= k
        Q[u][u] += k
        Q[v][v] += k
    return Q


def bareiss_det(M):
    """Exact determinant of an integer matrix by fraction-free elimination."""
    A = [list(row) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def spanning_tree_count(g, drop=0):
    Q = laplacian(g)
    keep = [i for i in range(g.n) if i != drop]
    return abs(bareiss_det([[Q[i][j] for j in keep] for i in keep]))


# -- text format --------------------------------------------------------------

def parse_graph(text):
    """Parse the line format: vertex count, then one ``u v`` per edge; '#' comments."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphFormatError("empty graph description")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphFormatError(f"first line must be the vertex count, got {lines[0]!r}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line must hold two indices: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {line!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in {line!r}")
        edges.append((u, v))
    return Multigraph(n, edges)


def format_graph(g):
    return "".join([f"{g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges])


def read_graph(path):
    with open(path) as fh:
        return parse_graph(fh.read())


# -- small named graphs used as fixtures and by the CLI --------------------------

def path_graph(n):
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Multigraph(n, list(combinations(range(n), 2)))


def banana_graph(m, loops=0):
    """Two vertices joined by ``m`` parallel edges, with ``loops`` loops on vertex 0."""
    return Multigraph(2, [(0, 1)] * m + [(0, 0)] * loops)

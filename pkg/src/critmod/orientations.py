"""Acyclic orientations of multigraphs.

An orientation fixes one direction per adjacent vertex pair; all parallel
copies follow it and loops are ignored.  It is stored as an int ``code``: pair
``k`` of ``host.pairs`` sits at bit ``p - 1 - k``, clear for ``u -> v`` with
``u < v`` and set for ``v -> u``.  Ascending codes are lexicographic in the
direction vector, which is the enumeration order.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .divisors import context as _div_context
from .errors import NotAcyclic, NotEquivalent, NotSourceOrSink, ShapeMismatch
from .multigraph import contract_pair, delete_edge, merge_relabel


class Orientation:
    __slots__ = ("host", "code")

    def __init__(self, host, code):
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "code", code)

    def __setattr__(self, name, value):
        raise AttributeError("Orientation is immutable")

    def __reduce__(self):
        return (Orientation, (self.host, self.code))

    @classmethod
    def from_sources(cls, host, sources, check=True):
        """Build from a map ``pair -> source vertex`` covering every adjacent pair."""
        p = len(host.pairs)
        code = 0
        for k, (u, v) in enumerate(host.pairs):
            s = sources.get((u, v), sources.get((v, u)))
            if s is None:
                raise ShapeMismatch(f"no direction given for pair {(u, v)}")
            if s == v:
                code |= 1 << (p - 1 - k)
            elif s != u:
                raise ShapeMismatch(f"{s} is not an endpoint of {(u, v)}")
        a = cls(host, code)
        if check and not a.is_acyclic():
            raise NotAcyclic(f"{a.to_strings()} has a directed cycle")
        return a

    @classmethod
    def from_strings(cls, host, strings, check=True):
        src = {}
        for s in strings:
            a, b = s.split(">")
            a, b = int(a), int(b)
            src[(min(a, b), max(a, b))] = a
        if len(src) != len(host.pairs):
            raise ShapeMismatch("one direction per adjacent pair is required")
        return cls.from_sources(host, src, check)

    def __eq__(self, other):
        if not isinstance(other, Orientation):
            return NotImplemented
        return self.code == other.code and self.host == other.host

    def __hash__(self):
        return hash((self.host, self.code))

    def __repr__(self):
        return f"Orientation({self.to_strings()})"

    def arcs(self):
        """(source, target) per adjacent pair, in pair order."""
        p = len(self.host.pairs)
        out = []
        for k, (u, v) in enumerate(self.host.pairs):
            if (self.code >> (p - 1 - k)) & 1:
                out.append((v, u))
            else:
                out.append((u, v))
        return out

    def source_of(self, u, v):
        k = self.host.pair_index[(min(u, v), max(u, v))]
        p = len(self.host.pairs)
        a, b = self.host.pairs[k]
        return b if (self.code >> (p - 1 - k)) & 1 else a

    def out_masks(self):
        out = [0] * self.host.n
        for s, t in self.arcs():
            out[s] |= 1 << t
        return out

    def outdegree(self, v):
        """Out-multiplicity of v, counting parallel copies."""
        g = self.host
        return sum(g.mult[(min(s, t), max(s, t))] for s, t in self.arcs() if s == v)

    def sinks(self):
        out = self.out_masks()
        return [v for v in range(self.host.n) if not out[v]]

    def sources(self):
        inn = [0] * self.host.n
        for s, t in self.arcs():
            inn[t] |= 1 << s
        return [v for v in range(self.host.n) if not inn[v]]

    def has_unique_sink_at(self, q):
        return self.sinks() == [q]

    def is_acyclic(self):
        return kernels._pykernels._acyclic(self.host.n, self.out_masks())

    def to_strings(self):
        return sorted(f"{s}>{t}" for s, t in self.arcs())

    def sort_key(self):
        return tuple(self.to_strings())


def enumerate_acyclic(g):
    return [Orientation(g, c) for c in kernels.acyclic_codes(g.n, g.pairs)]


def enumerate_unique_sink(g, q):
    return [Orientation(g, c) for c in kernels.acyclic_codes(g.n, g.pairs, q)]


def divisor_of(a):
    """D_A with coordinate outdeg(v) - 1."""
    g = a.host
    d = [-1] * g.n
    for s, t in a.arcs():
        d[s] += g.mult[(min(s, t), max(s, t))]
    return tuple(d)


@lru_cache(maxsize=4096)
def _incidence(g):
    p = len(g.pairs)
    masks = [0] * g.n
    for k, (u, v) in enumerate(g.pairs):
        masks[u] |= 1 << (p - 1 - k)
        masks[v] |= 1 << (p - 1 - k)
    return tuple(masks)


def _is_source_or_sink(a, v):
    out = a.out_masks()
    if not out[v]:
        return True
    return all(not (out[w] >> v) & 1 for w in a.host.neighbors(v))


def source_sink_reverse(a, v):
    if not _is_source_or_sink(a, v):
        raise NotSourceOrSink(f"vertex {v} is neither a source nor a sink")
    return Orientation(a.host, a.code ^ _incidence(a.host)[v])


def _reversal_neighbours(a):
    for v in range(a.host.n):
        if a.host.neighbors(v) and _is_source_or_sink(a, v):
            yield Orientation(a.host, a.code ^ _incidence(a.host)[v])


def _bfs(a, target=None):
    dist = {a.code: 0}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if target is not None and x.code == target:
            return dist
        for y in _reversal_neighbours(x):
            if y.code not in dist:
                dist[y.code] = dist[x.code] + 1
                queue.append(y)
    return dist


def _same_host(a, b):
    if a.host != b.host:
        raise ShapeMismatch("orientations live on different graphs")


def are_equivalent(a, b):
    """Equivalence through linear equivalence of D_a and D_b."""
    _same_host(a, b)
    ctx = _div_context(a.host, 0)
    return ctx.reduce(divisor_of(a)) == ctx.reduce(divisor_of(b))


def are_equivalent_bfs(a, b):
    """Equivalence through reachability by source/sink reversals."""
    _same_host(a, b)
    return b.code in _bfs(a, b.code)


def reversal_distance(a, b):
    _same_host(a, b)
    dist = _bfs(a, b.code)
    if b.code not in dist:
        raise NotEquivalent("orientations are not related by source/sink reversals")
    return dist[b.code]


def reversal_class(a):
    return sorted(_bfs(a))


@dataclass(frozen=True)
class OrientationClass:
    canonical: Orientation
    sink: int


@lru_cache(maxsize=4096)
def _class_table(g, q):
    ctx = _div_context(g, q)
    return {ctx.reduce(divisor_of(b)): b for b in enumerate_unique_sink(g, q)}


def canonical_rep(a, q):
    """The unique orientation equivalent to a whose only sink is q."""
    key = _div_context(a.host, q).reduce(divisor_of(a))
    return OrientationClass(_class_table(a.host, q)[key], q)


# -- lifting and restriction across the three surgeries ----------------------

def lift(a, g, s, t):
    """Orientation on g extending ``a`` (on a graph with s, t merged) by s -> t."""
    small = a.host
    if small.n != g.n - 1:
        raise ShapeMismatch(f"{small.n} vertices cannot come from merging two of {g.n}")
    if not g.adjacent(s, t):
        raise ShapeMismatch(f"{s} and {t} are not adjacent in the target graph")
    r = merge_relabel(g.n, s, t)
    key = (min(s, t), max(s, t))
    src = {}
    for (x, y) in g.pairs:
        if (x, y) == key:
            src[key] = s
            continue
        sp = (min(r[x], r[y]), max(r[x], r[y]))
        if sp not in small.pair_index:
            raise ShapeMismatch(f"pair {(x, y)} has no image in the contracted graph")
        src[(x, y)] = x if r[x] == a.source_of(*sp) else y
    return Orientation.from_sources(g, src, check=False)


def lift_plus(a, g, u, v):
    """A_{e+}: u is the source of every copy of (u, v)."""
    return lift(a, g, u, v)


def lift_minus(a, g, u, v):
    """A_{e-}: v is the source of every copy of (u, v)."""
    return lift(a, g, v, u)


def restrict_delete(a, u, v, host=None):
    """A minus one copy of (u, v), on ``delete_edge(a.host, u, v)``."""
    g = a.host
    h = host if host is not None else delete_edge(g, u, v)
    src = {p: a.source_of(*p) for p in h.pairs}
    return Orientation.from_sources(h, src, check=False)


def restrict_contract(a, u, v, host=None):
    """Orientation induced on G/(u, v), or None when it has a directed cycle."""
    g = a.host
    h = host if host is not None else contract_pair(g, u, v)
    if h.n != g.n - 1:
        raise ShapeMismatch("host is not a contraction of a.host")
    r = merge_relabel(g.n, u, v)
    key = (min(u, v), max(u, v))
    src = {}
    for (x, y) in g.pairs:
        if (x, y) == key:
            continue
        s = a.source_of(x, y)
        sp = (min(r[x], r[y]), max(r[x], r[y]))
        prev = src.get(sp)
        if prev is not None and prev != r[s]:
            return None
        src[sp] = r[s]
    b = Orientation.from_sources(h, src, check=False)
    return b if b.is_acyclic() else None


def is_contractible(a, u, v):
    return restrict_contract(a, u, v) is not None

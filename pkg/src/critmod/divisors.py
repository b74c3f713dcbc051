"""Divisors on graphs: q-reduction, linear equivalence, Baker-Norine rank.

A divisor is a plain tuple of ints indexed by vertex.  Everything here works
on the loopless part of the graph; loops never touch the Laplacian.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .multigraph import laplacian


def degree(d):
    return sum(d)


@dataclass(frozen=True)
class DivisorClass:
    reduced: tuple
    q: int

    @property
    def degree(self):
        return sum(self.reduced)


class _Context:
    """Per-(graph, q) tables: Laplacian, a positive borrowing vector, reduce and rank memos."""

    def __init__(self, g, q):
        self.g = g
        self.n = g.n
        self.q = q
        self.Q = laplacian(g)
        self.val = [self.Q[v][v] for v in range(g.n)]
        self.nbrs = [[(w, g.multiplicity(v, w)) for w in g.neighbors(v)] for v in range(g.n)]
        self.borrow, self.borrow_gain = self._borrow_vector()
        self.rank_memo = {}
        self.reduce_memo = {}
        self._superstables = None

    def _borrow_vector(self):
        # integer w >= 0 on V-q with (Q_q w) = N * 1; firing -w adds N chips off q
        n, q = self.n, self.q
        idx = [v for v in range(n) if v != q]
        if not idx:
            return None, 0
        k = len(idx)
        A = [[Fraction(self.Q[a][b]) for b in idx] + [Fraction(1)] for a in idx]
        for c in range(k):
            p = next(r for r in range(c, k) if A[r][c] != 0)
            A[c], A[p] = A[p], A[c]
            piv = A[c][c]
            A[c] = [x / piv for x in A[c]]
            for r in range(k):
                if r != c and A[r][c] != 0:
                    f = A[r][c]
                    A[r] = [x - f * y for x, y in zip(A[r], A[c])]
        sol = [A[r][k] for r in range(k)]
        den = 1
        for s in sol:
            den = den * s.denominator // _gcd(den, s.denominator)
        w = [0] * n
        for v, s in zip(idx, sol):
            w[v] = int(s * den)
        return w, den

    def fire_set(self, d, S):
        """Fire every vertex of S once (chips move along edges leaving S)."""
        d = list(d)
        for v in S:
            for w, k in self.nbrs[v]:
                if w not in S:
                    d[v] -= k
                    d[w] += k
        return d

    def burn(self, d):
        """Dhar's burning from q; returns the unburnt set (empty when superstable)."""
        q = self.q
        burnt = {q}
        grew = True
        while grew:
            grew = False
            for v in range(self.n):
                if v in burnt:
                    continue
                into = sum(k for w, k in self.nbrs[v] if w in burnt)
                if d[v] < into:
                    burnt.add(v)
                    grew = True
        return set(range(self.n)) - burnt

    def reduce(self, d):
        key = tuple(d)
        hit = self.reduce_memo.get(key)
        if hit is None:
            hit = self.reduce_memo[key] = self._reduce(key)
        return hit

    def _reduce(self, d):
        n, q = self.n, self.q
        d = list(d)
        if n == 1:
            return tuple(d)
        worst = min(d[v] for v in range(n) if v != q)
        if worst < 0:
            times = -(-(-worst) // self.borrow_gain)
            w = self.borrow
            for a in range(n):
                d[a] += times * sum(self.Q[a][b] * w[b] for b in range(n))
        while True:
            S = self.burn(d)
            if not S:
                return tuple(d)
            d = self.fire_set(d, S)

    def superstables(self):
        """q-reduced divisors of q-degree 0, as full-length tuples."""
        if self._superstables is None:
            q = self.q
            ranges = [range(1) if v == q else range(self.val[v]) for v in range(self.n)]
            out = [b for b in product(*ranges) if not self.burn(b)]
            out.sort(key=lambda b: (sum(b), b))
            self._superstables = out
        return self._superstables

    def rank(self, d):
        r = self.reduce(d)
        memo = self.rank_memo
        if r in memo:
            return memo[r]
        if r[self.q] < 0:
            memo[r] = -1
            return -1
        best = None
        for v in range(self.n):
            e = list(r)
            e[v] -= 1
            k = self.rank(e)
            if best is None or k < best:
                best = k
            if best == -1:
                break
        memo[r] = best + 1
        return best + 1


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=4096)
def _context(g, q):
    return _Context(g.without_loops(), q)


def context(g, q):
    return _context(g, q)


def _check(g, d):
    if len(d) != g.n:
        raise ValueError(f"divisor length {len(d)} does not match {g.n} vertices")


def q_reduce(g, d, q):
    _check(g, d)
    return _context(g, q).reduce(d)


def linearly_equivalent(g, d1, d2, q=0):
    _check(g, d1)
    _check(g, d2)
    if sum(d1) != sum(d2):
        return False
    ctx = _context(g, q)
    return ctx.reduce(d1) == ctx.reduce(d2)


def divisor_class(g, d, q):
    return DivisorClass(q_reduce(g, d, q), q)


def rank(g, d, q=0):
    """Baker-Norine rank; -1 when d has no effective equivalent."""
    _check(g, d)
    return _context(g, q).rank(tuple(d))


def is_effective_class(g, d, q=0):
    return q_reduce(g, d, q)[q] >= 0


def genus(g):
    return g.genus


def canonical_divisor(g):
    Q = laplacian(g)
    return tuple(Q[v][v] - 2 for v in range(g.n))


def riemann_roch_check(g, d, q=0):
    K = canonical_divisor(g)
    lhs = rank(g, d, q) - rank(g, tuple(k - x for k, x in zip(K, d)), q)
    return lhs == sum(d) - g.genus + 1


def superstable_vectors(g, q):
    return list(_context(g, q).superstables())


def picard_classes(g, deg, q=0):
    """All divisor classes of the given degree, one q-reduced representative each."""
    out = []
    for b in _context(g, q).superstables():
        r = list(b)
        r[q] = deg - sum(b)
        out.append(DivisorClass(tuple(r), q))
    return out


def nonspecial_classes(g, q=0):
    """Classes of degree g - 1 and rank -1."""
    return [c for c in picard_classes(g, g.genus - 1, q) if c.reduced[q] < 0]


def principal_divisor(g, f):
    """Divisor of firing vertex v exactly f[v] times."""
    Q = laplacian(g)
    return tuple(-sum(Q[a][b] * f[b] for b in range(g.n)) for a in range(g.n))

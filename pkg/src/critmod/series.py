"""Hilbert coefficients of R/M_G, R/I_G and the Bayer-Sturmfels module.

All counts come from superstables and divisor classes; no ideal generators
are ever manipulated.  Graphs are treated loopless here; callers shift by the
loop count where a twist is wanted.
"""

from dataclasses import dataclass, field
from itertools import combinations

from . import poly
from .divisors import context, picard_classes
from .errors import NotStabilized


@dataclass(frozen=True)
class HilbertData:
    h: tuple
    k_polynomial: tuple = field(default=None)

    @property
    def D(self):
        return len(self.h) - 1

    def to_json(self):
        return {"h": list(self.h), "k_polynomial": list(self.k_polynomial or ())}


def k_polynomial_from(h):
    """K(t) with K(t)/(1-t) matching h; the last two coefficients must agree."""
    h = tuple(h.h) if isinstance(h, HilbertData) else tuple(h)
    if len(h) < 2 or h[-1] != h[-2]:
        raise NotStabilized(f"Hilbert coefficients {list(h)} have not stabilized")
    return poly.trim(h[t] - (h[t - 1] if t else 0) for t in range(len(h)))


def _with_k(h):
    try:
        k = k_polynomial_from(h)
    except NotStabilized:
        k = None
    return HilbertData(tuple(h), k)


def parking_monomial_generators(g, q):
    """Exponent vector of m_S for every nonempty S inside V - q (loops ignored)."""
    others = [v for v in range(g.n) if v != q]
    out = []
    for size in range(1, len(others) + 1):
        for S in combinations(others, size):
            inside = set(S)
            e = [0] * g.n
            for v in S:
                e[v] = sum(g.multiplicity(v, w) for w in g.neighbors(v) if w not in inside)
            out.append(tuple(e))
    return out


def superstables(g, q):
    """Superstable configurations as vectors on the vertices other than q."""
    return [tuple(b[v] for v in range(g.n) if v != q) for b in context(g, q).superstables()]


def superstable_degrees(g, q):
    return [sum(b) for b in context(g, q).superstables()]


def hilb_parking(g, q, D):
    """h_d of R/M_G: monomials outside M_G of degree d."""
    degs = superstable_degrees(g, q)
    return _with_k([sum(1 for s in degs if s <= d) for d in range(D + 1)])


def hilb_toppling(g, d, q=0):
    """Number of divisor classes of degree d with nonnegative rank."""
    return sum(1 for c in picard_classes(g, d, q) if c.reduced[q] >= 0)


def hilb_toppling_data(g, D, q=0):
    return _with_k([hilb_toppling(g, d, q) for d in range(D + 1)])


def bsc_coefficient(g, k, q=0):
    """Classes of degree g - 1 + k and rank k - 1."""
    gen = g.genus
    if k < 0:
        return 0
    ctx = context(g, q)
    return sum(1 for c in picard_classes(g, gen - 1 + k, q) if ctx.rank(c.reduced) == k - 1)


def bsc_coefficients(g, q, D):
    return _with_k([bsc_coefficient(g, k, q) for k in range(D + 1)])


def reciprocity_polynomial(g, q):
    """t^ell * sum over superstables b of t^(genus - deg b)."""
    gen = g.genus
    return poly.shift(poly.from_counts(gen - s for s in superstable_degrees(g, q)), g.loops)


def monomials_outside_parking(g, q, d):
    """Direct count of degree-d monomials divisible by no m_S."""
    gens = parking_monomial_generators(g, q)
    n = g.n
    count = 0
    for mono in _monomials(n, d):
        if not any(all(mono[i] >= e[i] for i in range(n)) for e in gens):
            count += 1
    return count


def _monomials(n, d):
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in _monomials(n - 1, d - a):
            yield (a,) + rest

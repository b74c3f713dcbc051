"""Orientation-labelled presentations of the two critical modules.

A presentation is a free module on labelled generators modulo GF(2) relations.
Each relation is a tuple of ``(monomial, generator)`` terms; a repeated term
cancels.  Graded pieces are finite GF(2) spaces realised as bitsets over the
degree-``t`` ambient basis.
"""

from .. import kernels
from ..multigraph import contract_pair, merge_relabel
from ..orientations import (canonical_rep, divisor_of, enumerate_unique_sink,
                            lift_minus, lift_plus)
from ..series import HilbertData, k_polynomial_from
from ..errors import NotStabilized
from .linalg import add_mono, monomials, xor_terms


class ModulePresentation:
    """Graded generators plus relations over GF(2).

    ``labels`` holds whatever names the generators (orientations here) and
    ``degrees`` their degrees.  ``weights`` is an optional fine grading: the
    term ``(a, g)`` sits in multidegree ``a + weights[g]`` and every relation
    must be homogeneous for it.
    """

    def __init__(self, var_count, labels, degrees, relations, weights=None, name=""):
        self.var_count = var_count
        self.labels = tuple(labels)
        self.degrees = tuple(degrees)
        self.relations = tuple(tuple(sorted(r)) for r in relations)
        self.weights = tuple(weights) if weights is not None else None
        self.name = name
        self._pieces = {}
        self._fine = {}

    def __repr__(self):
        return (f"ModulePresentation({self.name!r}, vars={self.var_count}, "
                f"gens={len(self.labels)}, rels={len(self.relations)})")

    @property
    def generators(self):
        return list(zip(self.labels, self.degrees))

    def relation_degree(self, r):
        a, g = r[0]
        return sum(a) + self.degrees[g]

    def relation_degrees(self):
        out = {}
        for r in self.relations:
            d = self.relation_degree(r)
            out[d] = out.get(d, 0) + 1
        return out

    def index_of(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"{label!r} is not a generator of {self.name or self!r}")

    def check_homogeneous(self):
        for r in self.relations:
            if len({sum(a) + self.degrees[g] for a, g in r}) > 1:
                return False
            if self.weights is not None:
                keys = {tuple(x + y for x, y in zip(a, self.weights[g])) for a, g in r}
                if len(keys) > 1:
                    return False
        return True


class GradedPiece:
    """Degree-``t`` slice: ambient basis, its index, and relation rows as bitsets."""

    __slots__ = ("degree", "basis", "index", "rows", "_rank")

    def __init__(self, degree, basis, rows):
        self.degree = degree
        self.basis = basis
        self.index = {b: k for k, b in enumerate(basis)}
        self.rows = rows
        self._rank = None

    @property
    def rank(self):
        if self._rank is None:
            self._rank = kernels.gf2_rank(self.rows)
        return self._rank

    @property
    def dim(self):
        return len(self.basis) - self.rank

    def vector(self, terms):
        v = 0
        for t in terms:
            v ^= 1 << self.index[t]
        return v


def graded_piece(p, t):
    hit = p._pieces.get(t)
    if hit is not None:
        return hit
    nv = p.var_count
    basis = []
    for g, dg in enumerate(p.degrees):
        if t >= dg:
            basis.extend((a, g) for a in monomials(nv, t - dg))
    basis.sort()
    piece = GradedPiece(t, basis, [])
    rows = []
    for r in p.relations:
        dr = p.relation_degree(r)
        if dr > t:
            continue
        for mu in monomials(nv, t - dr):
            v = 0
            for a, g in r:
                v ^= 1 << piece.index[(add_mono(mu, a), g)]
            if v:
                rows.append(v)
    piece.rows = rows
    p._pieces[t] = piece
    return piece


def _fine_dim(p, key, rel_keys, rel_masks):
    gens = [g for g, w in enumerate(p.weights) if all(k >= x for k, x in zip(key, w))]
    if not gens:
        return 0
    rows = [m for rk, m in zip(rel_keys, rel_masks) if all(k >= x for k, x in zip(key, rk))]
    return len(gens) - kernels.gf2_rank(rows)


def _fine_graded_dim(p, t):
    hit = p._fine.get(t)
    if hit is not None:
        return hit
    if "rel" not in p._fine:
        rk, rm = [], []
        for r in p.relations:
            a, g = r[0]
            rk.append(tuple(x + y for x, y in zip(a, p.weights[g])))
            m = 0
            for _, h in r:
                m ^= 1 << h
            rm.append(m)
        p._fine["rel"] = (rk, rm)
    rel_keys, rel_masks = p._fine["rel"]
    keys = set()
    for g, dg in enumerate(p.degrees):
        if t >= dg:
            w = p.weights[g]
            for a in monomials(p.var_count, t - dg):
                keys.add(tuple(x + y for x, y in zip(a, w)))
    total = sum(_fine_dim(p, k, rel_keys, rel_masks) for k in keys)
    p._fine[t] = total
    return total


def graded_dim(p, t, fine=None):
    """dim_K of the degree-t piece; the fine grading is used when available."""
    if t < 0:
        return 0
    use_fine = p.weights is not None if fine is None else fine
    if use_fine:
        return _fine_graded_dim(p, t)
    return graded_piece(p, t).dim


def hilbert_function(p, D, fine=None):
    h = tuple(graded_dim(p, t, fine) for t in range(D + 1))
    try:
        k = k_polynomial_from(h)
    except NotStabilized:
        k = None
    return HilbertData(h, k)


# -- the two standard presentations ---------------------------------------------

def _sorted_generators(g, sink):
    return sorted(enumerate_unique_sink(g, sink), key=lambda a: a.sort_key())


def _weight(a):
    return tuple(-x for x in divisor_of(a))


def _unit(n, i, m):
    e = [0] * n
    e[i] = m
    return tuple(e)


def partition_syzygy_data(g, sink):
    """(i, j, m, A+, A-) for every adjacent pair and every unique-sink B on G/(v_i, v_j)."""
    out = []
    for (i, j) in g.pairs:
        P = contract_pair(g, i, j)
        r = merge_relabel(g.n, i, j)
        for B in sorted(enumerate_unique_sink(P, r[sink]), key=lambda b: b.sort_key()):
            out.append((i, j, g.mult[(i, j)], lift_plus(B, g, i, j), lift_minus(B, g, i, j)))
    return out


class _GeneratorIndex(dict):
    def __init__(self, gens):
        super().__init__((a.code, k) for k, a in enumerate(gens))

    def __missing__(self, code):
        raise KeyError(f"orientation code {code} is not a unique-sink generator")


def gpark_presentation(g, sink):
    gens = _sorted_generators(g, sink)
    idx = _GeneratorIndex(gens)
    n = g.n
    rels = []
    for i, j, m, ap, am in partition_syzygy_data(g, sink):
        plus_ok = ap.has_unique_sink_at(sink)
        minus_ok = am.has_unique_sink_at(sink)
        if j == sink or not minus_ok:
            terms = [(_unit(n, i, m), idx[ap.code])]
        elif i == sink or not plus_ok:
            terms = [(_unit(n, j, m), idx[am.code])]
        else:
            terms = [(_unit(n, i, m), idx[ap.code]), (_unit(n, j, m), idx[am.code])]
        rels.append(terms)
    return ModulePresentation(n, gens, [g.loops] * len(gens), rels,
                              weights=[_weight(a) for a in gens], name="GC")


def toppling_presentation(g, sink):
    gens = _sorted_generators(g, sink)
    idx = {a.code: k for k, a in enumerate(gens)}
    n = g.n
    rels = []
    for i, j, m, ap, am in partition_syzygy_data(g, sink):
        cp = canonical_rep(ap, sink).canonical
        cm = canonical_rep(am, sink).canonical
        rels.append([(_unit(n, i, m), idx[cp.code]), (_unit(n, j, m), idx[cm.code])])
    return ModulePresentation(n, gens, [g.loops] * len(gens), rels, name="C")


def fold_mono(a, i1, i2):
    r = merge_relabel(len(a), i1, i2)
    out = [0] * (len(a) - 1)
    for k, x in enumerate(a):
        out[r[k]] += x
    return tuple(out)


def specialize_to_Re(p, i1, i2):
    """Tensor with R_e: x_{i1} and x_{i2} both become x_{12} at index min(i1, i2)."""
    if i1 == i2 or not (0 <= i1 < p.var_count and 0 <= i2 < p.var_count):
        raise ValueError(f"cannot fold variables {i1} and {i2}")
    rels = []
    for r in p.relations:
        terms = xor_terms((fold_mono(a, i1, i2), g) for a, g in r)
        if terms:
            rels.append(terms)
    weights = None
    if p.weights is not None:
        weights = [fold_mono(w, i1, i2) for w in p.weights]
    return ModulePresentation(p.var_count - 1, p.labels, p.degrees, rels, weights,
                              name=f"{p.name}(x) R_e")


def quotient_by_generator_multiples(p, var):
    if not 0 <= var < p.var_count:
        raise ValueError(f"no variable {var}")
    extra = [[(_unit(p.var_count, var, 1), g)] for g in range(len(p.labels))]
    return ModulePresentation(p.var_count, p.labels, p.degrees, list(p.relations) + extra,
                              p.weights, name=f"{p.name}/x{var}")


def free_module(var_count, degrees=(0,)):
    return ModulePresentation(var_count, [f"e{k}" for k in range(len(degrees))], degrees, [],
                              name="free")

"""Tutte polynomial by memoized deletion-contraction."""

import threading

from . import poly
from .multigraph import contract_edge, delete_edge, is_bridge


class BiPoly:
    """Bivariate integer polynomial ``{(i, j): c}`` for ``c * x**i * y**j``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    def __mul__(self, other):
        out = {}
        for (a, b), c in self.terms.items():
            for (d, e), f in other.terms.items():
                out[(a + d, b + e)] = out.get((a + d, b + e), 0) + c * f
        return BiPoly(out)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"BiPoly({self.to_str()})"

    def evaluate(self, x, y):
        return sum(c * x ** i * y ** j for (i, j), c in self.terms.items())

    def at_x1(self):
        """Univariate polynomial T(1, t) in the y variable."""
        out = {}
        for (i, j), c in self.terms.items():
            out[j] = out.get(j, 0) + c
        return poly.trim(out.get(j, 0) for j in range(max(out, default=-1) + 1))

    def to_json(self):
        return [[i, j, str(c)] for (i, j), c in sorted(self.terms.items())]

    def to_str(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (-kv[0][0] - kv[0][1], -kv[0][0])):
            mono = "*".join(s for s in (_pw("x", i), _pw("y", j)) if s)
            parts.append(mono if c == 1 and mono else (f"{c}*{mono}" if mono else str(c)))
        return " + ".join(parts)


def _pw(v, k):
    return "" if k == 0 else (v if k == 1 else f"{v}^{k}")


_memo = {}
_lock = threading.Lock()


def clear_cache():
    with _lock:
        _memo.clear()


def _first_non_bridge(g):
    for u, v in g.pairs:
        if not is_bridge(g, u, v):
            return u, v
    return None


def tutte_polynomial(g):
    hit = _memo.get(g)
    if hit is not None:
        return hit
    if g.loops:
        res = BiPoly.monomial(0, g.loops) * tutte_polynomial(g.without_loops())
    else:
        e = _first_non_bridge(g)
        if e is None:
            res = BiPoly.monomial(g.m, 0)
        else:
            res = tutte_polynomial(delete_edge(g, *e)) + tutte_polynomial(contract_edge(g, *e))
    with _lock:
        _memo.setdefault(g, res)
    return res


def tutte_eval(g, x, y):
    return tutte_polynomial(g).evaluate(x, y)


def tutte_eval_1_t(g):
    return tutte_polynomial(g).at_x1()

"""Monomial bookkeeping for graded pieces."""

from functools import lru_cache


@lru_cache(maxsize=None)
def monomials(n, d):
    """Exponent vectors of degree d in n variables, lexicographically descending."""
    if d < 0:
        return ()
    if n == 0:
        return ((),) if d == 0 else ()
    if n == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        for rest in monomials(n - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


def add_mono(a, b):
    return tuple(x + y for x, y in zip(a, b))


def xor_terms(terms):
    """Sorted GF(2) sum of terms: pairs cancel."""
    seen = set()
    for t in terms:
        seen ^= {t}
    return tuple(sorted(seen))

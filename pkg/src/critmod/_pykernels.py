"""Pure-Python versions of the hot kernels.

Both backends share one calling convention:

``acyclic_codes(n, pairs, sink)``
    Codes of the acyclic orientations of the simple graph on ``n`` vertices
    with adjacent ``pairs`` (each ``(u, v)``, ``u < v``).  Pair ``k`` is
    encoded by bit ``p - 1 - k`` of the code: clear means ``u -> v``, set
    means ``v -> u``.  Codes come back in ascending order, which is the
    lexicographic order of the direction vector.  When ``sink >= 0`` only
    orientations whose unique sink is ``sink`` are returned.

``gf2_rank_extended(base, extra)``
    Rows are Python ints used as bitsets.  Returns ``(rank(base),
    rank(base + extra) - rank(base))``.
"""

BACKEND = "python"


def _acyclic(n, out):
    alive = (1 << n) - 1
    while alive:
        for v in range(n):
            bit = 1 << v
            if alive & bit and not out[v] & alive:
                alive ^= bit
                break
        else:
            return False
    return True


def acyclic_codes(n, pairs, sink=-1):
    p = len(pairs)
    shifts = [p - 1 - k for k in range(p)]
    result = []
    for code in range(1 << p):
        out = [0] * n
        for k in range(p):
            u, v = pairs[k]
            if (code >> shifts[k]) & 1:
                out[v] |= 1 << u
            else:
                out[u] |= 1 << v
        if sink >= 0:
            if out[sink]:
                continue
            if any(not out[w] for w in range(n) if w != sink):
                continue
        if _acyclic(n, out):
            result.append(code)
    return result


def gf2_rank_extended(base, extra=()):
    piv = {}

    def insert(row):
        while row:
            h = row.bit_length()
            q = piv.get(h)
            if q is None:
                piv[h] = row
                return 1
            row ^= q
        return 0

    rb = 0
    for r in base:
        rb += insert(r)
    re = 0
    for r in extra:
        re += insert(r)
    return rb, re

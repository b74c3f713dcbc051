# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; same contract as ``_pykernels``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

cdef extern from *:
    """
    static inline int crit_clz64(unsigned long long x) { return __builtin_clzll(x); }
    """
    int crit_clz64(unsigned long long x) nogil

BACKEND = "compiled"


cdef inline bint _acyclic(int n, uint64_t* out) nogil:
    cdef uint64_t alive = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    cdef int v
    cdef bint found
    while alive:
        found = False
        for v in range(n):
            if (alive >> v) & 1 and (out[v] & alive) == 0:
                alive ^= (<uint64_t>1 << v)
                found = True
                break
        if not found:
            return False
    return True


def acyclic_codes(int n, pairs, int sink=-1):
    cdef int p = len(pairs)
    if n > 64 or p > 62:
        raise ValueError("compiled kernel supports at most 64 vertices and 62 pairs")
    cdef int* pu = <int*>malloc(max(p, 1) * sizeof(int))
    cdef int* pv = <int*>malloc(max(p, 1) * sizeof(int))
    cdef uint64_t* out = <uint64_t*>malloc(max(n, 1) * sizeof(uint64_t))
    cdef int k, w
    cdef uint64_t code, total
    cdef bint ok
    result = []
    try:
        for k in range(p):
            pu[k] = pairs[k][0]
            pv[k] = pairs[k][1]
        total = <uint64_t>1 << p
        code = 0
        while code < total:
            memset(out, 0, n * sizeof(uint64_t))
            for k in range(p):
                if (code >> (p - 1 - k)) & 1:
                    out[pv[k]] |= <uint64_t>1 << pu[k]
                else:
                    out[pu[k]] |= <uint64_t>1 << pv[k]
            ok = True
            if sink >= 0:
                if out[sink]:
                    ok = False
                else:
                    for w in range(n):
                        if w != sink and out[w] == 0:
                            ok = False
                            break
            if ok and _acyclic(n, out):
                result.append(code)
            code += 1
    finally:
        free(pu)
        free(pv)
        free(out)
    return result


cdef inline int _lead(uint64_t* row, int words) nogil:
    cdef int w
    for w in range(words - 1, -1, -1):
        if row[w]:
            return w * 64 + 63 - crit_clz64(row[w])
    return -1


cdef int _insert(uint64_t* mat, int* piv, int* count, uint64_t* row, int words) nogil:
    cdef int lead, j
    cdef uint64_t* q
    while True:
        lead = _lead(row, words)
        if lead < 0:
            return 0
        if piv[lead] < 0:
            memcpy(mat + <size_t>count[0] * words, row, words * sizeof(uint64_t))
            piv[lead] = count[0]
            count[0] += 1
            return 1
        q = mat + <size_t>piv[lead] * words
        for j in range(lead // 64 + 1):
            row[j] ^= q[j]


cdef void _load(object r, uint64_t* dst, int words):
    cdef bytes b = (<object>r).to_bytes(words * 8, "little")
    memcpy(dst, <char*>b, words * 8)


def gf2_rank_extended(base, extra=()):
    base = list(base)
    extra = list(extra)
    cdef int nrows = len(base) + len(extra)
    if nrows == 0:
        return 0, 0
    cdef int nbits = 1
    for r in base:
        if r.bit_length() > nbits:
            nbits = r.bit_length()
    for r in extra:
        if r.bit_length() > nbits:
            nbits = r.bit_length()
    cdef int words = (nbits + 63) // 64
    cdef int ncols = words * 64
    cdef uint64_t* mat = <uint64_t*>malloc(<size_t>min(nrows, ncols) * words * sizeof(uint64_t))
    cdef int* piv = <int*>malloc(ncols * sizeof(int))
    cdef uint64_t* row = <uint64_t*>malloc(words * sizeof(uint64_t))
    cdef int count = 0
    cdef int rb = 0, re = 0, i
    try:
        for i in range(ncols):
            piv[i] = -1
        for r in base:
            if count == ncols:
                break
            _load(r, row, words)
            rb += _insert(mat, piv, &count, row, words)
        for r in extra:
            if count == ncols:
                break
            _load(r, row, words)
            re += _insert(mat, piv, &count, row, words)
    finally:
        free(mat)
        free(piv)
        free(row)
    return rb, re

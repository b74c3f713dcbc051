"""Univariate integer polynomials as ascending coefficient tuples.

Trailing zeros are always trimmed, so the zero polynomial is ``()``.
"""


def trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def add(a, b):
    n = max(len(a), len(b))
    return trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def neg(a):
    return tuple(-x for x in a)


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def power(a, k):
    out = (1,)
    for _ in range(k):
        out = mul(out, a)
    return out


def shift(a, k):
    """Multiply by t**k (k >= 0)."""
    return trim((0,) * k + tuple(a)) if a else ()


def degree(a):
    return len(a) - 1


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def reciprocal(a, d):
    """Coefficients of t**d * a(1/t); needs deg(a) <= d."""
    if len(a) > d + 1:
        raise ValueError(f"degree {len(a) - 1} exceeds {d}")
    padded = list(a) + [0] * (d + 1 - len(a))
    return trim(reversed(padded))


def from_counts(values):
    """Polynomial sum of t**v over an iterable of exponents."""
    out = []
    for v in values:
        if v >= len(out):
            out.extend([0] * (v + 1 - len(out)))
        out[v] += 1
    return trim(out)


def to_str(a, var="t"):
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c == 1:
            s = mono
        elif mono and c == -1:
            s = "-" + mono
        else:
            s = f"{c}{'*' + mono if mono else ''}"
        parts.append(s)
    return " + ".join(parts).replace("+ -", "- ")

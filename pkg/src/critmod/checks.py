"""Whole-graph verification routines shared by the CLI and the acceptance tests."""

from . import poly
from .betti import alternating_polynomial, tutte_side
from .divisors import (canonical_divisor, context, nonspecial_classes, picard_classes, rank,
                       riemann_roch_check)
from .gradedalg import gpark_presentation, hilbert_function, toppling_presentation
from .multigraph import spanning_tree_count
from .orientations import divisor_of, enumerate_unique_sink
from .report import CheckResult
from .series import (bsc_coefficient, hilb_toppling, k_polynomial_from, monomials_outside_parking,
                     reciprocity_polynomial)
from .tutte import tutte_eval, tutte_eval_1_t


def merino_check(g, sink, D=None):
    """K-polynomial of the G-parking presentation = T(1, t) = reciprocity polynomial."""
    D = g.genus + g.loops + 2 if D is None else D
    k_alg = hilbert_function(gpark_presentation(g, sink), D).k_polynomial
    k_tutte = tutte_eval_1_t(g)
    k_rec = reciprocity_polynomial(g, sink)
    ok = k_alg is not None and k_alg == k_tutte == k_rec
    return CheckResult("merino", ok, {"presentation": list(k_alg or ()), "tutte": list(k_tutte),
                                      "reciprocity": list(k_rec), "max_degree": D})


def betti_tutte_check(g, sink):
    lhs = alternating_polynomial(g, sink)
    rhs = tutte_side(g)
    return CheckResult("betti-tutte-identity", lhs == rhs,
                       {"alternating": list(lhs), "tutte_times_1_minus_t": list(rhs)})


def riemann_roch_suite(g, q=0, max_deg=None):
    """Riemann-Roch on every class of degree -2..max_deg plus the large-degree rank formula."""
    h = g.without_loops()
    gen = h.genus
    max_deg = 2 * gen if max_deg is None else max_deg
    bad = []
    for d in range(-2, max_deg + 1):
        for c in picard_classes(h, d, q):
            if not riemann_roch_check(h, c.reduced, q):
                bad.append(list(c.reduced))
    rk_K = rank(h, canonical_divisor(h), q)
    large = []
    for d in range(2 * gen - 1, 2 * gen + 3):
        for c in picard_classes(h, d, q):
            if rank(h, c.reduced, q) != d - gen:
                large.append(list(c.reduced))
    N = spanning_tree_count(h)
    counts = {d: len(picard_classes(h, d, q)) for d in range(-2, max_deg + 1)}
    t11 = tutte_eval(h, 1, 1)
    ok = not bad and rk_K == gen - 1 and not large and t11 == N and all(
        c == N for c in counts.values())
    return CheckResult("riemann-roch", ok, {
        "genus": gen, "rank_K": rk_K, "rr_failures": bad, "large_degree_failures": large,
        "spanning_trees": N, "T11": t11, "class_counts": [counts[d] for d in sorted(counts)]})


def nonspecial_check(g, q=0):
    """Unique-sink orientations biject onto the nonspecial classes via D_A."""
    h = g.without_loops()
    ctx = context(h, q)
    got = sorted(ctx.reduce(divisor_of(a)) for a in enumerate_unique_sink(h, q))
    want = sorted(c.reduced for c in nonspecial_classes(h, q))
    return CheckResult("nonspecial-bijection", got == want and len(set(got)) == len(got),
                       {"orientations": len(got), "classes": len(want)})


def appendix_suite(g, q=0, K=None):
    """Hilbert-coefficient relations for the Bayer-Sturmfels module (loops removed)."""
    h = g.without_loops()
    gen = h.genus
    N = spanning_tree_count(h)
    K = gen + 3 if K is None else K
    top = max(K, 2 * gen + 2)
    bsc = {k: bsc_coefficient(h, k, q) for k in range(-gen, top + 1)}
    topp = {d: hilb_toppling(h, d, q) for d in range(-1, max(2 * gen, top) + 1)}

    def h_si(d):
        return topp[d] if d in topp else (0 if d < 0 else N)

    duality = [k for k in range(-gen, K + 1) if bsc[k] != N - h_si(gen - 1 - k)]
    stable = [k for k in range(max(2 * gen - 1, 0), top + 1) if bsc[k] != N]
    h_bsc = [bsc[k] for k in range(top + 1)]
    k_bsc = k_polynomial_from(h_bsc)
    k_si = k_polynomial_from([h_si(d) for d in range(top + 1)])
    recip = poly.reciprocal(k_si, gen) if len(k_si) <= gen + 1 else None
    pres = hilbert_function(toppling_presentation(h, q), top).h
    park = [monomials_outside_parking(h, q, d) for d in range(top + 1)]
    topp_row = [h_si(d) for d in range(top + 1)]
    ok = (not duality and not stable and poly.degree(k_bsc) == gen and recip == k_bsc
          and list(pres) == h_bsc and park == topp_row)
    return CheckResult("appendix", ok, {
        "genus": gen, "N": N, "bsc_h": h_bsc, "toppling_presentation_h": list(pres),
        "duality_failures": duality, "stability_failures": stable,
        "bsc_k": list(k_bsc), "si_k": list(k_si), "reciprocal_si_k": list(recip or ()),
        "parking_h": park, "toppling_h": topp_row})

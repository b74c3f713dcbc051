"""Degree-wise verification of the two Tutte short exact sequences."""

from dataclasses import dataclass, field

from .. import kernels
from .maps import (build_phi0, build_phi1, build_psi0, build_psi1, tutte_setup,
                   verify_map_spec)
from .presentation import graded_piece, quotient_by_generator_multiples


def _shift(a, i, k=1):
    a = list(a)
    a[i] += k
    return tuple(a)


def nzd_check(p, form, D):
    """Is multiplication by the linear form injective on p in degrees 0..D?

    ``form`` is ``("fold", i1, i2)`` for x_i1 + x_i2 (x_i1 - x_i2 in
    characteristic two) or ``("var", i)``.
    """
    return not nzd_failures(p, form, D)


def nzd_failures(p, form, D):
    if form[0] == "fold":
        vars_ = (form[1], form[2])
    elif form[0] == "var":
        vars_ = (form[1],)
    else:
        raise ValueError(f"unknown linear form {form!r}")
    bad = []
    for t in range(D + 1):
        src, dst = graded_piece(p, t), graded_piece(p, t + 1)
        if src.dim == 0:
            continue
        vecs = []
        for a, g in src.basis:
            v = 0
            for i in vars_:
                v ^= 1 << dst.index[(_shift(a, i), g)]
            vecs.append(v)
        # image of M_t: rank([rel_{t+1}; form * amb_t]) - rank(rel_{t+1})
        image = kernels.gf2_rank_extended(dst.rows, vecs)[1]
        if image != src.dim:
            bad.append({"t": t, "dim": src.dim, "image": image})
    return bad


@dataclass
class DegreeRecord:
    t: int
    dimL: int
    dimM: int
    dimR: int
    dim_im_psi: int
    dim_ker_phi: int
    flags: dict
    extra: dict = field(default_factory=dict)

    def to_json(self):
        out = {"t": self.t, "dimL": self.dimL, "dimM": self.dimM, "dimR": self.dimR,
               "dim_im_psi": self.dim_im_psi, "dim_ker_phi": self.dim_ker_phi,
               "flags": dict(self.flags)}
        out.update(self.extra)
        return out


@dataclass
class ExactnessReport:
    kind: str
    edge: tuple
    sink: int
    max_degree: int
    per_degree: list
    maps_well_defined: dict
    checks: dict = field(default_factory=dict)

    @property
    def verdict(self):
        return (all(all(r.flags.values()) for r in self.per_degree)
                and all(self.maps_well_defined.values())
                and all(self.checks.values()))

    def to_json(self):
        return {"kind": self.kind, "edge": list(self.edge), "sink": self.sink,
                "max_degree": self.max_degree,
                "per_degree": [r.to_json() for r in self.per_degree],
                "maps_well_defined": dict(self.maps_well_defined),
                "checks": dict(self.checks), "verdict": self.verdict}


def default_degree_bound(G):
    return G.genus + G.loops + 3


def _images(ms, basis, piece):
    return [piece.vector(ms.apply_term(a, g)) for a, g in basis]


def _compose(first, second, basis, piece):
    out = []
    for a, g in basis:
        out.append(piece.vector(second.apply(first.apply_term(a, g))))
    return out


def exactness_report(kind, G, e, sink, D=None):
    """Check 0 -> L -> M -> R -> 0 in every degree t <= D.

    ``kind`` is "gpark" (L is GC_{G/e} mod x12) or "toppling" (L is the image
    of C_{G/e}).  Everything is computed over GF(2).
    """
    s = tutte_setup(G, e, sink, min_vertices=3)
    D = default_degree_bound(G) if D is None else D
    if kind == "gpark":
        psi, phi = build_psi0(G, e, sink), build_phi0(G, e, sink)
    elif kind == "toppling":
        psi, phi = build_psi1(G, e, sink), build_phi1(G, e, sink)
    else:
        raise ValueError(f"kind must be 'gpark' or 'toppling', not {kind!r}")
    raw = psi.source
    quot = quotient_by_generator_multiples(raw, s.x12)
    M, R = psi.target, phi.target
    wd = {"psi": verify_map_spec(psi, D + 1, source=quot if kind == "gpark" else None),
          "phi": verify_map_spec(phi, D + 1)}
    checks = {}
    if kind == "gpark":
        checks["x12_nonzerodivisor"] = nzd_check(raw, ("var", s.x12), D)
    records = []
    for t in range(D + 1):
        Lraw, Mp, Rp = graded_piece(raw, t), graded_piece(M, t), graded_piece(R, t)
        psi_vecs = _images(psi, Lraw.basis, Mp)
        rkM, im_psi = kernels.gf2_rank_extended(Mp.rows, psi_vecs)
        phi_vecs = _images(phi, Mp.basis, Rp)
        rkR, im_phi = kernels.gf2_rank_extended(Rp.rows, phi_vecs)
        dimM = len(Mp.basis) - rkM
        dimR = len(Rp.basis) - rkR
        ker_phi = dimM - im_phi
        comp = _compose(psi, phi, Lraw.basis, Rp)
        is_complex = kernels.gf2_rank_extended(Rp.rows, comp)[1] == 0
        extra = {}
        if kind == "gpark":
            dimL = graded_piece(quot, t).dim
            prev = graded_piece(raw, t - 1).dim if t > 0 else 0
            left = dimL == im_psi and Lraw.dim - im_psi == prev
            extra = {"dim_GC_contract": Lraw.dim, "dim_ker_psi": Lraw.dim - im_psi,
                     "dim_GC_contract_prev": prev}
        else:
            dimL = im_psi
            if t > 0:
                prevL = graded_piece(raw, t - 1)
                shifted = [(_shift(a, s.x12), g) for a, g in prevL.basis]
                x_vecs = [Lraw.vector([b]) for b in shifted]
                dim_x12 = kernels.gf2_rank_extended(Lraw.rows, x_vecs)[1]
                into = [Mp.vector(psi.apply_term(a, g)) for a, g in shifted]
                left = kernels.gf2_rank_extended(Mp.rows, into)[1] == 0
            else:
                dim_x12, left = 0, True
            extra = {"dim_C_contract": Lraw.dim, "dim_ker_psi": Lraw.dim - im_psi,
                     "dim_x12_image": dim_x12}
        flags = {"complex": is_complex, "exact_middle": im_psi == ker_phi,
                 "right_surjective": im_phi == dimR, "left_kernel": left,
                 "additive": dimM == dimL + dimR}
        records.append(DegreeRecord(t, dimL, dimM, dimR, im_psi, ker_phi, flags, extra))
    return ExactnessReport(kind, (s.v1, s.v2), sink, D, records, wd, checks)

"""Generator-level module maps and the Tutte-sequence map builders.

Throughout, ``e = (v1, v2)`` with ``v2`` the sink; ``x12`` is the folded
variable, at index ``min(v1, v2)`` of R_e, matching the vertex relabelling of
the contraction.
"""

from dataclasses import dataclass

from .. import kernels
from ..errors import BridgeEdge, SinkMismatch, TooFewVertices
from ..multigraph import contract_edge, delete_edge, is_bridge, merge_relabel
from ..orientations import canonical_rep, lift_minus, lift_plus, restrict_contract, restrict_delete
from .linalg import add_mono, xor_terms
from .presentation import (graded_piece, gpark_presentation, specialize_to_Re,
                           toppling_presentation)


@dataclass
class MapSpec:
    """images[g] is the GF(2) image of source generator g: a tuple of target terms."""

    source: object
    target: object
    images: tuple
    name: str = ""

    def apply_term(self, mono, g):
        return [(add_mono(mono, a), h) for a, h in self.images[g]]

    def apply(self, terms):
        out = []
        for a, g in terms:
            out.extend(self.apply_term(a, g))
        return xor_terms(out)

    def is_degree_preserving(self):
        for g, img in enumerate(self.images):
            d = self.source.degrees[g]
            if any(sum(a) + self.target.degrees[h] != d for a, h in img):
                return False
        return True


@dataclass
class TutteSetup:
    """The three graphs, their sinks, and the edge data shared by all four maps."""

    G: object
    Ge: object
    Gd: object
    v1: int
    v2: int
    sink_e: int
    x12: int
    me: int


def tutte_setup(G, e, sink, min_vertices=2):
    u, v = e
    if sink not in (u, v):
        raise SinkMismatch(f"sink {sink} is not an endpoint of {e}")
    if G.n < min_vertices:
        raise TooFewVertices(f"need at least {min_vertices} vertices, got {G.n}")
    if is_bridge(G, u, v):
        raise BridgeEdge(f"edge {tuple(e)} is a bridge")
    v2 = sink
    v1 = u if v == sink else v
    r = merge_relabel(G.n, v1, v2)
    return TutteSetup(G, contract_edge(G, v1, v2), delete_edge(G, v1, v2), v1, v2,
                      r[v2], min(v1, v2), G.multiplicity(v1, v2))


def _x12_power(s, k):
    a = [0] * (s.G.n - 1)
    a[s.x12] = k
    return tuple(a)


def _index(p):
    return {a.code: k for k, a in enumerate(p.labels)}


def build_psi0(G, e, sink, drop_power=False):
    """A on G/e goes to x12^(m_e - 1) A_{e+}.  ``drop_power`` builds the corrupted control."""
    s = tutte_setup(G, e, sink)
    L = gpark_presentation(s.Ge, s.sink_e)
    M = specialize_to_Re(gpark_presentation(G, s.v2), s.v1, s.v2)
    idx = _index(M)
    mono = _x12_power(s, 0 if drop_power else s.me - 1)
    images = tuple(((mono, idx[lift_plus(a, G, s.v1, s.v2).code]),) for a in L.labels)
    return MapSpec(L, M, images, "psi0")


def build_phi0(G, e, sink):
    s = tutte_setup(G, e, sink)
    M = specialize_to_Re(gpark_presentation(G, s.v2), s.v1, s.v2)
    R = specialize_to_Re(gpark_presentation(s.Gd, s.v2), s.v1, s.v2)
    idx = _index(R)
    zero = _x12_power(s, 0)
    images = []
    for a in M.labels:
        if s.me == 1 and restrict_contract(a, s.v1, s.v2) is not None:
            images.append(())
        else:
            images.append(((zero, idx[restrict_delete(a, s.v1, s.v2, host=s.Gd).code]),))
    return MapSpec(M, R, tuple(images), "phi0")


def build_psi1(G, e, sink):
    s = tutte_setup(G, e, sink)
    L = toppling_presentation(s.Ge, s.sink_e)
    M = specialize_to_Re(toppling_presentation(G, s.v2), s.v1, s.v2)
    idx = _index(M)
    mono = _x12_power(s, s.me - 1)
    images = []
    for a in L.labels:
        cp = canonical_rep(lift_plus(a, G, s.v1, s.v2), s.v2).canonical
        cm = canonical_rep(lift_minus(a, G, s.v1, s.v2), s.v2).canonical
        images.append(xor_terms([(mono, idx[cp.code]), (mono, idx[cm.code])]))
    return MapSpec(L, M, tuple(images), "psi1")


def build_phi1(G, e, sink):
    s = tutte_setup(G, e, sink)
    M = specialize_to_Re(toppling_presentation(G, s.v2), s.v1, s.v2)
    R = specialize_to_Re(toppling_presentation(s.Gd, s.v2), s.v1, s.v2)
    idx = _index(R)
    zero = _x12_power(s, 0)
    images = []
    for a in M.labels:
        c = canonical_rep(restrict_delete(a, s.v1, s.v2, host=s.Gd), s.v2).canonical
        images.append(((zero, idx[c.code]),))
    return MapSpec(M, R, tuple(images), "phi1")


def _split_by_degree(terms, p):
    out = {}
    for a, g in terms:
        out.setdefault(sum(a) + p.degrees[g], []).append((a, g))
    return out


def map_spec_failures(ms, D, source=None):
    """Source relations of degree <= D whose image leaves the target relation span.

    ``source`` swaps in a presentation with the same generators but more
    relations, e.g. the quotient by x12 times the generators.
    """
    src = source if source is not None else ms.source
    tgt = ms.target
    by_degree = {}
    for k, r in enumerate(src.relations):
        t = src.relation_degree(r)
        if t > D:
            continue
        for dt, comp in _split_by_degree(ms.apply(r), tgt).items():
            by_degree.setdefault(dt, []).append((k, comp))
    failures = []
    for t in sorted(by_degree):
        piece = graded_piece(tgt, t)
        items = by_degree[t]
        vecs = [piece.vector(c) for _, c in items]
        if kernels.gf2_rank_extended(piece.rows, vecs)[1] == 0:
            continue
        for (k, comp), vec in zip(items, vecs):
            if kernels.gf2_rank_extended(piece.rows, [vec])[1]:
                failures.append({"relation": k, "degree": t, "image": comp})
    return failures


def verify_map_spec(ms, D, source=None):
    return not map_spec_failures(ms, D, source)

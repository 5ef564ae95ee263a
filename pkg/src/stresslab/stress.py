"""Affine stress spaces of embedded complexes and frameworks.

A degree-i stress is a face-supported polynomial annihilated by the
derivative operators of the coordinate forms and of the all-ones form.
The space is computed as one exact kernel over the face-supported
monomial coordinates; an independent apolarity-pairing oracle lives in
the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import geom
from .algebra import THETA_ELL, MonomialBasis, _int_form_rows, face_monomials
from .complexes import SimplicialComplex
from .exactla import (QMatrix, Subspace, kernel_of_int_rows, rat_str,
                      subspace_contains, subspace_equal)
from .geom import EmbeddedComplex


class ReconstructionMismatch(ValueError):
    """Rebuilt polynomial is not a stress (internal consistency failure)."""


class DegenerateSegment(ValueError):
    """Chord through a vertex or touching a cut-face boundary."""


@dataclass
class StressBasis:
    """Basis of the degree-i stresses in face-monomial coordinates."""

    ec: EmbeddedComplex
    degree: int
    monomial_index: MonomialBasis
    basis: Subspace

    @property
    def dim(self) -> int:
        return self.basis.dim

    def vectors(self) -> list:
        return [list(r) for r in self.basis.basis.entries]

    def to_json(self) -> list:
        out = []
        for vec in self.basis.basis.entries:
            entry = {}
            for mono, x in zip(self.monomial_index.monomials, vec):
                if x:
                    entry[",".join(map(str, mono))] = rat_str(x)
            out.append(entry)
        return out


def _derivative_constraints(ec: EmbeddedComplex, i: int) -> tuple:
    """Integer rows of the map sending a face-supported degree-i polynomial
    to its derivatives under the coordinate forms and the all-ones form."""
    c = ec.complex
    hi = face_monomials(c, i)
    lo = face_monomials(c, i - 1)
    forms = _int_form_rows(ec, THETA_ELL)
    rows = []
    for nu in lo.monomials:
        for frow in forms:
            row = [0] * len(hi)
            hit = False
            for vi, coeff in enumerate(frow):
                if coeff == 0:
                    continue
                e = list(nu)
                e[vi] += 1
                col = hi.index.get(tuple(e))
                if col is not None:
                    row[col] = coeff * e[vi]
                    hit = True
            if hit:
                rows.append(row)
    return hi, rows


def stress_space(ec: EmbeddedComplex, i: int) -> StressBasis:
    """All affine i-stresses of the embedded complex (or framework)."""
    if i < 1:
        raise ValueError("stress degree must be >= 1")
    hi, rows = _derivative_constraints(ec, i)
    ker = kernel_of_int_rows(rows, len(hi))
    return StressBasis(ec, i, hi, ker)


def stress_dim(ec: EmbeddedComplex, i: int) -> int:
    """Dimension of the degree-i stress space (rank only, no basis)."""
    from ._backend import rank_int

    hi, rows = _derivative_constraints(ec, i)
    return len(hi) - rank_int(rows, len(hi))


# -- squarefree views ----------------------------------------------------


@dataclass
class SquarefreeWeights:
    """Face-indexed weights of a stress (its squarefree part)."""

    degree: int
    weights: dict  # sorted vertex tuple -> Fraction

    def get(self, face: Iterable[int]) -> Fraction:
        return self.weights.get(tuple(sorted(face)), Fraction(0))

    def to_json(self) -> dict:
        return {",".join(map(str, f)): rat_str(x)
                for f, x in sorted(self.weights.items()) if x}


def squarefree_part(vec: Sequence[Fraction], mbasis: MonomialBasis,
                    degree: int) -> SquarefreeWeights:
    """Extract the weights on (degree-1)-dimensional faces from a stress."""
    weights = {}
    for mono, x in zip(mbasis.monomials, vec):
        if x and all(e <= 1 for e in mono):
            face = tuple(v for v, e in zip(mbasis.vertices, mono) if e)
            weights[face] = x
    return SquarefreeWeights(degree, weights)


def reconstruct_from_squarefree(weights: SquarefreeWeights,
                                ec: EmbeddedComplex) -> list:
    """Rebuild a full 2-stress from its edge weights.

    The square-term coefficient at a vertex is minus half the sum of its
    incident edge weights; the result must land back in the stress space.
    """
    if weights.degree != 2:
        raise ValueError("reconstruction rule is for degree-2 stresses")
    c = ec.complex
    mb = face_monomials(c, 2)
    pos = {v: i for i, v in enumerate(mb.vertices)}
    vec = [Fraction(0)] * len(mb)
    incident: dict = {v: Fraction(0) for v in mb.vertices}
    for face, x in weights.weights.items():
        if len(face) != 2 or not c.has_face(face):
            raise ValueError(f"not an edge: {face}")
        e = [0] * len(mb.vertices)
        e[pos[face[0]]] = 1
        e[pos[face[1]]] = 1
        vec[mb.index[tuple(e)]] = x
        incident[face[0]] += x
        incident[face[1]] += x
    for v in mb.vertices:
        e = [0] * len(mb.vertices)
        e[pos[v]] = 2
        vec[mb.index[tuple(e)]] = -incident[v] / 2
    sb = stress_space(ec, 2)
    if not sb.basis.contains_vector(vec):
        raise ReconstructionMismatch("rebuilt polynomial is not a stress")
    return vec


def balancing_residuals(weights: SquarefreeWeights, ec: EmbeddedComplex) -> dict:
    """Per-vertex vectors sum(w_uv (p(u)-p(v))); all zero for a 2-stress."""
    p = ec.embedding.point
    out = {}
    for u in ec.complex.vertices:
        acc = [Fraction(0)] * ec.d
        for (a, b), w in weights.weights.items():
            if u == a:
                other = b
            elif u == b:
                other = a
            else:
                continue
            for j in range(ec.d):
                acc[j] += w * (p(u)[j] - p(other)[j])
        out[u] = tuple(acc)
    return out


# -- derivatives and reconstruction --------------------------------------


def _falling(m: int, a: int) -> int:
    out = 1
    for t in range(a):
        out *= m - t
    return out


def derivative_map(sb: StressBasis, r: int) -> tuple:
    """Span of all order-r partial derivatives of the basis stresses.

    Returns (subspace, monomial basis) in degree (i - r) coordinates; the
    span always sits inside the degree-(i-r) stress space.
    """
    if not (1 <= r < sb.degree):
        raise ValueError("need 1 <= r < degree")
    c = sb.ec.complex
    lo = face_monomials(c, sb.degree - r)
    ops = face_monomials(c, r)
    rows = []
    for vec in sb.basis.basis.entries:
        supp = [(mono, x) for mono, x in zip(sb.monomial_index.monomials, vec) if x]
        for alpha in ops.monomials:
            row = [Fraction(0)] * len(lo)
            hit = False
            for mono, x in supp:
                coeff = 1
                target = []
                for mv, av in zip(mono, alpha):
                    if mv < av:
                        coeff = 0
                        break
                    if av:
                        coeff *= _falling(mv, av)
                    target.append(mv - av)
                if coeff:
                    row[lo.index[tuple(target)]] += x * coeff
                    hit = True
            if hit:
                rows.append(row)
    return Subspace.from_spanning(len(lo), rows), lo


def check_reconstruction(ec: EmbeddedComplex, i: int, k: int) -> dict:
    """Compare the k-stress space with derivatives of the i-stress space.

    holds: the two subspaces are equal (not merely equal-dimensional);
    contained: the derivative span sits inside the k-stresses (always).
    """
    if not (1 <= k < i):
        raise ValueError("need 1 <= k < i")
    si = stress_space(ec, i)
    sk = stress_space(ec, k)
    span, _ = derivative_map(si, i - k)
    return {
        "holds": subspace_equal(sk.basis, span),
        "contained": subspace_contains(sk.basis, span),
        "lhs_dim": sk.dim,
        "rhs_dim": span.dim,
    }


# -- rigidity -------------------------------------------------------------


def rigidity_report(ec: EmbeddedComplex) -> dict:
    """Infinitesimal rigidity of the 1-skeleton framework.

    The framework is rigid exactly when the 2-stress dimension attains
    f_1 - d f_0 + (d+1 choose 2).
    """
    c = ec.complex
    f0 = c.n_vertices
    f1 = len(c.edges())
    bound = f1 - ec.d * f0 + (ec.d + 1) * ec.d // 2
    dim_s2 = stress_dim(ec, 2)
    return {
        "dim_S2": dim_s2,
        "f0": f0,
        "f1": f1,
        "bound": bound,
        "is_inf_rigid": dim_s2 == bound,
    }


def participates(sb: StressBasis, face: Iterable[int]) -> bool:
    """True iff some stress in the basis has a nonzero weight on a face
    containing the given one."""
    f = tuple(sorted(face))
    cols = []
    for j, mono in enumerate(sb.monomial_index.monomials):
        if any(e > 1 for e in mono):
            continue
        supp = tuple(v for v, e in zip(sb.monomial_index.vertices, mono) if e)
        if set(f) <= set(supp):
            cols.append(j)
    for vec in sb.basis.basis.entries:
        if any(vec[j] for j in cols):
            return True
    return False


def face_participation(ec: EmbeddedComplex, i: int, face: Iterable[int]) -> bool:
    """Does the face participate in some affine i-stress?"""
    f = tuple(sorted(face))
    if not ec.complex.has_face(f):
        raise ValueError(f"not a face: {f}")
    return participates(stress_space(ec, i), f)


def skeleton_framework(ec: EmbeddedComplex) -> EmbeddedComplex:
    """The 1-skeleton with the same embedding, as an unvalidated framework."""
    return EmbeddedComplex(ec.complex.skeleton(1), ec.embedding, "framework")


def graph_framework(edges: Sequence, embedding, extra_edge=None) -> EmbeddedComplex:
    """Framework on an explicit edge list (plus an optional extra edge)."""
    fac = [tuple(e) for e in edges]
    if extra_edge is not None:
        fac.append(tuple(extra_edge))
    return EmbeddedComplex(SimplicialComplex(fac), embedding, "framework")


def cone_comparison(ec: EmbeddedComplex, apex: int,
                    hyperplane: Optional[tuple] = None) -> dict:
    """Numeric form of the cone identity at a vertex.

    Central projection of the link preserves the 2-stress dimension and
    the set of link edges carrying a nonzero weight in some stress.
    """
    star = ec.complex.star([apex])
    star_fw = EmbeddedComplex(star.skeleton(1), ec.embedding, "framework")
    s_star = stress_space(star_fw, 2)
    projected = geom.cone_projection(ec, apex, hyperplane)
    link_fw = EmbeddedComplex(projected.complex.skeleton(1),
                              projected.embedding, "framework")
    s_link = stress_space(link_fw, 2)
    edges = projected.complex.skeleton(1).edges()
    mismatches = [e for e in edges
                  if participates(s_star, e) != participates(s_link, e)]
    return {
        "dim_star": s_star.dim,
        "dim_link": s_link.dim,
        "dims_equal": s_star.dim == s_link.dim,
        "edge_support_matches": not mismatches,
        "mismatched_edges": mismatches,
    }


# -- chords and negative weights ------------------------------------------


def _segment_hits_vertex(p, a, b, v) -> bool:
    """Does p(v) lie on the open segment (p(a), p(b))?"""
    pa, pb, pv = p(a), p(b), p(v)
    diff = [x - y for x, y in zip(pb, pa)]
    rel = [x - y for x, y in zip(pv, pa)]
    t = None
    for dj, rj in zip(diff, rel):
        if dj != 0:
            t = rj / dj
            break
    if t is None or not (0 < t < 1):
        return False
    return all(rj == t * dj for dj, rj in zip(diff, rel))


def _interior_interval(comp: EmbeddedComplex, pa, pb) -> Optional[tuple]:
    """Open t-range where pa + t(pb - pa) is interior to the component."""
    lo, hi = Fraction(0), Fraction(1)
    p = comp.embedding.point
    for facet in comp.complex.facets:
        fpts = [p(v) for v in sorted(facet)]
        hp = geom._hyperplane_int(geom._scaled_int_points(fpts))
        if hp is None:
            raise geom.DegenerateCut("degenerate facet")
        a, c = hp
        others = [v for v in comp.complex.vertices if v not in facet]
        sgn = geom._eval_functional(a, c, p(others[0]))
        if sgn > 0:
            a, c = tuple(-x for x in a), -c
        va = geom._eval_functional(a, c, pa)
        vb = geom._eval_functional(a, c, pb)
        # interior side is strictly negative
        if va == vb:
            if va >= 0:
                return None
            continue
        t_cross = va / (va - vb)
        if vb > va:
            hi = min(hi, t_cross)
        else:
            lo = max(lo, t_cross)
        if lo >= hi:
            return None
    return (lo, hi)


def dehn_negative_weights_check(ec3: EmbeddedComplex, e: Sequence[int]) -> dict:
    """Unique chord stress on the prime components crossed by a missing edge.

    Adds the missing edge to the union of prime components meeting the
    open chord, solves for the one 2-stress with weight one on the chord,
    and checks strict negativity on all edges at the chord endpoints.
    """
    if ec3.d != 3:
        raise ValueError("expected a 3-polytope")
    a, b = sorted(e)
    c = ec3.complex
    if a not in c.vertices or b not in c.vertices:
        raise ValueError(f"unknown vertices in {e}")
    if c.has_face((a, b)):
        raise ValueError(f"{(a, b)} is an edge, not a missing edge")
    p = ec3.embedding.point
    for v in c.vertices:
        if v not in (a, b) and _segment_hits_vertex(p, a, b, v):
            raise DegenerateSegment(f"chord passes through vertex {v}")
    comps = geom.prime_components(ec3)
    pa, pb = p(a), p(b)
    chosen = []
    for comp in comps:
        span = _interior_interval(comp, pa, pb)
        if span is not None and span[0] < span[1]:
            chosen.append(comp)
    # transversality through the interiors of the cut triangles
    for tau in c.missing_faces(dim=2):
        tpts = [p(v) for v in tau]
        hp = geom._hyperplane_int(geom._scaled_int_points(tpts))
        aa, cc = hp
        va = geom._eval_functional(aa, cc, pa)
        vb = geom._eval_functional(aa, cc, pb)
        if va == vb:
            if va == 0:
                raise DegenerateSegment(f"chord lies in the cut plane of {tau}")
            continue
        t = va / (va - vb)
        if not (0 < t < 1):
            continue
        x = tuple(xa + t * (xb - xa) for xa, xb in zip(pa, pb))
        bc = _barycentric(tpts, x)
        if bc is not None and any(w == 0 for w in bc) and all(w >= 0 for w in bc):
            raise DegenerateSegment(f"chord touches the boundary of cut {tau}")
    edges = set()
    verts = set()
    for comp in chosen:
        verts |= set(comp.complex.vertices)
        edges |= {tuple(f) for f in comp.complex.edges()}
    fw = graph_framework(sorted(edges), ec3.embedding.restricted(sorted(verts)),
                         extra_edge=(a, b))
    sb = stress_space(fw, 2)
    result = {
        "components": [comp.complex.vertices for comp in chosen],
        "stress_dim": sb.dim,
        "unique_stress": sb.dim == 1,
        "all_negative_at_endpoints": False,
        "weights": None,
    }
    if sb.dim != 1:
        return result
    vec = list(sb.basis.basis.entries[0])
    weights = squarefree_part(vec, sb.monomial_index, 2)
    lam_e = weights.get((a, b))
    if lam_e == 0:
        return result
    scale = 1 / lam_e
    weights = SquarefreeWeights(2, {f: w * scale for f, w in weights.weights.items()})
    incident = [f for f in sorted(edges) if a in f or b in f]
    result["all_negative_at_endpoints"] = all(weights.get(f) < 0 for f in incident)
    result["weights"] = weights
    return result


def _barycentric(tri_pts: list, x: tuple) -> Optional[list]:
    """Barycentric coordinates of x in the affine span of three points."""
    from .exactla import solve

    d = len(x)
    a = QMatrix(d + 1, 3, [[tri_pts[j][i] for j in range(3)] for i in range(d)]
                + [[1, 1, 1]])
    return solve(a, list(x) + [1])

"""Reduced simplicial homology over the rationals.

Boundary matrices use the augmented chain complex (the empty face spans
degree -1), with signs from the lexicographic vertex order.  Dimensions
of homology groups come from exact integer ranks, so they equal the real
Betti numbers for the complexes considered here.
"""

from __future__ import annotations

from typing import Optional

from ._backend import rank_int
from .complexes import SimplicialComplex
from .exactla import QMatrix


def boundary_matrix(c: SimplicialComplex, k: int) -> QMatrix:
    """Matrix of d_k : C_k -> C_{k-1} (rows: (k-1)-faces, cols: k-faces)."""
    rows_idx = {f: i for i, f in enumerate(c.faces(k - 1))}
    cols = c.faces(k)
    m = [[0] * len(cols) for _ in rows_idx]
    for j, face in enumerate(cols):
        for pos in range(len(face)):
            sub = face[:pos] + face[pos + 1:]
            m[rows_idx[sub]][j] = (-1) ** pos
    return QMatrix(len(rows_idx), len(cols), m)


def chain_complex(c: SimplicialComplex) -> dict:
    """Augmented boundary matrices {k: d_k} for k = 0..dim."""
    return {k: boundary_matrix(c, k) for k in range(0, c.dim + 1)}


def _boundary_int_rows(faces_lo: list, faces_hi: list) -> list:
    rows_idx = {f: i for i, f in enumerate(faces_lo)}
    m = [[0] * len(faces_hi) for _ in faces_lo]
    for j, face in enumerate(faces_hi):
        for pos in range(len(face)):
            sub = face[:pos] + face[pos + 1:]
            m[rows_idx[sub]][j] = (-1) ** pos
    return m


def betti_from_face_lists(faces_by_dim: list) -> list:
    """Reduced Betti numbers from face lists per dimension (index 0 = dim -1).

    `faces_by_dim[k]` lists the (k-1)-faces as sorted tuples; the first
    entry is [()] for a nonvoid complex.  Returns dims of reduced homology
    in degrees -1..top.
    """
    top = len(faces_by_dim) - 2
    ranks = []
    for k in range(0, top + 1):
        rows = _boundary_int_rows(faces_by_dim[k], faces_by_dim[k + 1])
        ranks.append(rank_int(rows, len(faces_by_dim[k + 1])))
    out = []
    for q in range(-1, top + 1):
        nq = len(faces_by_dim[q + 1])
        rank_in = ranks[q + 1] if q + 1 <= top else 0
        rank_out = ranks[q] if q >= 0 else 0
        out.append(nq - rank_in - rank_out)
    return out


def reduced_betti(c: SimplicialComplex) -> list:
    """Dims of reduced rational homology in degrees -1..dim(c)."""
    faces = [c.faces(k) for k in range(-1, c.dim + 1)]
    return betti_from_face_lists(faces)


def _sphere_betti(dim: int) -> list:
    """Reduced Betti numbers of a sphere of the given dimension (from -1)."""
    out = [0] * (dim + 2)
    out[dim + 1] = 1
    return out


def is_homology_sphere(c: SimplicialComplex) -> bool:
    ok, _ = homology_sphere_witness(c)
    return ok


def homology_sphere_witness(c: SimplicialComplex) -> tuple:
    """(True, None) or (False, witness face whose link has wrong homology)."""
    if not c.is_pure():
        return False, ()
    d = c.dim
    for k in range(-1, d + 1):
        for f in c.faces(k):
            lk = c.link(f) if k >= 0 else c
            if reduced_betti(lk) != _sphere_betti(d - 1 - k):
                return False, f
    return True, None


def boundary_subcomplex(c: SimplicialComplex) -> SimplicialComplex:
    """Faces whose link is acyclic, i.e. the topological boundary."""
    bfaces = []
    for k in range(0, c.dim + 1):
        for f in c.faces(k):
            if not any(reduced_betti(c.link(f))):
                bfaces.append(f)
    return SimplicialComplex(bfaces) if bfaces else SimplicialComplex([()])


def is_homology_ball_with_boundary(c: SimplicialComplex) -> tuple:
    """(is_ball, boundary complex or witness).

    Checks acyclicity, the sphere-or-ball condition on all face links,
    that the acyclic-link faces form a homology sphere one dimension
    down, and that they coincide with the codimension-one faces lying in
    exactly one facet (closed under subsets).
    """
    if not c.is_pure():
        return False, ()
    d = c.dim
    if any(reduced_betti(c)):
        return False, ()
    for k in range(0, d + 1):
        for f in c.faces(k):
            b = reduced_betti(c.link(f))
            if any(b) and b != _sphere_betti(d - 1 - k):
                return False, f
    bd = boundary_subcomplex(c)
    if bd.dim != d - 1 or not is_homology_sphere(bd):
        return False, bd
    # independent description of the boundary
    facet_count: dict = {}
    for fac in c.facets:
        for ridge in [tuple(sorted(fac - {v})) for v in fac]:
            facet_count[ridge] = facet_count.get(ridge, 0) + 1
    free_ridges = [r for r, cnt in facet_count.items() if cnt == 1]
    if SimplicialComplex(free_ridges if free_ridges else [()]) != bd:
        return False, bd
    return True, bd

"""Abstract simplicial complexes and their combinatorial invariants.

Complexes are stored by their inclusion-maximal faces; face enumeration
per dimension is memoized.  Builders label vertices 1..n contiguously;
derived complexes (links, induced subcomplexes, skeleta) keep the labels
of the parent, so weights and coordinates stay comparable across
constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence


class SimplicialComplex:
    """Finite simplicial complex given by its facets.

    Contains the empty face and all singletons of its vertex set.  The
    complex whose only face is the empty set is allowed (it is the link
    of a facet, a (-1)-sphere).
    """

    __slots__ = ("facets", "vertices", "_faces_by_dim", "_face_sets", "_missing")

    def __init__(self, facets: Iterable[Iterable[int]]):
        maximal = _inclusion_maximal([frozenset(f) for f in facets])
        if not maximal:
            maximal = [frozenset()]
        self.facets: frozenset = frozenset(maximal)
        verts: set = set()
        for f in self.facets:
            verts |= f
        self.vertices: tuple = tuple(sorted(verts))
        self._faces_by_dim: dict = {}
        self._face_sets: dict = {}
        self._missing: Optional[list] = None

    # -- construction ------------------------------------------------

    @classmethod
    def from_facets(cls, n: int, facets: Sequence[Iterable[int]]) -> "SimplicialComplex":
        """Complex on vertex set {1..n}; every vertex must lie in a facet."""
        fsets = [frozenset(f) for f in facets]
        for f in fsets:
            for v in f:
                if not (isinstance(v, int) and 1 <= v <= n):
                    raise ValueError(f"vertex label out of range 1..{n}: {v!r}")
        covered = set().union(*fsets) if fsets else set()
        if covered != set(range(1, n + 1)):
            missing = sorted(set(range(1, n + 1)) - covered)
            raise ValueError(f"vertices in no facet: {missing}")
        return cls(fsets)

    def to_json(self) -> dict:
        c, _ = self.relabeled()
        return {"n": len(c.vertices), "facets": sorted(sorted(f) for f in c.facets)}

    @classmethod
    def from_json(cls, obj: dict) -> "SimplicialComplex":
        return cls.from_facets(obj["n"], obj["facets"])

    def relabeled(self) -> tuple["SimplicialComplex", dict]:
        """Copy with contiguous labels 1..n; returns (complex, old->new map)."""
        remap = {v: i + 1 for i, v in enumerate(self.vertices)}
        return SimplicialComplex([{remap[v] for v in f} for f in self.facets]), remap

    # -- basic queries -----------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        sizes = {len(f) for f in self.facets}
        return len(sizes) == 1

    def faces(self, k: int) -> list:
        """Sorted list of k-dimensional faces as sorted tuples; k = -1 gives [()]."""
        if k < -1 or k > self.dim:
            return []
        if k not in self._faces_by_dim:
            found = set()
            for f in self.facets:
                if len(f) >= k + 1:
                    found.update(combinations(sorted(f), k + 1))
            self._faces_by_dim[k] = sorted(found)
            self._face_sets[k] = found
        return self._faces_by_dim[k]

    def all_faces(self) -> list:
        out = []
        for k in range(-1, self.dim + 1):
            out.extend(self.faces(k))
        return out

    def has_face(self, face: Iterable[int]) -> bool:
        t = tuple(sorted(face))
        k = len(t) - 1
        if k > self.dim:
            return False
        self.faces(k)
        return t in self._face_sets[k]

    def f_vector(self) -> tuple:
        """(f_-1, f_0, ..., f_{dim})."""
        return tuple(len(self.faces(k)) for k in range(-1, self.dim + 1))

    def edges(self) -> list:
        return self.faces(1)

    # -- subcomplexes ------------------------------------------------

    def link(self, face: Iterable[int]) -> "SimplicialComplex":
        f = frozenset(face)
        if not self.has_face(f):
            raise ValueError(f"not a face: {sorted(f)}")
        cofacets = [fac - f for fac in self.facets if f <= fac]
        return SimplicialComplex(cofacets)

    def star(self, face: Iterable[int]) -> "SimplicialComplex":
        f = frozenset(face)
        if not self.has_face(f):
            raise ValueError(f"not a face: {sorted(f)}")
        return SimplicialComplex([fac for fac in self.facets if f <= fac])

    def skeleton(self, i: int) -> "SimplicialComplex":
        if i >= self.dim:
            return self
        faces = set()
        for f in self.facets:
            if len(f) <= i + 1:
                faces.add(f)
            else:
                faces.update(frozenset(c) for c in combinations(sorted(f), i + 1))
        return SimplicialComplex(faces)

    def induced(self, w: Iterable[int]) -> "SimplicialComplex":
        ws = frozenset(w)
        if not ws <= set(self.vertices):
            raise ValueError("W is not a subset of the vertex set")
        faces = set()
        for f in self.facets:
            faces.add(f & ws)
        # intersections of facets with W need not be maximal faces of the
        # induced complex, but they do generate it
        return SimplicialComplex(faces)

    def graph_complex(self) -> "SimplicialComplex":
        return self.skeleton(1)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return all(other.has_face(f) for f in self.facets)

    # -- missing faces -----------------------------------------------

    def missing_faces(self, dim: Optional[int] = None) -> list:
        """Minimal non-faces as sorted tuples, optionally filtered by dimension."""
        if self._missing is None:
            out = []
            prev = list(self.faces(0))
            for size in range(2, self.dim + 3):
                # candidates: face of size-1 extended by a larger vertex
                cand = set()
                for f in prev:
                    top = f[-1]
                    for v in self.vertices:
                        if v > top:
                            cand.add(f + (v,))
                prev_next = []
                for c in sorted(cand):
                    if self.has_face(c):
                        prev_next.append(c)
                    elif all(self.has_face(c[:i] + c[i + 1:]) for i in range(size)):
                        out.append(c)
                prev = prev_next
            self._missing = sorted(out, key=lambda t: (len(t), t))
        if dim is None:
            return list(self._missing)
        return [f for f in self._missing if len(f) == dim + 1]

    def m_vector(self) -> tuple:
        """(m_1, ..., m_d) with d = dim + 1; m_i counts missing i-faces."""
        d = self.dim + 1
        counts = [0] * (d + 1)
        for f in self.missing_faces():
            counts[len(f) - 1] += 1
        return tuple(counts[1:])

    # -- f/h/g -------------------------------------------------------

    def fgm_vectors(self) -> "FGVectors":
        f = self.f_vector()
        m = self.m_vector()
        if not self.is_pure():
            return FGVectors(f=f, h=None, g=None, m=m)
        d = self.dim + 1
        h = h_from_f(f, d)
        g = g_from_h(h)
        return FGVectors(f=f, h=h, g=g, m=m)

    def h_vector(self) -> tuple:
        if not self.is_pure():
            raise ValueError("h-vector requires a pure complex")
        return h_from_f(self.f_vector(), self.dim + 1)

    def g_vector(self) -> tuple:
        return g_from_h(self.h_vector())

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n_vertices}, dim={self.dim}, facets={len(self.facets)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)


@dataclass(frozen=True)
class FGVectors:
    """Face-count invariants; h and g are None for non-pure complexes.

    f is indexed from dimension -1, h from 0 to d, g from 0 to ceil(d/2),
    m from dimension 1 to d.
    """

    f: tuple
    h: Optional[tuple]
    g: Optional[tuple]
    m: tuple


def h_from_f(f: Sequence[int], d: int) -> tuple:
    """h-vector from (f_-1, ..., f_{d-1}) via the (t-1)-expansion identity."""
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def g_from_h(h: Sequence[int]) -> tuple:
    d = len(h) - 1
    top = (d + 1) // 2
    return tuple(h[k] - (h[k - 1] if k else 0) for k in range(top + 1))


class RelativeComplex:
    """Pair (total, sub); its faces are the faces of total not in sub."""

    __slots__ = ("total", "sub")

    def __init__(self, total: SimplicialComplex, sub: SimplicialComplex):
        if not sub.is_subcomplex_of(total):
            raise ValueError("sub is not a subcomplex of total")
        self.total = total
        self.sub = sub

    def f_vector(self) -> tuple:
        """(f_-1, f_0, ..., f_{dim total}) of the relative complex."""
        d = self.total.dim
        out = []
        for k in range(-1, d + 1):
            sub_faces = set(self.sub.faces(k))
            out.append(sum(1 for f in self.total.faces(k) if f not in sub_faces))
        return tuple(out)

    def faces(self, k: int) -> list:
        sub_faces = set(self.sub.faces(k))
        return [f for f in self.total.faces(k) if f not in sub_faces]

    def dim(self) -> int:
        for k in range(self.total.dim, -2, -1):
            if self.faces(k):
                return k
        return -2


def relative_h(rc: RelativeComplex) -> tuple:
    """h-vector of a relative complex, indexed 0..dim(total)+1."""
    d = rc.total.dim + 1
    return h_from_f(rc.f_vector(), d)


def complex_from_missing_faces(n: int, missing: Sequence[Iterable[int]]) -> SimplicialComplex:
    """Rebuild the complex on {1..n} whose minimal non-faces are `missing`.

    Brute force over vertex subsets; intended for desk-scale cross-checks.
    """
    miss = [frozenset(f) for f in missing]
    facets: list = []
    for size in range(n, 0, -1):
        for cand in combinations(range(1, n + 1), size):
            cs = frozenset(cand)
            if any(m <= cs for m in miss):
                continue
            if any(cs <= f for f in facets):
                continue
            facets.append(cs)
    return SimplicialComplex(facets)


def _inclusion_maximal(sets: Sequence[frozenset]) -> list:
    uniq = sorted(set(sets), key=len, reverse=True)
    out: list = []
    for s in uniq:
        if not any(s < t for t in out):
            out.append(s)
    return out

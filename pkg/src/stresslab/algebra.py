"""Graded face-ring machinery over exact rationals.

All ideal arithmetic is per-degree linear algebra: the degree-k part of
the face ring has the face-supported monomials as a basis, the ideal
generated by the coordinate forms contributes one spanning row per
(form, degree k-1 monomial) pair, and a single canonical row reduction
per degree yields quotient bases and normal-form projectors.  No Groebner
bases anywhere.

Graded Betti numbers come from two independent routes: reduced homology
of induced subcomplexes for the face ring itself, and Koszul homology on
a complementary coordinate set for the Artinian reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Optional, Sequence

from ._backend import rank_int, rref_int
from .complexes import SimplicialComplex
from .exactla import QMatrix, kernel_of_int_rows, rref
from .geom import EmbeddedComplex
from .homology import betti_from_face_lists

THETA = "theta"
THETA_ELL = "theta-ell"


class LsopFailure(ValueError):
    """Per-degree quotient dimension differs from the h-number."""


class CapExceeded(ValueError):
    """Induced-subcomplex scan would exceed the configured vertex cap."""


# -- monomial bases ----------------------------------------------------


@dataclass(frozen=True)
class MonomialBasis:
    """Face-supported monomials of one degree, in graded-lex order."""

    degree: int
    vertices: tuple
    monomials: tuple  # exponent tuples over `vertices` positions

    @property
    def index(self) -> dict:
        if not hasattr(self, "_index"):
            object.__setattr__(self, "_index", {m: i for i, m in enumerate(self.monomials)})
        return self._index

    def __len__(self) -> int:
        return len(self.monomials)


def _compositions(total: int, parts: int):
    """All tuples of `parts` positive integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def face_monomials(c: SimplicialComplex, k: int) -> MonomialBasis:
    """Basis of the degree-k part of the face ring (supports are faces)."""
    verts = c.vertices
    pos = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    if k == 0:
        return MonomialBasis(0, verts, ((0,) * n,))
    mons = []
    for s in range(1, min(k, c.dim + 1) + 1):
        for face in c.faces(s - 1):
            idxs = [pos[v] for v in face]
            for comp in _compositions(k, s):
                e = [0] * n
                for i, a in zip(idxs, comp):
                    e[i] = a
                mons.append(tuple(e))
    mons.sort(reverse=True)
    return MonomialBasis(k, verts, tuple(mons))


def sr_ideal_generators(c: SimplicialComplex) -> list:
    """Minimal monomial generators of the non-face ideal (squarefree)."""
    verts = c.vertices
    pos = {v: i for i, v in enumerate(verts)}
    out = []
    for f in c.missing_faces():
        e = [0] * len(verts)
        for v in f:
            e[pos[v]] = 1
        out.append(tuple(e))
    return out


# -- Artinian reductions ------------------------------------------------


class _DegreePiece:
    __slots__ = ("fbasis", "free_cols", "free_pos", "reduce_of")

    def __init__(self, fbasis, free_cols, free_pos, reduce_of):
        self.fbasis = fbasis
        self.free_cols = free_cols
        self.free_pos = free_pos
        self.reduce_of = reduce_of

    @property
    def dim(self) -> int:
        return len(self.free_cols)


def _int_form_rows(ec: EmbeddedComplex, variant: str) -> list:
    """Integer scalings of the l.s.o.p. coefficient rows (plus all-ones)."""
    verts = ec.complex.vertices
    rows = []
    for j in range(ec.d):
        vals = [ec.embedding.point(v)[j] for v in verts]
        mult = lcm(*[x.denominator for x in vals]) if vals else 1
        rows.append([int(x * mult) for x in vals])
    if variant == THETA_ELL:
        rows.append([1] * len(verts))
    return rows


class GradedAlgebraModel:
    """Per-degree quotient bases and projectors for an Artinian reduction.

    variant 'theta' quotients the face ring by the coordinate forms;
    'theta-ell' also divides by the all-ones form.  Degrees run up to the
    top nonzero degree (at most dim+1 for 'theta').
    """

    def __init__(self, ec: EmbeddedComplex, variant: str, pieces: list):
        self.ec = ec
        self.variant = variant
        self.pieces = pieces

    @property
    def top(self) -> int:
        return len(self.pieces) - 1

    def dim(self, k: int) -> int:
        if 0 <= k <= self.top:
            return self.pieces[k].dim
        return 0

    def hilbert(self) -> tuple:
        return tuple(p.dim for p in self.pieces)

    def quotient_monomials(self, k: int) -> list:
        p = self.pieces[k]
        return [p.fbasis.monomials[c] for c in p.free_cols]

    def normal_form_of_col(self, k: int, col: int) -> Optional[tuple]:
        """Image of the col-th degree-k face monomial in the quotient basis."""
        p = self.pieces[k]
        if col in p.free_pos:
            out = [Fraction(0)] * p.dim
            out[p.free_pos[col]] = Fraction(1)
            return tuple(out)
        return p.reduce_of[col]

    def multiply_by_vertex(self, v: int, k: int) -> QMatrix:
        """Matrix of multiplication by the vertex variable, A_k -> A_{k+1}."""
        verts = self.ec.complex.vertices
        vi = verts.index(v)
        src = self.pieces[k]
        if k + 1 > self.top:
            return QMatrix(0, src.dim, [])
        dst = self.pieces[k + 1]
        cols = []
        for c in src.free_cols:
            mono = list(src.fbasis.monomials[c])
            mono[vi] += 1
            target = dst.fbasis.index.get(tuple(mono))
            if target is None:  # support is not a face: lands in the ideal
                cols.append((Fraction(0),) * dst.dim)
            else:
                cols.append(self.normal_form_of_col(k + 1, target))
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(dst.dim)]
        return QMatrix(dst.dim, src.dim, rows)

    def multiply_by_ones(self, k: int) -> QMatrix:
        """Matrix of multiplication by the sum of all variables, A_k -> A_{k+1}."""
        src = self.pieces[k]
        if k + 1 > self.top:
            return QMatrix(0, src.dim, [])
        dst = self.pieces[k + 1]
        verts = self.ec.complex.vertices
        cols = []
        for c in src.free_cols:
            acc = [Fraction(0)] * dst.dim
            mono = src.fbasis.monomials[c]
            for vi in range(len(verts)):
                e = list(mono)
                e[vi] += 1
                target = dst.fbasis.index.get(tuple(e))
                if target is not None:
                    nf = self.normal_form_of_col(k + 1, target)
                    for i, x in enumerate(nf):
                        if x:
                            acc[i] += x
            cols.append(acc)
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(dst.dim)]
        return QMatrix(dst.dim, src.dim, rows)


def _reduction_piece(form_rows: list, prev: Optional[_DegreePiece],
                     fbasis: MonomialBasis) -> _DegreePiece:
    """Quotient data for one degree from the spans (form x monomial)."""
    ncols = len(fbasis)
    span = []
    if prev is not None:
        idx = fbasis.index
        for mono in prev.fbasis.monomials:
            for frow in form_rows:
                row = [0] * ncols
                hit = False
                for vi, coeff in enumerate(frow):
                    if coeff == 0:
                        continue
                    e = list(mono)
                    e[vi] += 1
                    target = idx.get(tuple(e))
                    if target is not None:
                        row[target] = coeff
                        hit = True
                if hit:
                    span.append(row)
    pivots, red = rref_int(span, ncols)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    free_pos = {c: i for i, c in enumerate(free_cols)}
    reduce_of = {}
    for p, row in zip(pivots, red):
        piv = row[p]
        reduce_of[p] = tuple(Fraction(-row[c], piv) for c in free_cols)
    return _DegreePiece(fbasis, free_cols, free_pos, reduce_of)


def artinian_reduction(ec: EmbeddedComplex, variant: str) -> GradedAlgebraModel:
    """Quotient of the face ring by the embedding's linear forms.

    For variant 'theta' the per-degree dimensions must equal the
    h-numbers (else :class:`LsopFailure`); for 'theta-ell' degrees are
    scanned until the quotient vanishes.
    """
    if variant not in (THETA, THETA_ELL):
        raise ValueError(f"unknown variant: {variant}")
    c = ec.complex
    d_total = c.dim + 1
    form_rows = _int_form_rows(ec, variant)
    h = c.h_vector() if variant == THETA else None
    pieces = []
    prev = None
    k = 0
    while True:
        piece = _reduction_piece(form_rows, prev, face_monomials(c, k))
        if variant == THETA:
            if piece.dim != h[k]:
                raise LsopFailure(
                    f"dim of degree {k} part is {piece.dim}, h_{k} is {h[k]}"
                )
            pieces.append(piece)
            if k == d_total:
                break
        else:
            if piece.dim == 0:
                break
            pieces.append(piece)
            if k > d_total:
                break
        prev = piece
        k += 1
    return GradedAlgebraModel(ec, variant, pieces)


def lefschetz_map_ranks(model: GradedAlgebraModel) -> list:
    """(injective, surjective, rank) of multiplication by the all-ones
    form between consecutive degrees of a 'theta' model."""
    if model.variant != THETA:
        raise ValueError("Lefschetz ranks are read off the 'theta' model")
    from .exactla import rank as qrank

    out = []
    for i in range(model.top):
        m = model.multiply_by_ones(i)
        r = qrank(m) if m.rows and m.cols else 0
        out.append((r == model.dim(i), r == model.dim(i + 1), r))
    return out


def socle_dims(model: GradedAlgebraModel) -> list:
    """Per-degree dimensions of the elements killed by every variable."""
    out = []
    verts = model.ec.complex.vertices
    for k in range(model.top + 1):
        dim_k = model.dim(k)
        if dim_k == 0:
            out.append(0)
            continue
        rows = []
        for v in verts:
            m = model.multiply_by_vertex(v, k)
            rows.extend(QMatrix(m.rows, m.cols, m.entries).int_rows())
        ker = kernel_of_int_rows(rows, dim_k)
        out.append(ker.dim)
    return out


def macaulay_upper(a: int, i: int) -> int:
    """Maximal growth of a graded algebra's Hilbert function from degree i.

    Computed from the unique binomial expansion of a with top index i.
    """
    if i < 1:
        raise ValueError("i must be >= 1")
    if a < 0:
        raise ValueError("a must be >= 0")
    if a == 0:
        return 0
    rem, t, out = a, i, 0
    while rem > 0:
        m = t
        while comb(m + 1, t) <= rem:
            m += 1
        rem -= comb(m, t)
        out += comb(m + 1, t + 1)
        t -= 1
    return out


# -- graded Betti tables -------------------------------------------------


@dataclass
class BettiTable:
    """Finitely supported table (i, j) -> Betti number.

    Rendered in the usual layout: column i, row j, cell value is the
    Betti number in homological degree i and internal degree i + j.
    """

    ring: str  # "R" (face ring over the polynomial ring) or "Rbar"
    entries: dict

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def max_i(self) -> int:
        return max((i for (i, _), v in self.entries.items() if v), default=0)

    def max_j(self) -> int:
        return max((j for (_, j), v in self.entries.items() if v), default=0)

    def row(self, jrow: int) -> list:
        """Entries (i, i + jrow) for i = 0..max column."""
        return [self.get(i, i + jrow) for i in range(self.max_i() + 1)]

    def to_json(self) -> dict:
        items = sorted((i, j, v) for (i, j), v in self.entries.items() if v)
        return {"ring": self.ring, "entries": [list(t) for t in items]}

    @classmethod
    def from_json(cls, obj: dict) -> "BettiTable":
        return cls(obj["ring"], {(i, j): v for i, j, v in obj["entries"]})

    def render(self) -> str:
        imax = self.max_i()
        jmax = max((j - i for (i, j), v in self.entries.items() if v), default=0)
        grid = [[self.get(i, i + jr) for i in range(imax + 1)] for jr in range(jmax + 1)]
        if self.ring == "R" and imax > 0:
            # Gorenstein layout: lone corners, printed block in between
            show = [[(jr, i) == (0, 0) or (jr, i) == (jmax, imax)
                     or (1 <= jr <= jmax - 1 and 1 <= i <= imax - 1)
                     for i in range(imax + 1)] for jr in range(jmax + 1)]
        else:
            show = [[(jr == 0 and i == 0) or (jr >= 1 and i >= 1)
                     for i in range(imax + 1)] for jr in range(jmax + 1)]
        cells = [[str(grid[jr][i]) if show[jr][i] else "" for i in range(imax + 1)]
                 for jr in range(jmax + 1)]
        widths = [max(len(str(i)), max(len(cells[jr][i]) for jr in range(jmax + 1)))
                  for i in range(imax + 1)]
        lead = len(str(jmax))
        lines = [" " * lead + " | " + " ".join(str(i).rjust(widths[i])
                                               for i in range(imax + 1))]
        lines.append("-" * len(lines[0]))
        for jr in range(jmax + 1):
            lines.append(str(jr).rjust(lead) + " | "
                         + " ".join(cells[jr][i].rjust(widths[i])
                                    for i in range(imax + 1)))
        return "\n".join(lines)


def hochster_betti(c: SimplicialComplex, cap: int = 24) -> BettiTable:
    """Graded Betti numbers of the face ring via induced-subcomplex homology.

    Sums reduced Betti numbers of the subcomplex induced on each vertex
    subset; exponential in the vertex count, hence the cap.
    """
    n = c.n_vertices
    if n > cap:
        raise CapExceeded(f"{n} vertices exceeds the cap {cap}")
    verts = c.vertices
    pos = {v: i for i, v in enumerate(verts)}
    faces_masked = []
    for k in range(0, c.dim + 1):
        lst = []
        for f in c.faces(k):
            mask = 0
            for v in f:
                mask |= 1 << pos[v]
            lst.append((mask, tuple(pos[v] for v in f)))
        faces_masked.append(lst)
    entries: dict = {}
    for w in range(1 << n):
        j = w.bit_count()
        face_lists = [[()]]
        for k in range(0, min(j, c.dim + 1)):
            got = [t for mask, t in faces_masked[k] if mask & ~w == 0]
            if not got:
                break
            face_lists.append(sorted(got))
        betti = betti_from_face_lists(face_lists)
        for q, b in enumerate(betti):
            if b:
                i = j - (q - 1) - 1
                entries[(i, j)] = entries.get((i, j), 0) + b
    return BettiTable("R", entries)


def complementary_coordinates(ec: EmbeddedComplex) -> list:
    """Vertex positions whose variables generate the quotient by the forms.

    Non-pivot columns of the reduced coordinate-form matrix; the pivot
    variables are eliminated modulo the forms.
    """
    _, pivots, _ = rref(ec.rmatrix())
    pivot_set = set(pivots)
    return [i for i in range(ec.n) if i not in pivot_set]


def koszul_betti(model: GradedAlgebraModel) -> BettiTable:
    """Graded Betti numbers of a 'theta-ell' reduction over its small
    polynomial ring, via Koszul homology on complementary coordinates."""
    if model.variant != THETA_ELL:
        raise ValueError("Koszul table is computed from the 'theta-ell' model")
    ec = model.ec
    verts = ec.complex.vertices
    comp = complementary_coordinates(ec)
    m = len(comp)
    top = model.top
    ops = {}
    for t, ci in enumerate(comp):
        for k in range(top + 1):
            ops[(t, k)] = model.multiply_by_vertex(verts[ci], k)

    def graded_rank(i: int, j: int) -> int:
        """Rank of the Koszul differential K_i -> K_{i-1} in degree j."""
        k = j - i  # module degree of the source
        if i < 1 or i > m or not (0 <= k <= top) or model.dim(k) == 0:
            return 0
        src_sets = list(combinations(range(m), i))
        dst_sets = {s: a for a, s in enumerate(combinations(range(m), i - 1))}
        dim_src_mod = model.dim(k)
        dim_dst_mod = model.dim(k + 1)
        if dim_dst_mod == 0:
            return 0
        rows = len(dst_sets) * dim_dst_mod
        cols = len(src_sets) * dim_src_mod
        mat = [[Fraction(0)] * cols for _ in range(rows)]
        for b, subset in enumerate(src_sets):
            for s, t in enumerate(subset):
                rest = subset[:s] + subset[s + 1:]
                a = dst_sets[rest]
                sign = -1 if s % 2 else 1
                op = ops[(t, k)]
                for r in range(op.rows):
                    row = mat[a * dim_dst_mod + r]
                    for cc in range(op.cols):
                        x = op.entries[r][cc]
                        if x:
                            row[b * dim_src_mod + cc] += sign * x
        q = QMatrix(rows, cols, mat)
        return rank_int(q.int_rows(), cols)

    entries: dict = {}
    for i in range(m + 1):
        for k in range(top + 1):
            if model.dim(k) == 0:
                continue
            j = i + k
            dim_kij = comb(m, i) * model.dim(k)
            b = dim_kij - graded_rank(i, j) - graded_rank(i + 1, j)
            if b:
                entries[(i, j)] = b
    return BettiTable("Rbar", entries)

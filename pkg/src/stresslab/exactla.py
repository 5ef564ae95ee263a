"""Exact rational dense linear algebra.

Everything downstream (stress kernels, Artinian reductions, homology
ranks) funnels through the three primitives here: canonical RREF, kernel
bases and canonical subspaces, all over ``fractions.Fraction``.  No
floating point appears anywhere.

Row reduction itself happens on integer rows (denominators cleared per
row, which changes neither row space nor kernel) in the backend kernel;
see ``_backend``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from ._backend import BACKEND, rank_int, rref_int

__all__ = [
    "BACKEND",
    "Rational",
    "QMatrix",
    "Subspace",
    "rref",
    "rank",
    "kernel_basis",
    "subspace_equal",
    "subspace_contains",
    "subspace_sum",
    "rat",
    "rat_str",
]

# Arbitrary-precision rational in lowest terms with positive denominator;
# the stdlib type satisfies the contract exactly.
Rational = Fraction


def rat(value) -> Fraction:
    """Parse a rational from an int, Fraction or 'p/q' string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def rat_str(q: Fraction) -> str:
    """Serialize a rational as 'p/q' ('p' when the denominator is one)."""
    return str(q)


def _int_row(row: Sequence[Fraction]) -> list[int]:
    """Clear denominators of one row (scales it by a positive integer)."""
    mult = 1
    for x in row:
        d = x.denominator
        if d != 1:
            g = _gcd(mult, d)
            mult = mult // g * d
    if mult == 1:
        return [x.numerator for x in row]
    return [x.numerator * (mult // x.denominator) for x in row]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class QMatrix:
    """Dense immutable matrix of rationals (row-major)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Iterable]):
        data = tuple(tuple(rat(x) for x in r) for r in entries)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("entry grid does not match declared shape")
        self.rows = rows
        self.cols = cols
        self.entries = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols})"

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def transpose(self) -> "QMatrix":
        return QMatrix(
            self.cols, self.rows,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def mul(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        ot = other.transpose().entries
        return QMatrix(
            self.rows, other.cols,
            [[sum(a * b for a, b in zip(r, c)) for c in ot] for r in self.entries],
        )

    def __mul__(self, other):
        return self.mul(other)

    def stack(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return QMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def apply(self, vec: Sequence[Fraction]) -> list[Fraction]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum(a * b for a, b in zip(r, vec)) for r in self.entries]

    def int_rows(self) -> list[list[int]]:
        """Per-row integer scalings of the matrix (for the reduction kernel)."""
        return [_int_row(r) for r in self.entries]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)


def _rref_from_int(pivots: list[int], rows: list[list[int]], ncols: int) -> QMatrix:
    """Rational RREF rows from primitive-integer RREF rows."""
    out = []
    for p, r in zip(pivots, rows):
        piv = r[p]
        out.append([Fraction(x, piv) for x in r])
    return QMatrix(len(out), ncols, out) if out else QMatrix(0, ncols, [])


def rref(m: QMatrix) -> tuple[int, list[int], QMatrix]:
    """Unique reduced row echelon form: (rank, pivot columns, reduced).

    The reduced matrix keeps only the nonzero rows; callers that need the
    original shape can pad with zero rows.
    """
    pivots, rows = rref_int(m.int_rows(), m.cols)
    red = _rref_from_int(pivots, rows, m.cols)
    return len(pivots), list(pivots), red


def rref_padded(m: QMatrix) -> tuple[int, list[int], QMatrix]:
    """Like :func:`rref` but padded with zero rows to the input shape."""
    r, pivots, red = rref(m)
    if red.rows < m.rows:
        pad = [[Fraction(0)] * m.cols for _ in range(m.rows - red.rows)]
        red = QMatrix(m.rows, m.cols, list(red.entries) + pad)
    return r, pivots, red


def rank(m: QMatrix) -> int:
    return rank_int(m.int_rows(), m.cols)


def rank_of_int_rows(rows: list[list[int]], ncols: int) -> int:
    """Rank of an integer row list without QMatrix overhead (hot path)."""
    return rank_int(rows, ncols)


class Subspace:
    """Linear subspace of Q^n with a canonical RREF basis.

    Two subspaces are equal iff their basis matrices are identical, which
    holds iff they have the same span.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: QMatrix):
        if basis.cols != ambient_dim:
            raise ValueError("basis width differs from ambient dimension")
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def from_spanning(cls, ambient_dim: int, rows: Sequence[Sequence]) -> "Subspace":
        if not rows:
            return cls.zero(ambient_dim)
        m = QMatrix.from_rows(rows)
        if m.cols != ambient_dim:
            raise ValueError("spanning rows have wrong length")
        _, _, red = rref(m)
        return cls(ambient_dim, red)

    @classmethod
    def from_int_rows(cls, ambient_dim: int, rows: list[list[int]]) -> "Subspace":
        pivots, red = rref_int(rows, ambient_dim)
        return cls(ambient_dim, _rref_from_int(pivots, red, ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, QMatrix(0, ambient_dim, []))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, QMatrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"

    def contains_vector(self, vec: Sequence) -> bool:
        """Membership test by reduction against the RREF basis."""
        v = [rat(x) for x in vec]
        if len(v) != self.ambient_dim:
            raise ValueError("ambient dimensions differ")
        pivots = self._pivots()
        for r, p in enumerate(pivots):
            c = v[p]
            if c != 0:
                row = self.basis.entries[r]
                v = [a - c * b for a, b in zip(v, row)]
        return all(x == 0 for x in v)

    def _pivots(self) -> list[int]:
        out = []
        for row in self.basis.entries:
            for j, x in enumerate(row):
                if x != 0:
                    out.append(j)
                    break
        return out


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ")
    return a.basis == b.basis


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """True iff span(b) is contained in span(a)."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ")
    return all(a.contains_vector(row) for row in b.basis.entries)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ")
    rows = list(a.basis.entries) + list(b.basis.entries)
    return Subspace.from_spanning(a.ambient_dim, rows)


def solve(a: QMatrix, b: Sequence) -> Optional[list]:
    """One solution of a x = b, or None if inconsistent.

    Free variables are set to zero; uniqueness is not required.
    """
    bvec = [rat(x) for x in b]
    if len(bvec) != a.rows:
        raise ValueError("right-hand side length mismatch")
    aug = QMatrix(a.rows, a.cols + 1,
                  [list(r) + [x] for r, x in zip(a.entries, bvec)])
    _, pivots, red = rref(aug)
    x = [Fraction(0)] * a.cols
    for p, row in zip(pivots, red.entries):
        if p == a.cols:
            return None
        x[p] = row[a.cols]
    return x


def kernel_basis(m: QMatrix) -> Subspace:
    """Right kernel {v : m v = 0} as a canonical subspace of Q^cols."""
    return kernel_of_int_rows(m.int_rows(), m.cols)


def kernel_of_int_rows(rows: list[list[int]], ncols: int) -> Subspace:
    """Kernel from integer constraint rows (hot path, skips QMatrix)."""
    pivots, red = rref_int(rows, ncols)
    rank_ = len(pivots)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis_rows = []
    for c in free:
        v = [Fraction(0)] * ncols
        v[c] = Fraction(1)
        for r in range(rank_):
            x = red[r][c]
            if x:
                v[pivots[r]] = Fraction(-x, red[r][pivots[r]])
        basis_rows.append(v)
    if not basis_rows:
        return Subspace.zero(ncols)
    # kernel vectors built from RREF free columns are independent; one more
    # small RREF puts the basis in canonical form
    return Subspace.from_spanning(ncols, basis_rows)

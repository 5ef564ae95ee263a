"""Integer row-reduction kernels, pure Python reference implementation.

All heavy linear algebra in the package reduces to exact echelon forms of
integer matrices (rational rows are cleared of denominators first, which
changes neither row space nor kernel).  Rows are kept primitive: divided
by their gcd, with a positive leading entry.  The reduced row echelon
form over the rationals is recovered by scaling each row by the inverse
of its pivot entry.

A compiled drop-in replacement lives in ``_rowred.pyx``; both modules
export the same three functions and must produce identical output.
"""

import bisect
from math import gcd

BACKEND = "python"


def _normalize(row, lead):
    """Divide by the gcd and make row[lead] positive. Returns the row."""
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g == 0:
        return row
    if row[lead] < 0:
        g = -g
    if g != 1:
        return [x // g for x in row]
    return row


def _leading(row, start, ncols):
    for j in range(start, ncols):
        if row[j]:
            return j
    return -1


def _reduce_row(row, ncols, pivots, basis):
    """Eliminate `row` against echelon `basis`; return (lead, row) or (-1, None)."""
    lead = _leading(row, 0, ncols)
    for r, p in enumerate(pivots):
        if lead == -1 or p > lead:
            break
        if p < lead:
            continue
        brow = basis[r]
        piv = brow[p]
        f = row[p]
        row = [piv * a - f * b for a, b in zip(row, brow)]
        lead = _leading(row, p + 1, ncols)
    if lead == -1:
        return -1, None
    return lead, _normalize(row, lead)


def echelon(rows, ncols):
    """Row echelon form of an iterable of integer rows.

    Returns (pivots, basis): strictly increasing pivot columns and the
    corresponding primitive rows.  Entries above pivots are not cleared.
    """
    pivots = []
    basis = []
    for row in rows:
        lead, red = _reduce_row(list(row), ncols, pivots, basis)
        if lead == -1:
            continue
        # keep basis ordered by pivot column
        at = bisect.bisect_left(pivots, lead)
        pivots.insert(at, lead)
        basis.insert(at, red)
    return pivots, basis


def rank(rows, ncols):
    """Rank of an integer matrix given as an iterable of rows."""
    pivots, _ = echelon(rows, ncols)
    return len(pivots)


def rref(rows, ncols):
    """Canonical primitive-integer RREF of an iterable of integer rows.

    Returns (pivots, basis).  Each basis row is primitive with a positive
    pivot entry and zeros in every other pivot column; dividing row r by
    basis[r][pivots[r]] gives the unique rational RREF.
    """
    pivots, basis = echelon(rows, ncols)
    for r in range(len(basis) - 2, -1, -1):
        row = basis[r]
        changed = False
        for s in range(r + 1, len(basis)):
            p = pivots[s]
            f = row[p]
            if f:
                brow = basis[s]
                piv = brow[p]
                row = [piv * a - f * b for a, b in zip(row, brow)]
                changed = True
        if changed:
            basis[r] = _normalize(row, pivots[r])
    return pivots, basis

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Integer row-reduction kernels, compiled implementation.

Same contract as ``_rowred_py``: exact echelon / RREF over the integers
with primitive rows.  Rows whose entries stay below 2^62 are kept in flat
int64 arrays and combined with 128-bit overflow checks; rows that outgrow
that are promoted to lists of Python ints (and demoted back once a gcd
normalization shrinks them).
"""

import bisect
from math import gcd as _pygcd

from cpython cimport array
import array

BACKEND = "cython"

cdef extern from *:
    ctypedef long long i128 "__int128"

cdef long long LIM = (<long long>1) << 62
cdef i128 LIM128 = (<i128>1) << 62

cdef array.array _TEMPLATE = array.array('q', [])


cdef inline long long _llabs(long long x):
    return -x if x < 0 else x


cdef long long _gcd64(long long a, long long b):
    a = _llabs(a)
    b = _llabs(b)
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef Py_ssize_t _lead64(array.array row, Py_ssize_t start, Py_ssize_t n):
    cdef long long* p = row.data.as_longlongs
    cdef Py_ssize_t j
    for j in range(start, n):
        if p[j]:
            return j
    return -1


cdef Py_ssize_t _lead_obj(list row, Py_ssize_t start, Py_ssize_t n):
    cdef Py_ssize_t j
    for j in range(start, n):
        if row[j]:
            return j
    return -1


cdef array.array _axpy64(array.array ra, long long piv, array.array rb,
                         long long f, Py_ssize_t start, Py_ssize_t n,
                         bint* overflow):
    """piv*ra - f*rb, assuming rb[j] = 0 for j < start. None on overflow."""
    cdef array.array out = array.clone(_TEMPLATE, n, zero=False)
    cdef long long* pa = ra.data.as_longlongs
    cdef long long* pb = rb.data.as_longlongs
    cdef long long* po = out.data.as_longlongs
    cdef i128 t
    cdef Py_ssize_t j
    for j in range(start):
        t = <i128>piv * pa[j]
        if t > LIM128 or t < -LIM128:
            overflow[0] = True
            return None
        po[j] = <long long>t
    for j in range(start, n):
        t = <i128>piv * pa[j] - <i128>f * pb[j]
        if t > LIM128 or t < -LIM128:
            overflow[0] = True
            return None
        po[j] = <long long>t
    overflow[0] = False
    return out


cdef list _axpy_obj(object ra, object piv, object rb, object f,
                    Py_ssize_t start, Py_ssize_t n):
    cdef list out = [0] * n
    cdef Py_ssize_t j
    for j in range(start):
        out[j] = piv * ra[j]
    for j in range(start, n):
        out[j] = piv * ra[j] - f * rb[j]
    return out


cdef array.array _norm64(array.array row, Py_ssize_t lead, Py_ssize_t n):
    cdef long long* p = row.data.as_longlongs
    cdef long long g = 0
    cdef Py_ssize_t j
    for j in range(lead, n):
        if p[j]:
            g = _gcd64(g, p[j])
            if g == 1:
                break
    if g == 0:
        return row
    if p[lead] < 0:
        g = -g
    if g != 1:
        for j in range(lead, n):
            p[j] = p[j] // g
    return row


cdef object _norm_obj(list row, Py_ssize_t lead, Py_ssize_t n):
    """gcd/sign normalize an object row; demote to int64 if it fits."""
    cdef object g = 0
    cdef Py_ssize_t j
    for j in range(lead, n):
        if row[j]:
            g = _pygcd(g, row[j])
            if g == 1:
                break
    if g == 0:
        return row
    if row[lead] < 0:
        g = -g
    if g != 1:
        for j in range(lead, n):
            x = row[j]
            if x:
                row[j] = x // g
    try:
        return array.array('q', row)
    except OverflowError:
        return row


cdef object _to_row(object row):
    """Incoming row -> array('q') if it fits, else list of Python ints."""
    try:
        return array.array('q', row)
    except OverflowError:
        return list(row)


cdef list _as_list(object row):
    if type(row) is list:
        return <list>row
    return list(row)


cdef object _combine(object row, object brow, Py_ssize_t p, Py_ssize_t n):
    """Return piv*row - row[p]*brow, normalized storage (not gcd-reduced)."""
    cdef bint overflow
    cdef object out
    if type(row) is array.array and type(brow) is array.array:
        out = _axpy64(<array.array>row, (<array.array>brow).data.as_longlongs[p],
                      <array.array>brow, (<array.array>row).data.as_longlongs[p],
                      p, n, &overflow)
        if not overflow:
            return out
    return _axpy_obj(row, brow[p], brow, row[p], p, n)


cdef Py_ssize_t _lead_any(object row, Py_ssize_t start, Py_ssize_t n):
    if type(row) is array.array:
        return _lead64(<array.array>row, start, n)
    return _lead_obj(<list>row, start, n)


cdef object _norm_any(object row, Py_ssize_t lead, Py_ssize_t n):
    if type(row) is array.array:
        return _norm64(<array.array>row, lead, n)
    return _norm_obj(<list>row, lead, n)


cdef _echelon(rows, Py_ssize_t n):
    cdef list pivots = []
    cdef list basis = []
    cdef Py_ssize_t lead, at, r, p
    cdef object row
    for raw in rows:
        row = _to_row(raw)
        lead = _lead_any(row, 0, n)
        r = 0
        while lead != -1 and r < len(pivots):
            p = <Py_ssize_t>pivots[r]
            if p > lead:
                break
            if p == lead:
                row = _combine(row, basis[r], p, n)
                lead = _lead_any(row, p + 1, n)
            r += 1
        if lead == -1:
            continue
        row = _norm_any(row, lead, n)
        at = bisect.bisect_left(pivots, lead)
        pivots.insert(at, lead)
        basis.insert(at, row)
    return pivots, basis


def echelon(rows, ncols):
    """Row echelon form; returns (pivots, basis) with plain-list rows."""
    pivots, basis = _echelon(rows, ncols)
    return pivots, [_as_list(b) for b in basis]


def rank(rows, ncols):
    """Rank of an integer matrix given as an iterable of rows."""
    pivots, _ = _echelon(rows, ncols)
    return len(pivots)


def rref(rows, ncols):
    """Canonical primitive-integer RREF; same contract as the pure kernel."""
    cdef Py_ssize_t n = ncols
    pivots, basis = _echelon(rows, n)
    cdef Py_ssize_t m = len(basis)
    cdef Py_ssize_t r, s, p
    cdef bint changed
    cdef object row
    for r in range(m - 2, -1, -1):
        row = basis[r]
        changed = False
        for s in range(r + 1, m):
            p = <Py_ssize_t>pivots[s]
            if row[p]:
                row = _combine(row, basis[s], p, n)
                changed = True
        if changed:
            basis[r] = _norm_any(row, <Py_ssize_t>pivots[r], n)
    return pivots, [_as_list(b) for b in basis]

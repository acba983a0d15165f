"""Integer row reduction: Hermite normal form, membership and kernels.

All matrices are lists of integer rows.  The Hermite form used here is the
row-style one: rows are in echelon form, pivots are positive, and entries
above a pivot lie in ``[0, pivot)``.  It is unique for a given row lattice.
"""

from __future__ import annotations


def _xgcd(a: int, b: int):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hnf(rows):
    """Hermite normal form of the lattice spanned by ``rows`` (zero rows dropped)."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    r = 0
    pivots = []
    for c in range(ncols):
        if r == len(rows):
            break
        # fold every row below r into row r on column c with unimodular 2x2 moves
        for i in range(r + 1, len(rows)):
            b = rows[i][c]
            if b == 0:
                continue
            a = rows[r][c]
            if a == 0:
                rows[r], rows[i] = rows[i], rows[r]
                continue
            g, x, y = _xgcd(a, b)
            pa, pb = a // g, b // g
            ra, rb = rows[r], rows[i]
            rows[r] = [x * u + y * v for u, v in zip(ra, rb)]
            rows[i] = [pa * v - pb * u for u, v in zip(ra, rb)]
        if rows[r][c] == 0:
            continue
        if rows[r][c] < 0:
            rows[r] = [-u for u in rows[r]]
        p = rows[r][c]
        for i in range(r):
            q = rows[i][c] // p
            if q:
                rows[i] = [u - q * v for u, v in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return [row for row in rows[:r]]


def pivot_columns(h):
    return [next(j for j, v in enumerate(row) if v) for row in h]


def solve_in_hnf(h, vec):
    """Integer coefficients c with c . h == vec, or None if vec is not in the lattice."""
    vec = list(vec)
    coeffs = []
    for row in h:
        p = next(j for j, v in enumerate(row) if v)
        if any(vec[:p]):
            return None
        q, rem = divmod(vec[p], row[p])
        if rem:
            return None
        coeffs.append(q)
        if q:
            vec = [u - q * v for u, v in zip(vec, row)]
    if any(vec):
        return None
    return coeffs


def kernel(matrix, nvars):
    """A Z-basis of {u in Z^nvars : matrix . u = 0} for an integer matrix.

    The lattice of rows ``(matrix . e_j | e_j)`` is put in Hermite form; rows
    whose first block vanishes span the kernel, by the echelon property.
    """
    nrows = len(matrix)
    aug = []
    for j in range(nvars):
        col = [matrix[i][j] for i in range(nrows)]
        aug.append(col + [1 if k == j else 0 for k in range(nvars)])
    basis = []
    for row in hnf(aug):
        if not any(row[:nrows]):
            basis.append(row[nrows:])
    return basis


def int_det(m) -> int:
    """Determinant of a square integer matrix by fraction-free elimination (Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]

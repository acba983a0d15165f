"""Dense linear algebra over an exact field.

Matrices are lists of rows.  Entries may be FieldElements or Fractions; the
routines only need ``+ - * /``, ``==`` and truthiness.
"""

from __future__ import annotations

from .errors import SingularBlock


def identity(field, n):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def zeros(field, rows, cols):
    return [[field.zero] * cols for _ in range(rows)]


def transpose(m, cols=None):
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a, b, field=None):
    """Product of an (r x k) and a (k x c) matrix."""
    if not a:
        return []
    k = len(b)
    if k == 0:
        if field is None:
            raise ValueError("need the field to multiply through an empty dimension")
        return zeros(field, len(a), 0)
    cols = len(b[0])
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = row[0] * b[0][j]
            for t in range(1, k):
                acc = acc + row[t] * b[t][j]
            new.append(acc)
        out.append(new)
    return out


def vecmat(v, m, field):
    """Row vector times matrix."""
    if not m:
        return []
    cols = len(m[0])
    out = []
    for j in range(cols):
        acc = field.zero
        for t, vt in enumerate(v):
            if vt:
                acc = acc + vt * m[t][j]
        out.append(acc)
    return out


def rref(m):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    rows = [list(r) for r in m]
    pivots = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m) -> int:
    return len(rref(m)[1])


def det(m, field):
    n = len(m)
    if n == 0:
        return field.one
    rows = [list(r) for r in m]
    result = field.one
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return field.zero
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = -result
        p = rows[c][c]
        result = result * p
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / p
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def inverse(m, field):
    n = len(m)
    if n == 0:
        return []
    aug = [list(row) + e for row, e in zip(m, identity(field, n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularBlock("matrix is not invertible")
    return [row[n:] for row in red]


def independent_rows(m):
    """Indices of a maximal set of linearly independent rows, chosen greedily."""
    chosen = []
    basis = []
    for i, row in enumerate(m):
        if rank(basis + [row]) > len(basis):
            basis.append(row)
            chosen.append(i)
    return chosen

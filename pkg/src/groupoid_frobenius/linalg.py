"""Dense exact linear algebra over QQ or GF(p).

Matrices are lists of rows.  Every routine is exact; elimination picks the
first nonzero pivot, which is all that is needed when there is no rounding.
"""

from __future__ import annotations

from typing import Sequence

from .scalars import QQ

Matrix = list[list]


class SingularMatrix(ArithmeticError):
    pass


def zeros(rows: int, cols: int, field=QQ) -> Matrix:
    return [[field.zero] * cols for _ in range(rows)]


def identity(n: int, field=QQ) -> Matrix:
    m = zeros(n, n, field)
    for i in range(n):
        m[i][i] = field.one
    return m


def to_field(m: Sequence[Sequence], field=QQ) -> Matrix:
    return [[field(x) for x in row] for row in m]


def transpose(m: Matrix) -> Matrix:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix, field=QQ) -> Matrix:
    """Product ``a @ b``; skips zero entries so sparse factors stay cheap."""
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    if a and len(a[0]) != inner:
        raise ValueError(f"shape mismatch {len(a)}x{len(a[0])} @ {inner}x{cols}")
    b_nz = [[(j, x) for j, x in enumerate(row) if x] for row in b]
    out = []
    for row in a:
        acc = [field.zero] * cols
        for k, x in enumerate(row):
            if not x:
                continue
            for j, y in b_nz[k]:
                acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def matvec(m: Matrix, v: Sequence, field=QQ) -> list:
    out = []
    for row in m:
        s = field.zero
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def is_zero(m: Matrix) -> bool:
    return all(not x for row in m for x in row)


def kron(a: Matrix, b: Matrix, field=QQ) -> Matrix:
    rows = []
    for ra in a:
        for rb in b:
            rows.append([x * y if x and y else field.zero for x in ra for y in rb])
    return rows


def row_reduce(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [list(row) for row in m]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(m: Matrix) -> int:
    if not m or not m[0]:
        return 0
    return len(row_reduce(m)[1])


def inverse(m: Matrix, field=QQ) -> Matrix:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("inverse of a non-square matrix")
    aug = [list(row) + e for row, e in zip(m, identity(n, field))]
    red, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in red]


def solve(m: Matrix, rhs: Sequence, field=QQ) -> list:
    """Unique solution of ``m x = rhs``; raises SingularMatrix otherwise."""
    n = len(m[0]) if m else 0
    aug = [list(row) + [b] for row, b in zip(m, rhs)]
    red, pivots = row_reduce(aug)
    if n in pivots:
        raise SingularMatrix("inconsistent system")
    if pivots != list(range(n)):
        raise SingularMatrix("solution is not unique")
    return [red[i][n] for i in range(n)]


def nullspace(m: Matrix, field=QQ) -> list[list]:
    """Basis of ``{x : m x = 0}``."""
    cols = len(m[0]) if m else 0
    red, pivots = row_reduce(m) if m else ([], [])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * cols
        v[f] = field.one
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(v)
    return basis


def determinant(m: Matrix, field=QQ):
    n = len(m)
    m = [list(row) for row in m]
    det = field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det

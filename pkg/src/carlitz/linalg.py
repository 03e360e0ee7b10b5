"""Small exact linear algebra over the package's ring objects.

Matrices are plain lists of lists of ring elements.  Determinants over an
integral domain (A = F_q[theta]) use fraction-free Bareiss elimination so
no rational arithmetic is ever needed; inversion and solving are offered
over fields only (Gaussian elimination).
"""

from __future__ import annotations

from .errors import CarlitzDomainError


def mat_mul(ring, A, B):
    n, m = len(A), len(B[0])
    inner = len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = ring.zero
            for t in range(inner):
                acc = ring.add(acc, ring.mul(A[i][t], B[t][j]))
            row.append(acc)
        out.append(row)
    return out


def mat_eq(ring, A, B) -> bool:
    if len(A) != len(B) or any(len(r) != len(s) for r, s in zip(A, B)):
        return False
    for ra, rb in zip(A, B):
        for a, b in zip(ra, rb):
            if not ring.is_zero(ring.sub(a, b)):
                return False
    return True


def det_bareiss(ring, M):
    """Fraction-free determinant over an integral domain with exact_div."""
    n = len(M)
    if n == 0:
        return ring.one
    a = [row[:] for row in M]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if ring.is_zero(a[k][k]):
            pivot = None
            for i in range(k + 1, n):
                if not ring.is_zero(a[i][k]):
                    pivot = i
                    break
            if pivot is None:
                return ring.zero
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = ring.sub(ring.mul(a[i][j], a[k][k]),
                               ring.mul(a[i][k], a[k][j]))
                a[i][j] = ring.exact_div(num, prev)
            a[i][k] = ring.zero
        prev = a[k][k]
    d = a[n - 1][n - 1]
    if sign < 0:
        d = ring.neg(d)
    return d


def gauss_invert(field, M):
    """Inverse of a square matrix over a field; None if singular."""
    n = len(M)
    a = [row[:] + [field.one if i == j else field.zero for j in range(n)]
         for i, row in enumerate(M)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not field.is_zero(a[r][col]):
                pivot = r
                break
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = field.inv(a[col][col])
        a[col] = [field.mul(inv, x) for x in a[col]]
        for r in range(n):
            if r != col and not field.is_zero(a[r][col]):
                factor = a[r][col]
                a[r] = [field.sub(x, field.mul(factor, y))
                        for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def mat_vec(field, M, v):
    out = []
    for row in M:
        acc = field.zero
        for a, x in zip(row, v):
            acc = field.add(acc, field.mul(a, x))
        out.append(acc)
    return out


def solve(field, M, v):
    inv = gauss_invert(field, M)
    if inv is None:
        raise CarlitzDomainError("singular linear system")
    return mat_vec(field, inv, v)

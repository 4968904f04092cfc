"""Exact Gaussian elimination over Q(sqrt2, sqrt3)."""

from __future__ import annotations

from .exactfield import ONE, ZERO, FieldElement

__all__ = ["rref", "rank", "nullspace", "solve", "in_span", "mat_mul", "identity", "zeros"]


def zeros(r: int, c: int) -> list[list[FieldElement]]:
    return [[ZERO] * c for _ in range(r)]


def identity(n: int) -> list[list[FieldElement]]:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = ONE
    return out


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = zeros(n, m)
    for i in range(n):
        row = a[i]
        for t in range(k):
            x = row[t]
            if x:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        out[i][j] = out[i][j] + x * bt[j]
    return out


def rref(rows):
    """Reduced row echelon form; first-nonzero pivoting.  Returns (matrix, pivot columns)."""
    a = [list(r) for r in rows]
    if not a:
        return a, []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c].inv()
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int | None = None):
    """Basis of {x : A x = 0} as a list of column vectors."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    a, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, p in enumerate(piv):
            v[p] = -a[i][f]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution of A x = b, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    a, piv = rref(aug)
    if ncols in piv:
        return None
    x = [ZERO] * ncols
    for i, p in enumerate(piv):
        x[p] = a[i][ncols]
    return x


def in_span(vectors, target) -> bool:
    """Whether ``target`` is a linear combination of ``vectors`` (all same length)."""
    if not any(target):
        return True
    if not vectors:
        return False
    cols = [[v[i] for v in vectors] for i in range(len(target))]
    return solve(cols, list(target)) is not None

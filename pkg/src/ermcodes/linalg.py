"""Dense linear algebra over an abstract field.

A *field* here is any object exposing ``zero``, ``one``, ``add``, ``sub``,
``neg``, ``mul``, ``inv`` and ``is_zero``.  Prime fields (``is_prime_field``)
take an integer fast path; large prime-field eliminations go through numpy.
"""

from __future__ import annotations

from typing import Any, Sequence

import numpy as np

from .errors import SingularMatrix

Matrix = list[list[Any]]

# below this many entries the plain-int elimination beats numpy's call overhead
_NUMPY_THRESHOLD = 600


def _is_prime(field) -> bool:
    return getattr(field, "is_prime_field", False)


def rref(rows: Sequence[Sequence[Any]], field, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with leftmost pivots scaled to one.

    Returns the nonzero rows and the list of pivot columns.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    if ncols is None:
        ncols = len(rows[0])
    if _is_prime(field):
        if len(rows) * ncols >= _NUMPY_THRESHOLD:
            return _rref_prime_numpy(rows, field.p, ncols)
        return _rref_prime(rows, field.p, ncols)
    return _rref_generic(rows, field, ncols)


def _rref_prime(rows: Matrix, p: int, ncols: int) -> tuple[Matrix, list[int]]:
    A = [[x % p for x in r] for r in rows]
    nr = len(A)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        row = [(x * inv) % p for x in A[r]]
        A[r] = row
        for i in range(nr):
            if i != r:
                f = A[i][c]
                if f:
                    Ai = A[i]
                    A[i] = [(Ai[j] - f * row[j]) % p for j in range(ncols)]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _rref_prime_numpy(rows: Matrix, p: int, ncols: int) -> tuple[Matrix, list[int]]:
    A = np.array(rows, dtype=np.int64).reshape(len(rows), ncols) % p
    nr = A.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nr:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            A[hit] = (A[hit] - np.outer(col[hit], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r].tolist(), pivots


def _rref_generic(rows: Matrix, field, ncols: int) -> tuple[Matrix, list[int]]:
    A = rows
    nr = len(A)
    pivots: list[int] = []
    r = 0
    add, mul, neg, is_zero = field.add, field.mul, field.neg, field.is_zero
    for c in range(ncols):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if not is_zero(A[i][c])), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = field.inv(A[r][c])
        row = [mul(x, inv) for x in A[r]]
        A[r] = row
        for i in range(nr):
            if i != r and not is_zero(A[i][c]):
                f = neg(A[i][c])
                Ai = A[i]
                A[i] = [add(Ai[j], mul(f, row[j])) for j in range(ncols)]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(rows: Sequence[Sequence[Any]], field, ncols: int | None = None) -> int:
    return len(rref(rows, field, ncols)[1])


def nullspace(rows: Sequence[Sequence[Any]], ncols: int, field) -> Matrix:
    """Basis (in RREF) of the right kernel ``{x : rows @ x = 0}``."""
    R, pivots = rref(rows, field, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(R[i][f])
        basis.append(v)
    return rref(basis, field, ncols)[0]


def solve(rows: Sequence[Sequence[Any]], rhs: Sequence[Any], field, ncols: int | None = None):
    """Solve ``rows @ x = rhs``.

    Returns ``(x, nullity)`` for a particular solution, or ``(None, nullity)``
    when the system is inconsistent.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, pivots = rref(aug, field, ncols + 1)
    nullity = ncols - len([c for c in pivots if c < ncols])
    if ncols in pivots:
        return None, nullity
    x = [field.zero] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = R[i][ncols]
    return x, nullity


def inverse(A: Sequence[Sequence[Any]], field) -> Matrix:
    n = len(A)
    aug = [list(row) + [field.one if i == j else field.zero for j in range(n)] for i, row in enumerate(A)]
    R, pivots = rref(aug, field, 2 * n)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in R[:n]]


def matmul(A: Sequence[Sequence[Any]], B: Sequence[Sequence[Any]], field) -> Matrix:
    if _is_prime(field):
        p = field.p
        return [[sum(a * b for a, b in zip(row, col)) % p for col in zip(*B)] for row in A]
    out = []
    for row in A:
        out_row = []
        for col in zip(*B):
            acc = field.zero
            for a, b in zip(row, col):
                acc = field.add(acc, field.mul(a, b))
            out_row.append(acc)
        out.append(out_row)
    return out


def matvec(A: Sequence[Sequence[Any]], v: Sequence[Any], field) -> list[Any]:
    return [row[0] for row in matmul(A, [[x] for x in v], field)]


def identity(n: int, field) -> Matrix:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence[Any]]) -> Matrix:
    return [list(col) for col in zip(*A)]


def batch_rank_mod_p(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack of matrices over F_p, shape ``(B, r, c)``.

    Eliminates column by column across the whole stack at once.
    """
    M = np.array(mats, dtype=np.int64) % p
    B, r, c = M.shape
    inv_table = np.zeros(p, dtype=np.int64)
    inv_table[1:] = [pow(a, -1, p) for a in range(1, p)]
    used = np.zeros((B, r), dtype=bool)
    ranks = np.zeros(B, dtype=np.int64)
    idx = np.arange(B)
    for col in range(c):
        cand = (~used) & (M[:, :, col] != 0)
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = cand.argmax(axis=1)
        prow = M[idx, piv, :]
        factor = (M[:, :, col] * inv_table[M[idx, piv, col]][:, None]) % p
        factor[used] = 0
        factor[idx, piv] = 0
        factor[~has] = 0
        M = (M - factor[:, :, None] * prow[:, None, :]) % p
        used[idx[has], piv[has]] = True
        ranks += has
    return ranks

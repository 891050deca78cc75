"""Exact linear algebra over the prime field F_p.

Matrices are integer numpy arrays with entries in ``0..p-1``.  Pivots are
always chosen as the first nonzero entry scanning columns left to right,
so every basis returned here is canonical.
"""

from __future__ import annotations

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _inv(a: int, p: int) -> int:
    return pow(int(a), p - 2, p)


def rref(A, p: int):
    """Reduced row echelon form of ``A`` over F_p.

    Returns ``(R, pivots)`` where ``pivots`` lists pivot column indices.
    """
    R = np.array(A, dtype=np.int64) % p
    if R.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(R[row:, col])[0]
        if nz.size == 0:
            continue
        r = row + int(nz[0])
        if r != row:
            R[[row, r]] = R[[r, row]]
        R[row] = (R[row] * _inv(R[row, col], p)) % p
        for other in range(m):
            if other != row and R[other, col]:
                R[other] = (R[other] - R[other, col] * R[row]) % p
        pivots.append(col)
        row += 1
    return R, pivots


def rank(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(A, p: int) -> np.ndarray:
    """Basis of ``{x : A x = 0}`` as the columns of an ``n x d`` matrix.

    One basis vector per free column, in increasing column order, with a 1
    in that free position (the usual RREF parametrisation).
    """
    A = np.asarray(A, dtype=np.int64)
    m, n = A.shape
    if m == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref(A, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for r, pc in enumerate(pivots):
            basis[pc, k] = (-R[r, fc]) % p
    return basis


def left_nullspace(A, p: int) -> np.ndarray:
    """Basis of ``{y : y A = 0}`` as the rows of a ``d x m`` matrix."""
    A = np.asarray(A, dtype=np.int64)
    return nullspace(A.T, p).T.copy()


def solve(A, B, p: int):
    """One solution ``X`` of ``A X = B`` over F_p, or ``None`` if none exists.

    Free variables are set to zero, so the answer is unique whenever ``A``
    has full column rank.
    """
    A = np.asarray(A, dtype=np.int64) % p
    B = np.asarray(B, dtype=np.int64) % p
    m, n = A.shape
    k = B.shape[1]
    if m == 0:
        return np.zeros((n, k), dtype=np.int64)
    R, pivots = rref(np.hstack([A, B]), p)
    if any(pc >= n for pc in pivots):
        return None
    X = np.zeros((n, k), dtype=np.int64)
    for r, pc in enumerate(pivots):
        X[pc] = R[r, n:]
    return X % p


def inverse(A, p: int):
    """Inverse of a square matrix over F_p, or ``None`` if singular."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    if A.shape != (n, n):
        return None
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if rank(A, p) != n:
        return None
    return solve(A, np.eye(n, dtype=np.int64), p)

"""Exact linear algebra over F_p on numpy integer matrices.

Matrices are 2-D ``numpy.int64`` arrays with entries in [0, p).  Row
reduction uses modular inverses, so every result is exact; p is assumed
small enough that p**2 fits in an int64 (true for any prime below 2**31).
"""

from __future__ import annotations

import numpy as np

__all__ = ["rref", "rank", "in_column_span", "nullspace", "solve_columns"]


def _as_matrix(M, p: int) -> np.ndarray:
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        A = np.atleast_2d(A)
    A %= p
    return A


def rref(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (R, pivot column list)."""
    A = _as_matrix(M, p)
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        mask = np.nonzero(A[:, c])[0]
        for j in mask:
            if j != r:
                A[j] = (A[j] - A[j, c] * A[r]) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M, p: int) -> int:
    return len(rref(M, p)[1])


def in_column_span(A, b, p: int) -> bool:
    """True iff the vector b is an F_p-linear combination of A's columns."""
    A = _as_matrix(A, p)
    b = np.asarray(b, dtype=np.int64) % p
    if A.shape[1] == 0:
        return not b.any()
    aug = np.hstack([A, b.reshape(-1, 1)])
    return rank(A, p) == rank(aug, p)


def solve_columns(A, b, p: int) -> np.ndarray | None:
    """One solution x of A @ x = b mod p, or None if inconsistent."""
    A = _as_matrix(A, p)
    b = np.asarray(b, dtype=np.int64) % p
    rows, cols = A.shape
    aug = np.hstack([A, b.reshape(-1, 1)])
    R, pivots = rref(aug, p)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = R[r, cols]
    return x


def nullspace(M, p: int) -> np.ndarray:
    """Basis of the right nullspace mod p, one vector per row."""
    A = _as_matrix(M, p)
    rows, cols = A.shape
    R, pivots = rref(A, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for r, c in enumerate(pivots):
            basis[k, c] = (-R[r, fc]) % p
    return basis

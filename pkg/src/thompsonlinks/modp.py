"""Gaussian elimination over Z/p for prime p."""

from __future__ import annotations

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def row_reduce(matrix, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod ``p`` and its pivot columns."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a = np.array(matrix, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, col])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, col]), -1, p)) % p
        factors = a[:, col].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r])) % p
        pivots.append(col)
        r += 1
    return a, pivots


def rank_mod_p(matrix, p: int) -> int:
    if np.size(matrix) == 0:
        return 0
    return len(row_reduce(matrix, p)[1])


def nullspace_mod_p(matrix, p: int) -> np.ndarray:
    """Basis of the right kernel as rows of an array."""
    a = np.array(matrix, dtype=np.int64)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    rref, pivots = row_reduce(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-rref[r, f]) % p
    return basis

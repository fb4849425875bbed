"""Small dense GF(2) linear algebra helpers used across the package."""
from __future__ import annotations

import numpy as np


def rank(mat: np.ndarray) -> int:
    """Rank of a binary matrix over GF(2)."""
    m = (mat % 2).astype(np.uint8).copy()
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        piv = None
        for rr in range(r, rows):
            if m[rr, c]:
                piv = rr
                break
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        hits = np.nonzero(m[:, c])[0]
        for rr in hits:
            if rr != r:
                m[rr] ^= m[r]
        r += 1
        if r == rows:
            break
    return r


def row_reduce(mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form over GF(2); returns (rref, pivot columns)."""
    m = (mat % 2).astype(np.uint8).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = None
        for rr in range(r, rows):
            if m[rr, c]:
                piv = rr
                break
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        for rr in range(rows):
            if rr != r and m[rr, c]:
                m[rr] ^= m[r]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def nullspace(mat: np.ndarray) -> np.ndarray:
    """Basis (rows) of the right nullspace of a binary matrix over GF(2)."""
    rref, pivots = row_reduce(mat)
    cols = mat.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, pc in enumerate(pivots):
            if rref[r, f]:
                basis[k, pc] = 1
    return basis


def solve(mat: np.ndarray, rhs: np.ndarray) -> np.ndarray | None:
    """One solution x of mat @ x = rhs over GF(2), or None if infeasible."""
    m = (mat % 2).astype(np.uint8)
    aug = np.concatenate([m, (rhs % 2).astype(np.uint8).reshape(-1, 1)], axis=1)
    rref, pivots = row_reduce(aug)
    cols = mat.shape[1]
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.uint8)
    for r, pc in enumerate(pivots):
        x[pc] = rref[r, cols]
    return x


def pack_rows(mat: np.ndarray) -> np.ndarray:
    """Pack each row of a binary matrix into a uint64 (width <= 64)."""
    rows, cols = mat.shape
    if cols > 64:
        raise ValueError("pack_rows supports width <= 64")
    weights = (1 << np.arange(cols, dtype=np.uint64))
    return (mat.astype(np.uint64) * weights).sum(axis=1)

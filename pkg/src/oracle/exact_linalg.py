"""
Exact rank computation over the integers.

Matrices are converted to numpy arrays of dtype=object so every entry is a
Python int; fraction-free (Bareiss) elimination keeps all intermediate values
integral, so no rounding ever happens.
"""

import numpy as np


def as_exact(matrix) -> np.ndarray:
    """Copy of matrix as a 2-D object array of Python ints."""
    exact = np.array(matrix, dtype=object)
    if exact.ndim != 2:
        raise ValueError(f"Expected a 2-D matrix, got shape {exact.shape}")
    return np.vectorize(int, otypes=[object])(exact) if exact.size else exact


def bareiss_rank(matrix) -> int:
    """
    Rank by fraction-free Gaussian elimination.

    Columns without a pivot are skipped; after each pivot the trailing block is
    replaced by (p * M - outer(col, row)) // prev, which is exact.
    """
    m = as_exact(matrix)
    n_rows, n_cols = m.shape
    rank = 0
    prev = 1
    for c in range(n_cols):
        if rank == n_rows:
            break
        nonzero = np.nonzero(m[rank:, c] != 0)[0]
        if len(nonzero) == 0:
            continue
        pivot_row = rank + int(nonzero[0])
        if pivot_row != rank:
            m[[rank, pivot_row]] = m[[pivot_row, rank]]
        p = m[rank, c]
        below = m[rank + 1:, c:]
        if below.size:
            m[rank + 1:, c:] = (p * below - np.outer(m[rank + 1:, c], m[rank, c:])) // prev
        prev = p
        rank += 1
    return rank


def nullity(matrix) -> int:
    """Dimension of the right kernel."""
    m = as_exact(matrix)
    return m.shape[1] - bareiss_rank(m)

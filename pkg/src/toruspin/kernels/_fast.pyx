# cython: boundscheck=False, wraparound=False
"""Compiled kernels for the alignment hot loop."""

NAME = "fast"


def alignment_table(fixed_perm, cursor_perm, int drow, int dcol, int rows, int cols):
    """out[f] = cursor symbol index aligned with fixed symbol index f when the
    cursor board is translated by (drow, dcol)."""
    cdef int n = rows * cols
    cdef list out = [0] * n
    cdef int idx, r, c, src
    for idx in range(n):
        r = idx // cols
        c = idx - r * cols
        src = ((r - drow + rows) % rows) * cols + (c - dcol + cols) % cols
        out[fixed_perm[idx]] = cursor_perm[src]
    return out

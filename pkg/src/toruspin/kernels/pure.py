"""Pure-Python kernels. Same contract as the compiled versions in _fast.pyx."""

from __future__ import annotations

from typing import Sequence

NAME = "pure"


def alignment_table(
    fixed_perm: Sequence[int],
    cursor_perm: Sequence[int],
    drow: int,
    dcol: int,
    rows: int,
    cols: int,
) -> list[int]:
    """out[f] = cursor symbol index aligned with fixed symbol index f when the
    cursor board is translated by (drow, dcol)."""
    n = rows * cols
    out = [0] * n
    for idx in range(n):
        r, c = divmod(idx, cols)
        src = ((r - drow) % rows) * cols + (c - dcol) % cols
        out[fixed_perm[idx]] = cursor_perm[src]
    return out

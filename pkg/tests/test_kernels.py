from __future__ import annotations

import random

from toruspin.kernels import BACKEND, alignment_table, pure

try:
    from toruspin.kernels import _fast
except ImportError:
    _fast = None


def test_active_backend_name():
    assert BACKEND in ("pure", "fast")


def test_pure_matches_compiled():
    if _fast is None:
        return
    rng = random.Random(1)
    for rows, cols in [(1, 2), (1, 9), (3, 3), (2, 5), (4, 7)]:
        n = rows * cols
        for _ in range(50):
            fixed = list(range(n))
            cursor = list(range(n))
            rng.shuffle(fixed)
            rng.shuffle(cursor)
            drow = rng.randrange(rows)
            dcol = rng.randrange(cols)
            assert pure.alignment_table(
                fixed, cursor, drow, dcol, rows, cols
            ) == _fast.alignment_table(fixed, cursor, drow, dcol, rows, cols)


def test_selected_backend_is_a_bijection_table():
    out = alignment_table(tuple(range(9)), tuple(range(9)), 1, 2, 3, 3)
    assert sorted(out) == list(range(9))

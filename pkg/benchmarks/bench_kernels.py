"""Compare the compiled alignment kernel against the pure-Python fallback.

Run: python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from toruspin.kernels import BACKEND, pure

try:
    from toruspin.kernels import _fast
except ImportError:
    _fast = None


def bench(fn, states, reps: int) -> float:
    start = time.perf_counter()
    for _ in range(reps):
        for fixed, cursor, drow, dcol, rows, cols in states:
            fn(fixed, cursor, drow, dcol, rows, cols)
    return time.perf_counter() - start


def make_states(rows: int, cols: int, count: int, rng: random.Random):
    n = rows * cols
    states = []
    for _ in range(count):
        fixed = list(range(n))
        cursor = list(range(n))
        rng.shuffle(fixed)
        rng.shuffle(cursor)
        states.append(
            (tuple(fixed), tuple(cursor), rng.randrange(rows), rng.randrange(cols), rows, cols)
        )
    return states


def main() -> None:
    rng = random.Random(7)
    print(f"active backend: {BACKEND}")
    for rows, cols, reps in [(3, 3, 200), (2, 5, 200), (10, 10, 20)]:
        states = make_states(rows, cols, 500, rng)
        t_pure = bench(pure.alignment_table, states, reps)
        line = f"{rows}x{cols}: pure {t_pure * 1e3:8.2f} ms"
        if _fast is not None:
            t_fast = bench(_fast.alignment_table, states, reps)
            line += f"   fast {t_fast * 1e3:8.2f} ms   speedup {t_pure / t_fast:5.2f}x"
        print(line)


if __name__ == "__main__":
    main()

from __future__ import annotations

import random

import pytest

from toruspin import board as board_mod
from toruspin.board import BoardSpec, BoardState, color_2x5, default_3x3, torus_wrap


@pytest.fixture
def spec3x3() -> BoardSpec:
    return default_3x3()


@pytest.fixture
def spec2x5() -> BoardSpec:
    return color_2x5()


def random_state(spec: BoardSpec, rng: random.Random) -> BoardState:
    return board_mod.shuffle(board_mod.identity_state(spec), rng)


def oracle_alignment(state: BoardState) -> dict[str, str]:
    """Independent cell-by-cell evaluation of the alignment: for each fixed
    cell, read off the cursor symbol covering it via direct wrap arithmetic.
    Deliberately avoids the kernel code path."""
    out = {}
    spec = state.spec
    for r in range(spec.rows):
        for c in range(spec.cols):
            f = spec.fixed_symbols[state.fixed_perm[r * spec.cols + c]]
            src = torus_wrap((r - state.offset[0], c - state.offset[1]), spec.dims)
            m = spec.cursor_symbols[state.cursor_perm[spec.cell_index(src)]]
            out[f] = m
    return out


def oracle_step_pairs(state: BoardState, offset, visible) -> frozenset[tuple[str, str]]:
    """Pairs aligned at a committed offset, restricted to visible cursor
    symbols, computed via the oracle path."""
    shifted = BoardState(
        state.spec, state.fixed_perm, state.cursor_perm, tuple(offset), state.pointer_origin
    )
    return frozenset(
        (f, m) for f, m in oracle_alignment(shifted).items() if m in visible
    )

"""Two-layer board model: fixed symbol board plus a moveable cursor board
translated on a 2D torus.

Permutations are stored as tuples of symbol indices in row-major cell order:
``fixed_perm[r * cols + c]`` is the index (into ``fixed_symbols``) of the
symbol displayed at cell ``(r, c)``.  The alignment convention, fixed for the
whole package, is that cursor cell ``c`` covers fixed cell ``wrap(c + offset)``;
equivalently the cursor symbol shown over fixed cell ``p`` is the cursor
symbol at cell ``wrap(p - offset)``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .kernels import alignment_table

Cell = tuple[int, int]
Offset = tuple[int, int]


class UnknownSymbolError(ValueError):
    """Raised when a symbol is not part of the board it is queried against."""


def torus_wrap(pos: Sequence[int], dims: Sequence[int]) -> Cell:
    """Reduce an arbitrary integer pair to its canonical cell on the torus."""
    return (pos[0] % dims[0], pos[1] % dims[1])


@dataclass(frozen=True)
class BoardSpec:
    """Geometry and symbol alphabets of a two-layer board."""

    rows: int
    cols: int
    fixed_symbols: tuple[str, ...]
    cursor_symbols: tuple[str, ...]
    skin: str = "letters"

    def __post_init__(self) -> None:
        object.__setattr__(self, "fixed_symbols", tuple(self.fixed_symbols))
        object.__setattr__(self, "cursor_symbols", tuple(self.cursor_symbols))
        if self.rows < 1 or self.cols < 1:
            raise ValueError("board dimensions must be positive")
        n = self.rows * self.cols
        if n < 2:
            raise ValueError("board needs at least 2 cells")
        if len(self.fixed_symbols) != n or len(self.cursor_symbols) != n:
            raise ValueError("symbol lists must have rows*cols entries")
        if len(set(self.fixed_symbols)) != n or len(set(self.cursor_symbols)) != n:
            raise ValueError("symbols must be unique within each list")

    @property
    def n(self) -> int:
        return self.rows * self.cols

    @property
    def dims(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def cell_index(self, cell: Cell) -> int:
        return cell[0] * self.cols + cell[1]

    def cell_at(self, index: int) -> Cell:
        return divmod(index, self.cols)

    def cells(self) -> Iterable[Cell]:
        for r in range(self.rows):
            for c in range(self.cols):
                yield (r, c)

    def fixed_index(self, symbol: str) -> int:
        try:
            return self.fixed_symbols.index(symbol)
        except ValueError:
            raise UnknownSymbolError(f"unknown fixed symbol: {symbol!r}") from None

    def cursor_index(self, symbol: str) -> int:
        try:
            return self.cursor_symbols.index(symbol)
        except ValueError:
            raise UnknownSymbolError(f"unknown cursor symbol: {symbol!r}") from None

    def to_json(self) -> str:
        return json.dumps(
            {
                "rows": self.rows,
                "cols": self.cols,
                "fixed_symbols": list(self.fixed_symbols),
                "cursor_symbols": list(self.cursor_symbols),
                "skin": self.skin,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "BoardSpec":
        data = json.loads(text)
        return cls(
            rows=data["rows"],
            cols=data["cols"],
            fixed_symbols=tuple(data["fixed_symbols"]),
            cursor_symbols=tuple(data["cursor_symbols"]),
            skin=data.get("skin", "letters"),
        )


# The ten colors of the 2x5 color board, in row order.
COLOR_NAMES = (
    "BLACK", "ORANGE", "LIGHTGRAY", "RED", "BLUE",
    "GREEN", "PURPLE", "AQUA", "OLIVE", "GRAY",
)


def default_3x3() -> BoardSpec:
    """Digits 1-9 on the fixed board, letters A-I on the cursor board."""
    return BoardSpec(
        rows=3,
        cols=3,
        fixed_symbols=tuple(str(d) for d in range(1, 10)),
        cursor_symbols=tuple("ABCDEFGHI"),
        skin="letters",
    )


def color_2x5() -> BoardSpec:
    """Digits 1..9,0 on the fixed board, ten named colors on the cursor board."""
    return BoardSpec(
        rows=2,
        cols=5,
        fixed_symbols=("1", "2", "3", "4", "5", "6", "7", "8", "9", "0"),
        cursor_symbols=COLOR_NAMES,
        skin="colors",
    )


@dataclass(frozen=True)
class BoardState:
    """Full visual state at one entry step."""

    spec: BoardSpec
    fixed_perm: tuple[int, ...]
    cursor_perm: tuple[int, ...]
    offset: Offset
    pointer_origin: Cell

    def __post_init__(self) -> None:
        n = self.spec.n
        if sorted(self.fixed_perm) != list(range(n)):
            raise ValueError("fixed_perm is not a permutation")
        if sorted(self.cursor_perm) != list(range(n)):
            raise ValueError("cursor_perm is not a permutation")
        object.__setattr__(self, "offset", torus_wrap(self.offset, self.spec.dims))
        object.__setattr__(
            self, "pointer_origin", torus_wrap(self.pointer_origin, self.spec.dims)
        )

    def fixed_symbol_at(self, cell: Cell) -> str:
        return self.spec.fixed_symbols[self.fixed_perm[self.spec.cell_index(cell)]]

    def cursor_symbol_over(self, cell: Cell) -> str:
        """Cursor symbol currently covering fixed cell ``cell``."""
        src = torus_wrap((cell[0] - self.offset[0], cell[1] - self.offset[1]), self.spec.dims)
        return self.spec.cursor_symbols[self.cursor_perm[self.spec.cell_index(src)]]

    def fixed_cell_of(self, symbol: str) -> Cell:
        return self.spec.cell_at(self.fixed_perm.index(self.spec.fixed_index(symbol)))

    def cursor_cell_of(self, symbol: str) -> Cell:
        return self.spec.cell_at(self.cursor_perm.index(self.spec.cursor_index(symbol)))


def identity_state(spec: BoardSpec) -> BoardState:
    """Both boards laid out in index order, zero offset, origin at (0,0)."""
    perm = tuple(range(spec.n))
    return BoardState(spec, perm, perm, (0, 0), (0, 0))


def move_cursor(state: BoardState, delta: Sequence[int]) -> BoardState:
    """Translate the cursor board; only the offset changes."""
    new = torus_wrap((state.offset[0] + delta[0], state.offset[1] + delta[1]), state.spec.dims)
    return replace(state, offset=new)


def alignment_indices(state: BoardState) -> list[int]:
    """Index-level alignment: result[f] = cursor symbol index aligned with
    fixed symbol index ``f`` under the current offset."""
    return alignment_table(
        state.fixed_perm,
        state.cursor_perm,
        state.offset[0],
        state.offset[1],
        state.spec.rows,
        state.spec.cols,
    )


def alignment_map(state: BoardState) -> dict[str, str]:
    """Bijection fixed symbol -> cursor symbol induced by the current offset."""
    table = alignment_indices(state)
    spec = state.spec
    return {
        spec.fixed_symbols[f]: spec.cursor_symbols[m] for f, m in enumerate(table)
    }


def aligned_pairs(state: BoardState) -> frozenset[tuple[str, str]]:
    """All n (fixed, cursor) pairs visually matching at the current offset."""
    return frozenset(alignment_map(state).items())


def aligned_pair_at(state: BoardState, fixed_symbol: str) -> tuple[str, str]:
    """The pair selected if validation were triggered on ``fixed_symbol``."""
    state.spec.fixed_index(fixed_symbol)  # raises UnknownSymbolError
    return (fixed_symbol, alignment_map(state)[fixed_symbol])


def offset_aligning(state: BoardState, fixed_symbol: str, cursor_symbol: str) -> Offset:
    """Offset that would place ``cursor_symbol`` over ``fixed_symbol``."""
    p = state.fixed_cell_of(fixed_symbol)
    q = state.cursor_cell_of(cursor_symbol)
    return torus_wrap((p[0] - q[0], p[1] - q[1]), state.spec.dims)


def _as_rng(seed: random.Random | int | None) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def shuffle(
    state: BoardState,
    seed: random.Random | int | None = None,
    *,
    shuffle_fixed: bool = True,
    shuffle_cursor: bool = True,
) -> BoardState:
    """Redraw board permutations, reset the offset, redraw the pointer origin.

    ``seed`` may be an int (fresh deterministic generator) or a live
    ``random.Random`` whose stream is consumed, which is what the session
    engine uses for reproducible multi-step sessions.
    """
    rng = _as_rng(seed)
    n = state.spec.n
    fixed = list(state.fixed_perm)
    cursor = list(state.cursor_perm)
    if shuffle_fixed:
        fixed = list(range(n))
        rng.shuffle(fixed)
    if shuffle_cursor:
        cursor = list(range(n))
        rng.shuffle(cursor)
    origin = (rng.randrange(state.spec.rows), rng.randrange(state.spec.cols))
    return BoardState(state.spec, tuple(fixed), tuple(cursor), (0, 0), origin)


def visible_subset(
    state: BoardState,
    correct_cursor_symbol: str,
    l: int,
    seed: random.Random | int | None = None,
) -> frozenset[str]:
    """Choose the l cursor symbols shown this step, always including the
    correct one; the l-1 decoys are drawn uniformly without replacement."""
    spec = state.spec
    if not 2 <= l <= spec.n:
        raise ValueError(f"display size l must be in [2, {spec.n}], got {l}")
    spec.cursor_index(correct_cursor_symbol)  # raises UnknownSymbolError
    rng = _as_rng(seed)
    decoys = [s for s in spec.cursor_symbols if s != correct_cursor_symbol]
    return frozenset(rng.sample(decoys, l - 1)) | {correct_cursor_symbol}

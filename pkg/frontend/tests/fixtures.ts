import type { BoardView } from "../src/types";

export const LETTERS = ["A", "B", "C", "D", "E", "F", "G", "H", "I"];
export const DIGITS = ["1", "2", "3", "4", "5", "6", "7", "8", "9"];

/** Both boards in index order, zero offset. */
export function identityView(overrides: Partial<BoardView> = {}): BoardView {
  return {
    rows: 3,
    cols: 3,
    fixed: [0, 1, 2, 3, 4, 5, 6, 7, 8],
    cursor: [0, 1, 2, 3, 4, 5, 6, 7, 8],
    fixed_symbols: DIGITS,
    cursor_symbols: LETTERS,
    offset: [0, 0],
    skin: "letters",
    entered: 0,
    l: 9,
    ...overrides,
  };
}

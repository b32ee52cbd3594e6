import type { BoardView } from "./types";

/** Canonical representative on the torus. */
export function wrap(v: number, m: number): number {
  return ((v % m) + m) % m;
}

export function cellIndex(row: number, col: number, cols: number): number {
  return row * cols + col;
}

/**
 * Cursor permutation index covering each fixed cell under the view's offset
 * (row-major, aligned with `view.fixed`). The alignment convention: the
 * cursor symbol over fixed cell p sits at cursor cell wrap(p - offset).
 */
export function coveringCursor(view: BoardView): (number | null)[] {
  const { rows, cols, offset } = view;
  const out: (number | null)[] = new Array(rows * cols);
  for (let r = 0; r < rows; r++) {
    for (let c = 0; c < cols; c++) {
      const src = cellIndex(wrap(r - offset[0], rows), wrap(c - offset[1], cols), cols);
      out[cellIndex(r, c, cols)] = view.cursor[src] ?? null;
    }
  }
  return out;
}

/** Symbol-level alignment map: fixed symbol -> cursor symbol (or null when hidden). */
export function alignmentOf(view: BoardView): Map<string, string | null> {
  const covering = coveringCursor(view);
  const map = new Map<string, string | null>();
  view.fixed.forEach((fIdx, cell) => {
    const m = covering[cell];
    map.set(
      view.fixed_symbols[fIdx]!,
      m === null || m === undefined ? null : view.cursor_symbols[m]!,
    );
  });
  return map;
}

/** Cell of a fixed symbol in the current permutation. */
export function fixedCellOf(view: BoardView, symbol: string): [number, number] {
  const idx = view.fixed.indexOf(view.fixed_symbols.indexOf(symbol));
  if (idx < 0) throw new Error(`unknown fixed symbol: ${symbol}`);
  return [Math.floor(idx / view.cols), idx % view.cols];
}

/** Cell of a cursor symbol in the current permutation. */
export function cursorCellOf(view: BoardView, symbol: string): [number, number] {
  const idx = view.cursor.indexOf(view.cursor_symbols.indexOf(symbol));
  if (idx < 0) throw new Error(`cursor symbol not visible: ${symbol}`);
  return [Math.floor(idx / view.cols), idx % view.cols];
}

/** Offset that would place cursorSymbol over fixedSymbol. */
export function offsetAligning(
  view: BoardView,
  fixedSymbol: string,
  cursorSymbol: string,
): [number, number] {
  const p = fixedCellOf(view, fixedSymbol);
  const q = cursorCellOf(view, cursorSymbol);
  return [wrap(p[0] - q[0], view.rows), wrap(p[1] - q[1], view.cols)];
}

/** Relative order moving the view's current offset to `target`. */
export function deltaTo(view: BoardView, target: [number, number]): [number, number] {
  return [
    wrap(target[0] - view.offset[0], view.rows),
    wrap(target[1] - view.offset[1], view.cols),
  ];
}

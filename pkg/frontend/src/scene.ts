import { cellIndex, coveringCursor, wrap } from "./board";
import type { BoardView } from "./types";

/**
 * Renderer-independent scene graph. The moveable board is drawn as a 3x3
 * grid of translated copies offset by the board dimensions and clipped to
 * the fixed board rectangle; with whole-cell offsets, exactly one copy of
 * each cursor cell survives clipping, so the visible tiles tile the board.
 */

export interface FixedTile {
  kind: "fixed";
  row: number;
  col: number;
  label: string;
  /** tint from the covering cursor symbol in color/texture skins */
  tint: string | null;
}

export interface CursorTile {
  kind: "cursor";
  row: number;
  col: number;
  label: string;
  /** which translated copy this tile came from, in {-1,0,1}^2 */
  copy: [number, number];
  hidden: boolean;
}

export interface Scene {
  rows: number;
  cols: number;
  skin: string;
  ribbon: boolean;
  asterisks: number;
  fixedTiles: FixedTile[];
  cursorTiles: CursorTile[];
}

const COLOR_CSS: Record<string, string> = {
  BLACK: "#000000",
  ORANGE: "#ff8c00",
  LIGHTGRAY: "#d3d3d3",
  RED: "#dc143c",
  BLUE: "#1e64d2",
  GREEN: "#2e8b57",
  PURPLE: "#7b2fbe",
  AQUA: "#00b5ad",
  OLIVE: "#808000",
  GRAY: "#808080",
};

export function cursorColor(symbol: string, skin: string, index: number): string {
  if (symbol in COLOR_CSS) return COLOR_CSS[symbol]!;
  // deterministic palette for letter/icon skins used in color-tint mode
  const hue = (index * 360) / 12;
  return `hsl(${hue}, ${skin === "texture" ? 25 : 65}%, 70%)`;
}

export function buildScene(view: BoardView): Scene {
  const { rows, cols } = view;
  const covering = coveringCursor(view);
  const tinted = view.skin === "colors" || view.skin === "texture";

  const fixedTiles: FixedTile[] = [];
  for (let r = 0; r < rows; r++) {
    for (let c = 0; c < cols; c++) {
      const fIdx = view.fixed[cellIndex(r, c, cols)]!;
      const mIdx = covering[cellIndex(r, c, cols)];
      fixedTiles.push({
        kind: "fixed",
        row: r,
        col: c,
        label: view.fixed_symbols[fIdx]!,
        tint:
          tinted && mIdx !== null && mIdx !== undefined
            ? cursorColor(view.cursor_symbols[mIdx]!, view.skin, mIdx)
            : null,
      });
    }
  }

  const cursorTiles: CursorTile[] = [];
  for (let copyR = -1; copyR <= 1; copyR++) {
    for (let copyC = -1; copyC <= 1; copyC++) {
      for (let r = 0; r < rows; r++) {
        for (let c = 0; c < cols; c++) {
          const drawR = r + view.offset[0] + copyR * rows;
          const drawC = c + view.offset[1] + copyC * cols;
          if (drawR < 0 || drawR >= rows || drawC < 0 || drawC >= cols) {
            continue; // clipped to the fixed board rectangle
          }
          const mIdx = view.cursor[cellIndex(r, c, cols)];
          cursorTiles.push({
            kind: "cursor",
            row: drawR,
            col: drawC,
            label:
              mIdx === null || mIdx === undefined ? "" : view.cursor_symbols[mIdx]!,
            copy: [copyR, copyC],
            hidden: mIdx === null || mIdx === undefined,
          });
        }
      }
    }
  }

  return {
    rows,
    cols,
    skin: view.skin,
    ribbon: rows === 1,
    asterisks: view.entered,
    fixedTiles,
    cursorTiles,
  };
}

/**
 * Visual-match completeness: every fixed cell must be covered by exactly one
 * cursor tile — no gaps, no double coverage.
 */
export function assertFullCoverage(scene: Scene): void {
  const counts = new Array(scene.rows * scene.cols).fill(0);
  for (const tile of scene.cursorTiles) {
    counts[cellIndex(tile.row, tile.col, scene.cols)] += 1;
  }
  counts.forEach((n, cell) => {
    if (n !== 1) {
      throw new Error(`fixed cell ${cell} covered ${n} times`);
    }
  });
}

/** Scene identity; the canvas layer is a pure projection of the scene. */
export function scenesEqual(a: Scene, b: Scene): boolean {
  return JSON.stringify(a) === JSON.stringify(b);
}

export { wrap };

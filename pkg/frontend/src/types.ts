/** Wire types mirroring the auth service's JSON payloads. */

export interface BoardView {
  rows: number;
  cols: number;
  /** fixed-board permutation: symbol index per cell, row-major */
  fixed: number[];
  /** cursor-board permutation; null marks a cell hidden by partial display */
  cursor: (number | null)[];
  fixed_symbols: string[];
  cursor_symbols: string[];
  offset: [number, number];
  skin: string;
  entered: number;
  l: number;
}

export interface OpenSessionResponse {
  token: string;
  k: number;
  board_view: BoardView;
}

export type MoveOrder =
  | { kind: "relative"; delta: [number, number] }
  | { kind: "absolute"; position: [number, number] };

export type FinalResult = "success" | "failure";

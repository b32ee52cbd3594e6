import { type ChildProcess, spawn } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { AuthClient } from "../src/api";
import { alignmentOf, deltaTo, offsetAligning } from "../src/board";
import { PointerAccumulator } from "../src/pointer";
import { type Scene, assertFullCoverage, buildScene, scenesEqual } from "../src/scene";
import type { BoardView } from "../src/types";

const PORT = 8765 + (process.pid % 1000);
const BASE = `http://127.0.0.1:${PORT}`;
const CELL = 72;

let server: ChildProcess;
let storeDir: string;
const client = new AuthClient(BASE);

async function waitForServer(timeoutMs = 30_000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${BASE}/openapi.json`);
      if (res.ok) return;
    } catch {
      // not listening yet
    }
    await new Promise((r) => setTimeout(r, 200));
  }
  throw new Error("auth service did not start in time");
}

beforeAll(async () => {
  storeDir = mkdtempSync(join(tmpdir(), "toruspin-e2e-"));
  server = spawn(
    "python3",
    [
      "-m",
      "toruspin.cli",
      "serve",
      "--port",
      String(PORT),
      "--store",
      join(storeDir, "users.jsonl"),
    ],
    { stdio: "ignore" },
  );
  await waitForServer();
  await client.createUser({
    user_id: "alice",
    mode: "plaintext-recoverable",
    board: "3x3",
    credentials: {
      id_password: ["3", "1", "4", "1"],
      ui_password: ["C", "A", "H", "B"],
    },
  });
}, 40_000);

afterAll(() => {
  server?.kill();
  rmSync(storeDir, { recursive: true, force: true });
});

/**
 * Drive the moveable board so `cursorSymbol` covers `fixedSymbol`, sending
 * only pixel-quantized relative orders, exactly as a drag gesture would.
 * Returns the final view; asserts scene coverage on every frame.
 */
async function dragUntilAligned(
  token: string,
  view: BoardView,
  fixedSymbol: string,
  cursorSymbol: string,
): Promise<BoardView> {
  const [dr, dc] = deltaTo(view, offsetAligning(view, fixedSymbol, cursorSymbol));
  const acc = new PointerAccumulator(CELL, CELL);
  let current = view;
  // drag in small increments; wrap happens server side
  const pixels: [number, number][] = [];
  for (let i = 0; i < dc * 8; i++) pixels.push([CELL / 8, 0]);
  for (let i = 0; i < dr * 8; i++) pixels.push([0, CELL / 8]);
  for (const [dx, dy] of pixels) {
    for (const delta of acc.add(dx, dy)) {
      const res = await client.move(token, { kind: "relative", delta });
      current = res.board_view;
      assertFullCoverage(buildScene(current));
    }
  }
  expect(acc.remainder()).toEqual([0, 0]);
  expect(alignmentOf(current).get(fixedSymbol)).toBe(cursorSymbol);
  return current;
}

describe("login against the live service", () => {
  it(
    "enters 3141/CAHB by dragging and validates successfully",
    async () => {
      const open = await client.openSession("alice");
      expect(open.k).toBe(4);
      let view = open.board_view;
      assertFullCoverage(buildScene(view));

      const pairs: [string, string][] = [
        ["3", "C"],
        ["1", "A"],
        ["4", "H"],
        ["1", "B"],
      ];
      for (const [f, m] of pairs) {
        view = await dragUntilAligned(open.token, view, f, m);
        const committed = await client.commit(open.token);
        view = committed.board_view;
        assertFullCoverage(buildScene(view));
      }
      expect(view.entered).toBe(4);
      const fin = await client.finalize(open.token);
      expect(fin.result).toBe("success");
    },
    30_000,
  );

  it(
    "renders identical scenes before and after a full-board-width drag",
    async () => {
      const open = await client.openSession("alice");
      const start: Scene = buildScene(open.board_view);
      const acc = new PointerAccumulator(CELL, CELL);
      let view = open.board_view;
      for (const delta of acc.add(view.cols * CELL, 0)) {
        const res = await client.move(open.token, { kind: "relative", delta });
        view = res.board_view;
        assertFullCoverage(buildScene(view));
      }
      expect(scenesEqual(buildScene(view), start)).toBe(true);
      await client.finalize(open.token).catch(() => undefined);
    },
    30_000,
  );

  it(
    "fails a wrong entry without leaking which step was wrong",
    async () => {
      const open = await client.openSession("alice");
      let view = open.board_view;
      for (const [f, m] of [
        ["3", "C"],
        ["1", "A"],
        ["4", "H"],
        ["1", "C"], // wrong cursor symbol on the last step
      ] as [string, string][]) {
        view = await dragUntilAligned(open.token, view, f, m);
        const committed = await client.commit(open.token);
        expect(Object.keys(committed)).toEqual(["entered", "board_view"]);
        view = committed.board_view;
      }
      const fin = await client.finalize(open.token);
      expect(fin.result).toBe("failure");
    },
    30_000,
  );
});

import { describe, expect, it } from "vitest";

import {
  alignmentOf,
  deltaTo,
  fixedCellOf,
  offsetAligning,
  wrap,
} from "../src/board";
import { identityView } from "./fixtures";

describe("wrap", () => {
  it("reduces negatives and overflow", () => {
    expect(wrap(-1, 3)).toBe(2);
    expect(wrap(3, 3)).toBe(0);
    expect(wrap(2, 3)).toBe(2);
  });
});

describe("alignmentOf", () => {
  it("pairs same indices at zero offset", () => {
    const m = alignmentOf(identityView());
    expect(m.get("1")).toBe("A");
    expect(m.get("9")).toBe("I");
  });

  it("matches the cell-by-cell expectation at offset (0,1)", () => {
    const m = alignmentOf(identityView({ offset: [0, 1] }));
    expect(Object.fromEntries(m)).toEqual({
      "1": "C", "2": "A", "3": "B",
      "4": "F", "5": "D", "6": "E",
      "7": "I", "8": "G", "9": "H",
    });
  });

  it("reports hidden covers as null under partial display", () => {
    const view = identityView({ cursor: [0, null, 2, 3, 4, 5, 6, 7, 8], l: 8 });
    const m = alignmentOf(view);
    expect(m.get("2")).toBeNull();
    expect(m.get("1")).toBe("A");
  });
});

describe("offset math", () => {
  it("finds the offset aligning a pair", () => {
    const view = identityView();
    expect(offsetAligning(view, "1", "A")).toEqual([0, 0]);
    const target = offsetAligning(view, "3", "C");
    const m = alignmentOf(identityView({ offset: target }));
    expect(m.get("3")).toBe("C");
  });

  it("computes relative deltas from the current offset", () => {
    const view = identityView({ offset: [2, 2] });
    expect(deltaTo(view, [0, 0])).toEqual([1, 1]);
  });

  it("locates fixed symbols in shuffled permutations", () => {
    const view = identityView({ fixed: [8, 7, 6, 5, 4, 3, 2, 1, 0] });
    expect(fixedCellOf(view, "9")).toEqual([0, 0]);
    expect(fixedCellOf(view, "1")).toEqual([2, 2]);
  });
});

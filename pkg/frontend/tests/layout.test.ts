import { describe, expect, it } from "vitest";

import { layoutQuiver } from "../src/layout.js";

const A2 = [
  [0, 1],
  [-1, 0],
];
const B2 = [
  [0, 1],
  [-2, 0],
];
const A3 = [
  [0, 1, 0],
  [-1, 0, 1],
  [0, -1, 0],
];

describe("layoutQuiver", () => {
  it("is deterministic for the same matrix", () => {
    const first = layoutQuiver(A3, 420, 420);
    const second = layoutQuiver(A3, 420, 420);
    expect(second).toEqual(first);
  });

  it("is seeded by the matrix bytes, so different matrices draw differently", () => {
    const a = layoutQuiver(A2, 420, 420);
    const b = layoutQuiver(B2, 420, 420);
    expect(JSON.stringify(a)).not.toBe(JSON.stringify(b));
  });

  it("keeps every node inside the canvas", () => {
    for (const B of [A2, B2, A3]) {
      for (const p of layoutQuiver(B, 420, 420)) {
        expect(Number.isFinite(p.x)).toBe(true);
        expect(Number.isFinite(p.y)).toBe(true);
        expect(p.x).toBeGreaterThanOrEqual(0);
        expect(p.x).toBeLessThanOrEqual(420);
        expect(p.y).toBeGreaterThanOrEqual(0);
        expect(p.y).toBeLessThanOrEqual(420);
      }
    }
  });

  it("spreads distinct nodes apart", () => {
    const pts = layoutQuiver(A3, 420, 420);
    for (let i = 0; i < pts.length; i++) {
      for (let j = i + 1; j < pts.length; j++) {
        const d = Math.hypot(pts[i]!.x - pts[j]!.x, pts[i]!.y - pts[j]!.y);
        expect(d).toBeGreaterThan(30);
      }
    }
  });
});

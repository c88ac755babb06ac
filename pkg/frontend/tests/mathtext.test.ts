import { describe, expect, it } from "vitest";

import { canonicalOf, segmentsOf } from "../src/mathtext.js";

describe("segmentsOf", () => {
  it("renders a bare generator as letter plus subscript", () => {
    expect(segmentsOf("x1")).toEqual([
      { kind: "txt", text: "x" },
      { kind: "sub", text: "1" },
    ]);
  });

  it("puts exponents in superscripts with their sign intact", () => {
    expect(segmentsOf("x2^-1")).toEqual([
      { kind: "txt", text: "x" },
      { kind: "sub", text: "2" },
      { kind: "sup", text: "-1" },
    ]);
  });

  it("renders products with a middle dot and keeps separators", () => {
    expect(segmentsOf("x1^-1*x2 + 1")).toEqual([
      { kind: "txt", text: "x" },
      { kind: "sub", text: "1" },
      { kind: "sup", text: "-1" },
      { kind: "txt", text: "·x" },
      { kind: "sub", text: "2" },
      { kind: "txt", text: " + 1" },
    ]);
  });

  it("keeps coefficient digits and a leading minus verbatim", () => {
    const segs = segmentsOf("-2*x2^2 + x1 + 1");
    expect(segs[0]).toEqual({ kind: "txt", text: "-2·x" });
    expect(segs).toContainEqual({ kind: "sup", text: "2" });
    expect(canonicalOf(segs)).toBe("-2*x2^2 + x1 + 1");
  });

  it("handles a bare constant", () => {
    expect(segmentsOf("1")).toEqual([{ kind: "txt", text: "1" }]);
    expect(segmentsOf("0")).toEqual([{ kind: "txt", text: "0" }]);
  });

  it("round-trips engine-shaped variables exactly", () => {
    const samples = [
      "x2^-1*y1*y2 + x1^-1 + x1^-1*x2^-1*y1",
      "x1^-1*x2^2 + x1^-1*y1",
      "y1*y2 + y1 + 1",
      "x10^3*y12^-7 + 41*x2",
    ];
    for (const s of samples) {
      expect(canonicalOf(segmentsOf(s))).toBe(s);
    }
  });

  it("rejects text outside the canonical grammar", () => {
    expect(() => segmentsOf("x1 +x2")).toThrow(/not canonical/);
    expect(() => segmentsOf("z1")).toThrow(/not canonical/);
  });
});

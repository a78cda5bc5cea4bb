import { describe, expect, it } from "vitest";

import { topElements } from "../src/elements.js";

describe("topElements", () => {
  it("sorts descending by mass", () => {
    const slices = topElements({ Fe: 2, Cu: 10, Sn: 5 });
    expect(slices.map((s) => s.symbol)).toEqual(["Cu", "Sn", "Fe"]);
  });

  it("buckets the tail into 'other'", () => {
    const masses = Object.fromEntries(
      Array.from({ length: 15 }, (_, i) => [`E${i}`, 15 - i]),
    );
    const slices = topElements(masses, 10);
    expect(slices).toHaveLength(11);
    expect(slices[10].symbol).toBe("other");
    expect(slices[10].massKg).toBe(5 + 4 + 3 + 2 + 1);
  });

  it("keeps a short list as-is", () => {
    const slices = topElements({ Cu: 1, Fe: 2 }, 10);
    expect(slices).toHaveLength(2);
    expect(slices.some((s) => s.symbol === "other")).toBe(false);
  });

  it("breaks mass ties by symbol", () => {
    const slices = topElements({ Zn: 1, Ag: 1 });
    expect(slices.map((s) => s.symbol)).toEqual(["Ag", "Zn"]);
  });
});

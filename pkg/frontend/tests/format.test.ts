import { describe, expect, it } from "vitest";

import {
  formatCount,
  formatKg,
  formatMfu,
  formatPercent,
  logScaleFraction,
} from "../src/format.js";

describe("formatCount", () => {
  it("adds thousands separators", () => {
    expect(formatCount(8800)).toBe("8,800");
    expect(formatCount(587)).toBe("587");
    expect(formatCount(13314)).toBe("13,314");
  });
});

describe("formatKg", () => {
  it("keeps four significant figures", () => {
    expect(formatKg(7007.935)).toBe("7,008");
    expect(formatKg(1.3747714)).toBe("1.375");
    expect(formatKg(0)).toBe("0");
    expect(formatKg(0.0055)).toBe("0.0055");
  });
});

describe("formatPercent", () => {
  it("renders a fraction as a percentage", () => {
    expect(formatPercent(0.9333)).toBe("93.3%");
    expect(formatPercent(2 / 3, 0)).toBe("67%");
  });
});

describe("formatMfu", () => {
  it("renders whole percent", () => {
    expect(formatMfu(0.35)).toBe("35%");
    expect(formatMfu(1)).toBe("100%");
  });
});

describe("logScaleFraction", () => {
  it("maps the extremes to 0 and 1", () => {
    expect(logScaleFraction(587, 587, 8800)).toBe(0);
    expect(logScaleFraction(8800, 587, 8800)).toBe(1);
  });

  it("is logarithmic in between", () => {
    const mid = Math.sqrt(587 * 8800);
    expect(logScaleFraction(mid, 587, 8800)).toBeCloseTo(0.5, 10);
  });

  it("clamps and tolerates degenerate input", () => {
    expect(logScaleFraction(100, 587, 8800)).toBe(0);
    expect(logScaleFraction(1e9, 587, 8800)).toBe(1);
    expect(logScaleFraction(0, 587, 8800)).toBe(0);
    expect(logScaleFraction(5, 10, 10)).toBe(0);
  });
});

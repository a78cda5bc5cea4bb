import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { debounce, Sequencer } from "../src/debounce.js";

describe("debounce", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("fires once on the trailing edge with the latest arguments", () => {
    const calls: number[] = [];
    const debounced = debounce((value: number) => calls.push(value), 150);
    debounced(1);
    debounced(2);
    debounced(3);
    vi.advanceTimersByTime(149);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(calls).toEqual([3]);
  });

  it("fires again for a later burst", () => {
    const calls: number[] = [];
    const debounced = debounce((value: number) => calls.push(value), 100);
    debounced(1);
    vi.advanceTimersByTime(100);
    debounced(2);
    vi.advanceTimersByTime(100);
    expect(calls).toEqual([1, 2]);
  });
});

describe("Sequencer", () => {
  it("treats only the newest ticket as current", () => {
    const sequencer = new Sequencer();
    const first = sequencer.next();
    const second = sequencer.next();
    expect(sequencer.isCurrent(first)).toBe(false);
    expect(sequencer.isCurrent(second)).toBe(true);
  });

  it("discards a stale response even if it arrives last", () => {
    const sequencer = new Sequencer();
    const slow = sequencer.next();
    const fast = sequencer.next();
    // fast response applied first
    expect(sequencer.isCurrent(fast)).toBe(true);
    // slow response arrives later and must be dropped
    expect(sequencer.isCurrent(slow)).toBe(false);
  });
});

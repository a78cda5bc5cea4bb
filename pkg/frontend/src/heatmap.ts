/**
 * MFU x lifespan heatmap over the sweep endpoint. Cell values come straight
 * from the service; this module only arranges them into a grid and checks the
 * monotonicity the display relies on.
 */

import type { SweepResponse } from "./api.js";

/** MFU axis: 0.20 to 0.60 in 0.05 steps (the empirically observed band). */
export const HEATMAP_MFUS: readonly number[] = Array.from(
  { length: 9 },
  (_, i) => Math.round((0.2 + 0.05 * i) * 100) / 100,
);

/** Lifespan axis: 1 to 5 whole years. */
export const HEATMAP_LIFESPANS: readonly number[] = [1, 2, 3, 4, 5];

export interface HeatmapCell {
  mfu: number;
  lifespan: number;
  gpus: number;
  gpusExact: number;
}

/** Rows indexed by lifespan, columns by MFU, matching the axis constants. */
export type HeatmapGrid = HeatmapCell[][];

export function buildGrid(sweep: SweepResponse): HeatmapGrid {
  const byKey = new Map<string, { count: number; exact: number }>();
  for (const cell of sweep.cells) {
    const key = `${cell.scenario.mfu}:${cell.scenario.lifespan_years}`;
    byKey.set(key, { count: cell.gpus.count, exact: cell.gpus.exact });
  }
  return HEATMAP_LIFESPANS.map((lifespan) =>
    HEATMAP_MFUS.map((mfu) => {
      const found = byKey.get(`${mfu}:${lifespan}`);
      if (!found) {
        throw new Error(`sweep response is missing cell (${mfu}, ${lifespan})`);
      }
      return { mfu, lifespan, gpus: found.count, gpusExact: found.exact };
    }),
  );
}

/**
 * Exact requirements must not increase along either axis (more utilization or
 * a longer lifespan never needs more GPUs).
 */
export function isMonotone(grid: HeatmapGrid): boolean {
  for (let row = 0; row < grid.length; row++) {
    for (let col = 0; col < grid[row].length; col++) {
      if (col > 0 && grid[row][col].gpusExact > grid[row][col - 1].gpusExact) {
        return false;
      }
      if (row > 0 && grid[row][col].gpusExact > grid[row - 1][col].gpusExact) {
        return false;
      }
    }
  }
  return true;
}

export function gridExtent(grid: HeatmapGrid): { min: number; max: number } {
  const values = grid.flat().map((cell) => cell.gpus);
  return { min: Math.min(...values), max: Math.max(...values) };
}

/** Pinned-scenario comparison: side-by-side counts and reduction vs the first pin. */

import type { EstimateResponse } from "./api.js";
import type { Pin } from "./state.js";

export interface PinResult {
  pin: Pin;
  estimate: EstimateResponse;
}

export interface ComparisonRow {
  pin: Pin;
  gpus: number;
  gpusExact: number;
  totalKg: number;
  toxicKg: number;
  /** Fractional reduction of the GPU count relative to the first pin. */
  reductionVsFirst: number;
}

/** 1 - other/base; 0 for identical counts, negative when `other` is larger. */
export function reduction(baseCount: number, otherCount: number): number {
  if (baseCount === 0) return 0;
  return 1 - otherCount / baseCount;
}

export function buildComparison(results: PinResult[]): ComparisonRow[] {
  if (results.length === 0) return [];
  const base = results[0].estimate.gpus.count;
  return results.map(({ pin, estimate }) => ({
    pin,
    gpus: estimate.gpus.count,
    gpusExact: estimate.gpus.exact,
    totalKg: estimate.total_mass_kg,
    toxicKg: estimate.toxic_mass_kg,
    reductionVsFirst: reduction(base, estimate.gpus.count),
  }));
}

export function samePin(a: Pin, b: Pin): boolean {
  return a.model === b.model && a.mfu === b.mfu && a.lifespan === b.lifespan;
}

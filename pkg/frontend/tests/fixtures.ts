/** Canned service payloads used by the unit tests. */

import type { EstimateResponse, SweepResponse } from "../src/api.js";

export function estimateFixture(
  overrides: Partial<EstimateResponse> & {
    mfu?: number;
    lifespan?: number;
  } = {},
): EstimateResponse {
  const { mfu = 0.3, lifespan = 2, ...rest } = overrides;
  return {
    model: "gpt-4",
    profile: "nvidia-a100-sxm-40gb",
    scenario: { mfu, lifespan_years: lifespan },
    gpus: { exact: 2933.16, count: 2934 },
    element_masses_kg: { Cu: 4033.2, Fe: 133.5, Sn: 59.6, Ag: 1.6 },
    total_mass_kg: 4393.0,
    toxic_mass_kg: 4088.5,
    total_mass_kg_exact: 4391.7,
    toxic_mass_kg_exact: 4087.3,
    mfu_out_of_empirical_range: false,
    ...rest,
  };
}

/**
 * A GPT-4 sweep over the full heatmap grid. Counts follow the published
 * corner values (8,800 at 20%/1yr down to 587 at 60%/5yr); intermediate
 * cells are ceil(1759.8935 / (mfu * lifespan)) like the service computes.
 */
export function gpt4SweepFixture(
  mfus: readonly number[],
  lifespans: readonly number[],
): SweepResponse {
  const base = 1759.8934550989345;
  const cells: EstimateResponse[] = [];
  for (const lifespan of lifespans) {
    for (const mfu of mfus) {
      const exact = base / (mfu * lifespan);
      cells.push(
        estimateFixture({
          mfu,
          lifespan,
          gpus: { exact, count: Math.ceil(exact) },
        }),
      );
    }
  }
  return { model: "gpt-4", cells };
}

/**
 * Typed client for the estimation service. Every number the UI displays comes
 * from these endpoints; nothing is recomputed client-side.
 */

export interface ScenarioDto {
  mfu: number;
  lifespan_years: number;
}

export interface EstimateResponse {
  model: string;
  profile: string;
  scenario: ScenarioDto;
  gpus: { exact: number; count: number };
  element_masses_kg: Record<string, number>;
  total_mass_kg: number;
  toxic_mass_kg: number;
  total_mass_kg_exact: number;
  toxic_mass_kg_exact: number;
  mfu_out_of_empirical_range: boolean;
}

export interface SweepResponse {
  model: string;
  cells: EstimateResponse[];
}

export interface ModelEntry {
  id: string;
  display_name: string;
  kind: string;
  architecture: string;
  tokens: number;
  compute_budget_flops: number;
}

export interface ModelsResponse {
  models: ModelEntry[];
  gpt4_scenarios: ModelEntry[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  field?: string;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(`${body.code}: ${body.message}`);
  }
}

async function parseResponse<T>(response: Response): Promise<T> {
  const payload = await response.json();
  if (!response.ok) {
    throw new ApiError(response.status, payload as ApiErrorBody);
  }
  return payload as T;
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return parseResponse<T>(response);
  }

  async models(): Promise<ModelsResponse> {
    const response = await this.fetchFn(this.baseUrl + "/v1/models");
    return parseResponse<ModelsResponse>(response);
  }

  async estimate(
    model: string,
    mfu: number,
    lifespanYears: number,
  ): Promise<EstimateResponse> {
    return this.post("/v1/estimate", {
      model,
      mfu,
      lifespan_years: lifespanYears,
    });
  }

  async sweep(
    model: string,
    mfuValues: number[],
    lifespanValues: number[],
  ): Promise<SweepResponse> {
    return this.post("/v1/sweep", {
      model,
      mfu_values: mfuValues,
      lifespan_values: lifespanValues,
    });
  }
}

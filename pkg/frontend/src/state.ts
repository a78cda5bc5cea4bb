/**
 * UI scenario state and its URL round-trip. The whole view is reproducible
 * from the query string: reloading a shared link restores the identical
 * model, sliders, and pinned scenarios.
 */

export const MFU_MIN = 0.05;
export const MFU_MAX = 1.0;
export const LIFESPAN_MIN = 0.5;
export const LIFESPAN_MAX = 7.0;

export const EMPIRICAL_MFU_MIN = 0.2;
export const EMPIRICAL_MFU_MAX = 0.6;

export const DEFAULT_MODEL = "gpt-4";
export const DEFAULT_MFU = 0.3;
export const DEFAULT_LIFESPAN = 2;

export interface Pin {
  model: string;
  mfu: number;
  lifespan: number;
}

export interface UiScenarioState {
  model: string;
  mfu: number;
  lifespan: number;
  pins: Pin[];
}

export function defaultState(): UiScenarioState {
  return {
    model: DEFAULT_MODEL,
    mfu: DEFAULT_MFU,
    lifespan: DEFAULT_LIFESPAN,
    pins: [],
  };
}

export function clamp(value: number, min: number, max: number): number {
  return Math.min(max, Math.max(min, value));
}

export function isOutsideEmpiricalRange(mfu: number): boolean {
  return mfu < EMPIRICAL_MFU_MIN || mfu > EMPIRICAL_MFU_MAX;
}

function parseNumber(raw: string | null, fallback: number): number {
  if (raw === null) return fallback;
  const value = Number(raw);
  return Number.isFinite(value) ? value : fallback;
}

function encodePin(pin: Pin): string {
  return `${pin.model}@${pin.mfu}x${pin.lifespan}`;
}

function decodePin(raw: string): Pin | null {
  const match = /^(.+)@([0-9.]+)x([0-9.]+)$/.exec(raw);
  if (!match) return null;
  const mfu = Number(match[2]);
  const lifespan = Number(match[3]);
  if (!Number.isFinite(mfu) || !Number.isFinite(lifespan)) return null;
  return {
    model: match[1],
    mfu: clamp(mfu, MFU_MIN, MFU_MAX),
    lifespan: clamp(lifespan, LIFESPAN_MIN, LIFESPAN_MAX),
  };
}

/** Serialize state to a query string (no leading "?"). */
export function encodeState(state: UiScenarioState): string {
  const params = new URLSearchParams();
  params.set("model", state.model);
  params.set("mfu", String(state.mfu));
  params.set("lifespan", String(state.lifespan));
  for (const pin of state.pins) {
    params.append("pin", encodePin(pin));
  }
  return params.toString();
}

/** Restore state from a query string; missing or bad fields fall back to defaults. */
export function decodeState(query: string): UiScenarioState {
  const params = new URLSearchParams(query);
  const fallback = defaultState();
  const pins: Pin[] = [];
  for (const raw of params.getAll("pin")) {
    const pin = decodePin(raw);
    if (pin) pins.push(pin);
  }
  return {
    model: params.get("model") ?? fallback.model,
    mfu: clamp(parseNumber(params.get("mfu"), fallback.mfu), MFU_MIN, MFU_MAX),
    lifespan: clamp(
      parseNumber(params.get("lifespan"), fallback.lifespan),
      LIFESPAN_MIN,
      LIFESPAN_MAX,
    ),
    pins,
  };
}

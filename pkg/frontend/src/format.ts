/** Display formatting: counts, masses, percentages, log-scale bar widths. */

export function formatCount(value: number): string {
  return value.toLocaleString("en-US");
}

export function formatKg(value: number): string {
  if (value === 0) return "0";
  return Number(value.toPrecision(4)).toLocaleString("en-US", {
    maximumFractionDigits: 6,
  });
}

export function formatPercent(fraction: number, digits = 1): string {
  return `${(100 * fraction).toFixed(digits)}%`;
}

export function formatMfu(mfu: number): string {
  return `${Math.round(100 * mfu)}%`;
}

/**
 * Fractional bar length for a value on a log scale spanning [min, max].
 * Values at or below min collapse to 0; the span covers 3+ orders of
 * magnitude, which a linear scale would render unreadably.
 */
export function logScaleFraction(
  value: number,
  min: number,
  max: number,
): number {
  if (!(value > 0) || !(max > min) || !(min > 0)) return 0;
  const fraction =
    (Math.log10(value) - Math.log10(min)) / (Math.log10(max) - Math.log10(min));
  return Math.min(1, Math.max(0, fraction));
}

/** Element-mass breakdown: top entries by mass plus an "other" bucket. */

export interface ElementSlice {
  symbol: string;
  massKg: number;
}

export function topElements(
  masses: Record<string, number>,
  limit = 10,
): ElementSlice[] {
  const sorted = Object.entries(masses)
    .map(([symbol, massKg]) => ({ symbol, massKg }))
    .sort((a, b) => b.massKg - a.massKg || a.symbol.localeCompare(b.symbol));
  if (sorted.length <= limit) return sorted;
  const top = sorted.slice(0, limit);
  const other = sorted
    .slice(limit)
    .reduce((sum, slice) => sum + slice.massKg, 0);
  top.push({ symbol: "other", massKg: other });
  return top;
}

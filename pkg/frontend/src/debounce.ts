/** Slider-to-request cadence: trailing-edge debounce and newest-wins sequencing. */

export function debounce<Args extends unknown[]>(
  fn: (...args: Args) => void,
  waitMs: number,
): (...args: Args) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: Args) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => fn(...args), waitMs);
  };
}

/**
 * Monotonic ticket counter for in-flight requests. A response is applied only
 * if its ticket is still the latest, so stale results never overwrite newer
 * ones regardless of arrival order.
 */
export class Sequencer {
  private latest = 0;

  next(): number {
    return ++this.latest;
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.latest;
  }
}

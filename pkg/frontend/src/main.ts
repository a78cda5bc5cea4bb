/**
 * DOM wiring for the what-if explorer. All numbers are fetched from the
 * estimation service; this file only moves state between the URL, the
 * controls, and the rendered panels.
 */

import { ApiClient, type EstimateResponse, type ModelEntry } from "./api.js";
import { buildComparison, samePin, type PinResult } from "./compare.js";
import { debounce, Sequencer } from "./debounce.js";
import { topElements } from "./elements.js";
import {
  formatCount,
  formatKg,
  formatMfu,
  formatPercent,
  logScaleFraction,
} from "./format.js";
import {
  buildGrid,
  gridExtent,
  HEATMAP_LIFESPANS,
  HEATMAP_MFUS,
  type HeatmapGrid,
} from "./heatmap.js";
import {
  decodeState,
  encodeState,
  isOutsideEmpiricalRange,
  LIFESPAN_MAX,
  LIFESPAN_MIN,
  MFU_MAX,
  MFU_MIN,
  type UiScenarioState,
} from "./state.js";

const DEBOUNCE_MS = 150;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

class App {
  private readonly api = new ApiClient();
  private readonly estimateSeq = new Sequencer();
  private readonly heatmapSeq = new Sequencer();
  private state: UiScenarioState;
  private pinResults: PinResult[] = [];

  private readonly modelSelect = el<HTMLSelectElement>("model-select");
  private readonly mfuSlider = el<HTMLInputElement>("mfu-slider");
  private readonly mfuLabel = el<HTMLElement>("mfu-label");
  private readonly lifespanSlider = el<HTMLInputElement>("lifespan-slider");
  private readonly lifespanLabel = el<HTMLElement>("lifespan-label");
  private readonly badges = el<HTMLElement>("badges");
  private readonly result = el<HTMLElement>("result");
  private readonly elementsPanel = el<HTMLElement>("elements");
  private readonly banner = el<HTMLElement>("banner");
  private readonly pinButton = el<HTMLButtonElement>("pin-button");
  private readonly pinsTable = el<HTMLElement>("pins");
  private readonly heatmapPanel = el<HTMLElement>("heatmap");

  constructor() {
    this.state = decodeState(window.location.search);
    this.configureSliders();
    this.bindEvents();
  }

  async start(): Promise<void> {
    try {
      const listing = await this.api.models();
      this.populateModels([...listing.models, ...listing.gpt4_scenarios]);
    } catch (error) {
      this.showBanner(error);
    }
    this.syncControls();
    this.refreshEstimate();
    this.refreshHeatmap();
    this.refreshPins();
  }

  private configureSliders(): void {
    this.mfuSlider.min = String(MFU_MIN);
    this.mfuSlider.max = String(MFU_MAX);
    this.mfuSlider.step = "0.01";
    this.lifespanSlider.min = String(LIFESPAN_MIN);
    this.lifespanSlider.max = String(LIFESPAN_MAX);
    this.lifespanSlider.step = "0.5";
  }

  private bindEvents(): void {
    const debouncedEstimate = debounce(() => this.refreshEstimate(), DEBOUNCE_MS);
    this.mfuSlider.addEventListener("input", () => {
      this.state.mfu = Number(this.mfuSlider.value);
      this.afterStateChange();
      debouncedEstimate();
    });
    this.lifespanSlider.addEventListener("input", () => {
      this.state.lifespan = Number(this.lifespanSlider.value);
      this.afterStateChange();
      debouncedEstimate();
    });
    this.modelSelect.addEventListener("change", () => {
      this.state.model = this.modelSelect.value;
      this.afterStateChange();
      this.refreshEstimate();
      this.refreshHeatmap();
    });
    this.pinButton.addEventListener("click", () => this.pinCurrent());
  }

  private populateModels(entries: ModelEntry[]): void {
    this.modelSelect.replaceChildren(
      ...entries.map((entry) => {
        const option = document.createElement("option");
        option.value = entry.id;
        option.textContent =
          entry.kind === "gpt4_scenario"
            ? `GPT-4 (${entry.display_name})`
            : entry.display_name;
        return option;
      }),
    );
    this.modelSelect.value = this.state.model;
  }

  private syncControls(): void {
    this.mfuSlider.value = String(this.state.mfu);
    this.lifespanSlider.value = String(this.state.lifespan);
    this.modelSelect.value = this.state.model;
    this.mfuLabel.textContent = formatMfu(this.state.mfu);
    this.lifespanLabel.textContent = `${this.state.lifespan} yr`;
    this.renderBadges();
  }

  private afterStateChange(): void {
    this.syncControls();
    const query = encodeState(this.state);
    window.history.replaceState(null, "", `${window.location.pathname}?${query}`);
  }

  private renderBadges(): void {
    const badges: string[] = [];
    if (isOutsideEmpiricalRange(this.state.mfu)) {
      badges.push("outside empirical 20–60% MFU range");
    }
    if (this.state.mfu === 1) {
      badges.push("idealized upper bound");
    }
    this.badges.replaceChildren(
      ...badges.map((text) => {
        const span = document.createElement("span");
        span.className = "badge";
        span.textContent = text;
        return span;
      }),
    );
  }

  private showBanner(error: unknown): void {
    this.banner.textContent =
      error instanceof Error ? error.message : String(error);
    this.banner.hidden = false;
  }

  private clearBanner(): void {
    this.banner.hidden = true;
  }

  private async refreshEstimate(): Promise<void> {
    const ticket = this.estimateSeq.next();
    try {
      const estimate = await this.api.estimate(
        this.state.model,
        this.state.mfu,
        this.state.lifespan,
      );
      if (!this.estimateSeq.isCurrent(ticket)) return;
      this.clearBanner();
      this.renderResult(estimate);
    } catch (error) {
      if (!this.estimateSeq.isCurrent(ticket)) return;
      this.showBanner(error); // last good result stays visible
    }
  }

  private renderResult(estimate: EstimateResponse): void {
    this.result.replaceChildren();
    const rows: Array<[string, string]> = [
      ["GPUs", `${formatCount(estimate.gpus.count)} (exact ${estimate.gpus.exact.toFixed(2)})`],
      ["total mass", `${formatKg(estimate.total_mass_kg)} kg`],
      ["toxic mass", `${formatKg(estimate.toxic_mass_kg)} kg`],
    ];
    for (const [label, value] of rows) {
      const div = document.createElement("div");
      div.className = "stat";
      div.innerHTML = `<span class="stat-label"></span><span class="stat-value"></span>`;
      (div.firstElementChild as HTMLElement).textContent = label;
      (div.lastElementChild as HTMLElement).textContent = value;
      this.result.append(div);
    }
    this.renderElements(estimate);
  }

  private renderElements(estimate: EstimateResponse): void {
    const slices = topElements(estimate.element_masses_kg, 10);
    const positive = slices.filter((slice) => slice.massKg > 0);
    if (positive.length === 0) {
      this.elementsPanel.replaceChildren();
      return;
    }
    const max = Math.max(...positive.map((s) => s.massKg));
    const min = Math.min(...positive.map((s) => s.massKg));
    this.elementsPanel.replaceChildren(
      ...slices.map((slice) => {
        const row = document.createElement("div");
        row.className = "element-row";
        const fraction =
          min === max ? 1 : 0.02 + 0.98 * logScaleFraction(slice.massKg, min, max);
        row.innerHTML =
          `<span class="element-symbol"></span>` +
          `<span class="element-bar"><span class="element-fill"></span></span>` +
          `<span class="element-mass"></span>`;
        (row.children[0] as HTMLElement).textContent = slice.symbol;
        ((row.children[1] as HTMLElement).firstElementChild as HTMLElement)
          .style.width = `${(100 * fraction).toFixed(1)}%`;
        (row.children[2] as HTMLElement).textContent = `${formatKg(slice.massKg)} kg`;
        return row;
      }),
    );
  }

  private async pinCurrent(): Promise<void> {
    const pin = {
      model: this.state.model,
      mfu: this.state.mfu,
      lifespan: this.state.lifespan,
    };
    if (this.state.pins.some((existing) => samePin(existing, pin))) return;
    this.state.pins.push(pin);
    this.afterStateChange();
    await this.refreshPins();
  }

  private async refreshPins(): Promise<void> {
    try {
      this.pinResults = await Promise.all(
        this.state.pins.map(async (pin) => ({
          pin,
          estimate: await this.api.estimate(pin.model, pin.mfu, pin.lifespan),
        })),
      );
    } catch (error) {
      this.showBanner(error);
      return;
    }
    this.renderPins();
  }

  private renderPins(): void {
    const rows = buildComparison(this.pinResults);
    this.pinsTable.replaceChildren();
    if (rows.length === 0) return;
    const table = document.createElement("table");
    table.innerHTML =
      "<thead><tr><th>scenario</th><th>GPUs</th><th>total kg</th>" +
      "<th>toxic kg</th><th>vs first</th><th></th></tr></thead>";
    const body = document.createElement("tbody");
    rows.forEach((row, index) => {
      const tr = document.createElement("tr");
      const cells = [
        `${row.pin.model} @ ${formatMfu(row.pin.mfu)}, ${row.pin.lifespan} yr`,
        formatCount(row.gpus),
        formatKg(row.totalKg),
        formatKg(row.toxicKg),
        index === 0 ? "—" : `${formatPercent(row.reductionVsFirst)} fewer`,
      ];
      for (const text of cells) {
        const td = document.createElement("td");
        td.textContent = text;
        tr.append(td);
      }
      const removeCell = document.createElement("td");
      const removeButton = document.createElement("button");
      removeButton.textContent = "×";
      removeButton.addEventListener("click", () => {
        this.state.pins.splice(index, 1);
        this.pinResults.splice(index, 1);
        this.afterStateChange();
        this.renderPins();
      });
      removeCell.append(removeButton);
      tr.append(removeCell);
      body.append(tr);
    });
    table.append(body);
    this.pinsTable.append(table);
  }

  private async refreshHeatmap(): Promise<void> {
    const ticket = this.heatmapSeq.next();
    try {
      const sweep = await this.api.sweep(
        this.state.model,
        [...HEATMAP_MFUS],
        [...HEATMAP_LIFESPANS],
      );
      if (!this.heatmapSeq.isCurrent(ticket)) return;
      this.renderHeatmap(buildGrid(sweep));
    } catch (error) {
      if (!this.heatmapSeq.isCurrent(ticket)) return;
      this.showBanner(error);
    }
  }

  private renderHeatmap(grid: HeatmapGrid): void {
    const { min, max } = gridExtent(grid);
    const table = document.createElement("table");
    table.className = "heatmap";
    const header = document.createElement("tr");
    header.append(document.createElement("th"));
    for (const mfu of HEATMAP_MFUS) {
      const th = document.createElement("th");
      th.textContent = formatMfu(mfu);
      header.append(th);
    }
    table.append(header);
    for (const row of grid) {
      const tr = document.createElement("tr");
      const th = document.createElement("th");
      th.textContent = `${row[0].lifespan} yr`;
      tr.append(th);
      for (const cell of row) {
        const td = document.createElement("td");
        td.textContent = formatCount(cell.gpus);
        const heat = logScaleFraction(cell.gpus, min, max);
        td.style.backgroundColor = `rgba(200, 60, 30, ${(0.08 + 0.72 * heat).toFixed(3)})`;
        td.addEventListener("click", () => {
          // feed the clicked scenario back into the sliders
          this.state.mfu = cell.mfu;
          this.state.lifespan = cell.lifespan;
          this.afterStateChange();
          this.refreshEstimate();
        });
        tr.append(td);
      }
      table.append(tr);
    }
    this.heatmapPanel.replaceChildren(table);
  }
}

if (typeof document !== "undefined" && document.getElementById("model-select")) {
  new App().start();
}

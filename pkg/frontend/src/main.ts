/** DOM wiring for the design console. All computation happens in the
 * service; this file only moves values between the form, the API client
 * and the renderers. */

import { DesignApiError, postDesign } from "./api.js";
import type { DesignResult, Family, Kind } from "./api.js";
import { renderChartSvg } from "./chart.js";
import { responseCsv, resultJsonForDownload } from "./csv.js";
import {
  FIELD_LABELS,
  KINDS_WITHOUT_LA,
  applyError,
  applyResult,
  buildRequest,
  initialState,
  switchKind,
  validate,
  visibleFields,
} from "./state.js";
import type { FormState } from "./state.js";

let state: FormState = initialState();

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

function serviceUrl(): string {
  return ($("service-url") as unknown as HTMLInputElement).value.replace(/\/+$/, "");
}

function renderFields(): void {
  const host = $("kind-fields");
  host.innerHTML = "";
  for (const name of visibleFields(state)) {
    const label = document.createElement("label");
    label.textContent = FIELD_LABELS[name];
    const input = document.createElement("input");
    input.type = "number";
    input.step = "any";
    input.id = `field-${name}`;
    const current = state.fields[name];
    if (current !== undefined) input.value = String(current);
    input.addEventListener("input", () => {
      state.fields[name] = input.valueAsNumber;
    });
    label.appendChild(input);
    host.appendChild(label);
  }
  ($("la") as unknown as HTMLInputElement).disabled = KINDS_WITHOUT_LA.includes(state.kind);
}

function renderBanner(): void {
  const banner = $("banner");
  banner.textContent = state.errorBanner ?? "";
  banner.style.display = state.errorBanner ? "block" : "none";
}

function renderReadouts(result: DesignResult): void {
  const parts = [`Filter Order: ${result.order}`];
  if (result.selectivity !== null) parts.push(`Selectivity: ${result.selectivity.toFixed(4)}`);
  if (result.ripple !== null) {
    parts.push(`Passband ripple: ${result.ripple.passband_ripple_db.toFixed(4)} dB`);
    parts.push(`Ripple factor: ${result.ripple.ripple_factor.toFixed(4)}`);
  }
  if (result.compute_ms !== undefined) parts.push(`Computed in ${result.compute_ms.toFixed(1)} ms`);
  $("readouts").textContent = parts.join(" · ");
}

function elementRows(result: DesignResult): string[][] {
  const el = result.elements as Record<string, unknown>;
  const rows: string[][] = [];
  const num = (v: unknown) => (typeof v === "number" ? v.toPrecision(6) : String(v));
  if (el.type === "ladder") {
    const branches = el.branches as Array<Record<string, unknown>>;
    branches.forEach((b, i) => {
      rows.push([
        `#${i + 1} ${b.orientation} ${b.resonator}`,
        `L = ${num(b.inductance_nh)} nH`,
        `C = ${num(b.capacitance_pf)} pF`,
      ]);
    });
  } else if (el.type === "coupled_bpf") {
    (el.coupling_caps_pf as number[]).forEach((v, i) =>
      rows.push([`Coupling C${i}${i + 1}`, `${num(v)} pF`, ""]),
    );
    (el.node_caps_pf as number[]).forEach((v, i) =>
      rows.push([
        `Node ${i + 1}`,
        `C = ${num(v)} pF`,
        `L = ${num((el.node_inductors_nh as number[])[i])} nH`,
      ]),
    );
  } else if (el.type === "combline") {
    rows.push(["Input transformer", `C = ${num((el.transformer_cap_nf as number) * 1000)} pF`, ""]);
    (el.odd_impedances_ohm as number[]).forEach((v, i) =>
      rows.push([`Line ${i}`, `Z(odd) = ${num(v)} Ω`, ""]),
    );
    (el.even_impedances_ohm as number[]).forEach((v, i) =>
      rows.push([`Gap ${i}`, `Z(even) = ${num(v)} Ω`, ""]),
    );
  } else if (el.type === "uwb") {
    rows.push(["Center frequency", `${num(el.center_freq_ghz)} GHz`, ""]);
    rows.push(["alpha", num(el.alpha), ""]);
    rows.push(["zeta", num(el.zeta), ""]);
    rows.push(["Ripple factor", num(el.ripple_factor), ""]);
  }
  return rows;
}

function renderElements(result: DesignResult): void {
  const table = $("elements");
  table.innerHTML = "";
  for (const row of elementRows(result)) {
    const tr = document.createElement("tr");
    for (const cell of row) {
      const td = document.createElement("td");
      td.textContent = cell;
      tr.appendChild(td);
    }
    table.appendChild(tr);
  }
}

function renderChart(): void {
  const result = state.lastResult;
  const host = $("chart");
  if (!result) {
    host.innerHTML = "";
    return;
  }
  const resp = result.response_emulated ?? result.response_simulated;
  if (!resp) {
    host.innerHTML = "<p>This filter kind reports element values only.</p>";
    return;
  }
  host.innerHTML = renderChartSvg(resp, {
    width: 720,
    height: 400,
    showLegend: state.showLegend,
    showGrid: state.showGrid,
  });
}

function renderResult(): void {
  const result = state.lastResult;
  const hasResponse =
    result !== null && (result.response_emulated !== null || result.response_simulated !== null);
  ($("export-csv") as unknown as HTMLButtonElement).disabled = !hasResponse;
  ($("export-json") as unknown as HTMLButtonElement).disabled = result === null;
  if (result) {
    renderReadouts(result);
    renderElements(result);
  }
  renderChart();
}

async function submit(): Promise<void> {
  const violation = validate(state);
  if (violation) {
    state = { ...state, errorBanner: violation };
    renderBanner();
    return;
  }
  const seq = ++state.requestSeq;
  try {
    const result = await postDesign(serviceUrl(), buildRequest(state));
    state = applyResult(state, seq, result);
  } catch (e) {
    const constraint = e instanceof DesignApiError ? e.constraint : String(e);
    state = applyError(state, seq, constraint);
  }
  renderBanner();
  renderResult();
}

function download(name: string, mime: string, text: string): void {
  const a = document.createElement("a");
  a.href = URL.createObjectURL(new Blob([text], { type: mime }));
  a.download = name;
  a.click();
  URL.revokeObjectURL(a.href);
}

export function init(): void {
  renderFields();
  renderBanner();
  renderResult();

  ($("kind") as unknown as HTMLSelectElement).addEventListener("change", (e) => {
    state = switchKind(state, (e.target as HTMLSelectElement).value as Kind);
    renderFields();
  });
  ($("family") as unknown as HTMLSelectElement).addEventListener("change", (e) => {
    state.family = (e.target as HTMLSelectElement).value as Family;
  });
  for (const [id, key] of [
    ["la", "la"],
    ["lr", "lr"],
    ["z0", "z0"],
  ] as const) {
    ($(id) as unknown as HTMLInputElement).addEventListener("input", (e) => {
      state[key] = (e.target as HTMLInputElement).valueAsNumber;
    });
  }
  ($("toggle-legend") as unknown as HTMLInputElement).addEventListener("change", (e) => {
    state.showLegend = (e.target as HTMLInputElement).checked;
    renderChart(); // client-only re-render, no new request
  });
  ($("toggle-grid") as unknown as HTMLInputElement).addEventListener("change", (e) => {
    state.showGrid = (e.target as HTMLInputElement).checked;
    renderChart();
  });
  $("plot").addEventListener("click", () => void submit());
  $("export-csv").addEventListener("click", () => {
    if (state.lastResult) download("response.csv", "text/csv", responseCsv(state.lastResult));
  });
  $("export-json").addEventListener("click", () => {
    if (state.lastResult) {
      download("design.json", "application/json", resultJsonForDownload(state.lastResult));
    }
  });
}

if (typeof document !== "undefined" && document.getElementById("plot")) {
  init();
}

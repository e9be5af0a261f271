/** Dual-trace dB-vs-GHz chart rendered as an SVG string: s21 blue, s11 red.
 *
 * Pure functions so the scaling and point filtering are unit-testable
 * without a DOM. Non-finite samples are dropped; values below the floor are
 * clamped and render as a flat line.
 */

import type { FrequencyResponse } from "./api.js";

export const DB_FLOOR = -120;

export interface ChartOptions {
  width: number;
  height: number;
  showLegend: boolean;
  showGrid: boolean;
  floorDb?: number;
}

export interface Trace {
  label: string;
  color: string;
  /** "x,y x,y ..." pixel coordinates for an SVG polyline. */
  points: string;
}

interface Scale {
  fMin: number;
  fMax: number;
  dbMin: number;
  dbMax: number;
}

function finitePairs(freq: number[], db: number[], floor: number): Array<[number, number]> {
  const out: Array<[number, number]> = [];
  for (let i = 0; i < freq.length; i++) {
    const f = freq[i];
    const v = db[i];
    if (!Number.isFinite(f) || !Number.isFinite(v)) continue;
    out.push([f, Math.max(v, floor)]);
  }
  return out;
}

function computeScale(resp: FrequencyResponse, floor: number): Scale {
  const all = [
    ...finitePairs(resp.freq_ghz, resp.s21_db, floor),
    ...finitePairs(resp.freq_ghz, resp.s11_db, floor),
  ];
  if (all.length === 0) return { fMin: 0, fMax: 1, dbMin: floor, dbMax: 0 };
  let fMin = Infinity;
  let fMax = -Infinity;
  let dbMin = Infinity;
  for (const [f, v] of all) {
    fMin = Math.min(fMin, f);
    fMax = Math.max(fMax, f);
    dbMin = Math.min(dbMin, v);
  }
  if (fMax === fMin) fMax = fMin + 1;
  return { fMin, fMax, dbMin: Math.max(dbMin, floor), dbMax: 0 };
}

export function tracePoints(
  freq: number[],
  db: number[],
  scale: Scale,
  width: number,
  height: number,
  floor: number,
): string {
  const span = scale.dbMax - scale.dbMin || 1;
  return finitePairs(freq, db, floor)
    .map(([f, v]) => {
      const x = ((f - scale.fMin) / (scale.fMax - scale.fMin)) * width;
      const y = ((scale.dbMax - v) / span) * height;
      return `${x.toFixed(2)},${y.toFixed(2)}`;
    })
    .join(" ");
}

export function buildTraces(resp: FrequencyResponse, opts: ChartOptions): Trace[] {
  const floor = opts.floorDb ?? DB_FLOOR;
  const scale = computeScale(resp, floor);
  return [
    {
      label: "s21 (dB)",
      color: "#1f5fd0",
      points: tracePoints(resp.freq_ghz, resp.s21_db, scale, opts.width, opts.height, floor),
    },
    {
      label: "s11 (dB)",
      color: "#c92a2a",
      points: tracePoints(resp.freq_ghz, resp.s11_db, scale, opts.width, opts.height, floor),
    },
  ];
}

export function renderChartSvg(resp: FrequencyResponse, opts: ChartOptions): string {
  const traces = buildTraces(resp, opts);
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${opts.width} ${opts.height}" ` +
      `width="${opts.width}" height="${opts.height}">`,
    `<rect width="${opts.width}" height="${opts.height}" fill="#ffffff"/>`,
  ];
  if (opts.showGrid) {
    for (let i = 1; i < 10; i++) {
      const x = (opts.width * i) / 10;
      const y = (opts.height * i) / 10;
      parts.push(`<line x1="${x}" y1="0" x2="${x}" y2="${opts.height}" stroke="#e3e3e3"/>`);
      parts.push(`<line x1="0" y1="${y}" x2="${opts.width}" y2="${y}" stroke="#e3e3e3"/>`);
    }
  }
  for (const t of traces) {
    parts.push(
      `<polyline fill="none" stroke="${t.color}" stroke-width="1.5" points="${t.points}"/>`,
    );
  }
  if (opts.showLegend) {
    traces.forEach((t, i) => {
      const y = 16 + 18 * i;
      parts.push(`<rect x="8" y="${y - 9}" width="14" height="4" fill="${t.color}"/>`);
      parts.push(`<text x="28" y="${y}" font-size="12" font-family="sans-serif">${t.label}</text>`);
    });
  }
  parts.push("</svg>");
  return parts.join("");
}

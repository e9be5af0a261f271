import { describe, expect, it } from "vitest";

import { DB_FLOOR, buildTraces, renderChartSvg } from "../src/chart.js";

const OPTS = { width: 720, height: 400, showLegend: true, showGrid: true };

const simple = {
  freq_ghz: [1, 2, 3],
  s21_db: [0, -3, -20],
  s11_db: [-20, -3, 0],
};

describe("buildTraces", () => {
  it("produces one blue s21 and one red s11 trace", () => {
    const traces = buildTraces(simple, OPTS);
    expect(traces).toHaveLength(2);
    expect(traces[0].label).toContain("s21");
    expect(traces[1].label).toContain("s11");
    expect(traces[0].color).not.toBe(traces[1].color);
  });

  it("never emits non-finite coordinates", () => {
    const resp = {
      freq_ghz: [1, 2, 3, 4],
      s21_db: [0, Number.NEGATIVE_INFINITY, Number.NaN, -10],
      s11_db: [-10, -20, -30, Number.POSITIVE_INFINITY],
    };
    for (const t of buildTraces(resp, OPTS)) {
      for (const pair of t.points.split(" ")) {
        const [x, y] = pair.split(",").map(Number);
        expect(Number.isFinite(x)).toBe(true);
        expect(Number.isFinite(y)).toBe(true);
      }
    }
  });

  it("renders floor-clamped data as a flat line", () => {
    const resp = {
      freq_ghz: [1, 2, 3],
      s21_db: [DB_FLOOR, DB_FLOOR, DB_FLOOR],
      s11_db: [0, 0, 0],
    };
    const [s21] = buildTraces(resp, OPTS);
    const ys = s21.points.split(" ").map((p) => Number(p.split(",")[1]));
    expect(new Set(ys).size).toBe(1);
  });

  it("clamps below-floor samples instead of dropping them", () => {
    const resp = {
      freq_ghz: [1, 2],
      s21_db: [-500, 0],
      s11_db: [0, -500],
    };
    const [s21] = buildTraces(resp, OPTS);
    expect(s21.points.split(" ")).toHaveLength(2);
  });

  it("spans the full width from first to last frequency", () => {
    const [s21] = buildTraces(simple, OPTS);
    const xs = s21.points.split(" ").map((p) => Number(p.split(",")[0]));
    expect(xs[0]).toBe(0);
    expect(xs[xs.length - 1]).toBe(OPTS.width);
  });
});

describe("renderChartSvg", () => {
  it("emits both polylines", () => {
    const svg = renderChartSvg(simple, OPTS);
    expect(svg.match(/<polyline /g)).toHaveLength(2);
    expect(svg).toContain("<svg");
    expect(svg).toContain("</svg>");
  });

  it("honors the legend and grid toggles", () => {
    const bare = renderChartSvg(simple, { ...OPTS, showLegend: false, showGrid: false });
    expect(bare).not.toContain("<text");
    expect(bare).not.toContain("#e3e3e3");
    const full = renderChartSvg(simple, OPTS);
    expect(full).toContain("<text");
    expect(full).toContain("#e3e3e3");
  });

  it("survives an all-non-finite response", () => {
    const resp = { freq_ghz: [1, 2], s21_db: [NaN, NaN], s11_db: [NaN, NaN] };
    const svg = renderChartSvg(resp, OPTS);
    expect(svg).toContain('points=""');
  });
});

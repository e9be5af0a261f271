/** Result exports, byte-identical to the command-line tool's output:
 * CSV with header f_ghz,s21_db,s11_db, six decimals, LF line endings,
 * emulated response preferred when both routes are present. */

import type { DesignResult, FrequencyResponse } from "./api.js";

function fixed6(v: number): string {
  // Match printf-style "%.6f", including the sign of negative zero.
  const s = v.toFixed(6);
  if (s === "0.000000" && (Object.is(v, -0) || v < 0)) return "-0.000000";
  return s;
}

export function exportedResponse(result: DesignResult): FrequencyResponse | null {
  return result.response_emulated ?? result.response_simulated;
}

export function responseCsv(result: DesignResult): string {
  const resp = exportedResponse(result);
  if (resp === null) {
    throw new Error(`kind '${result.spec.kind}' produces no frequency response`);
  }
  const lines = ["f_ghz,s21_db,s11_db"];
  for (let i = 0; i < resp.freq_ghz.length; i++) {
    lines.push(`${fixed6(resp.freq_ghz[i])},${fixed6(resp.s21_db[i])},${fixed6(resp.s11_db[i])}`);
  }
  return lines.join("\n") + "\n";
}

/** The service response body minus the timing field: equals the CLI's
 * canonical JSON document. */
export function resultJsonForDownload(result: DesignResult): string {
  const copy: Record<string, unknown> = { ...result };
  delete copy.compute_ms;
  return JSON.stringify(copy);
}

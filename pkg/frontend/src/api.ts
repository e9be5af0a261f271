/** Typed client for the filter design HTTP API. The UI performs no
 * computation of its own; every number it shows came from the service. */

export type Family = "butterworth" | "chebyshev";

export type Kind =
  | "lowpass"
  | "highpass"
  | "bandpass"
  | "bandstop"
  | "coupled_bandpass"
  | "combline"
  | "uwb_bandpass";

export interface GridSpec {
  start_ghz: number;
  stop_ghz: number;
  step_ghz: number;
}

export interface DesignRequest {
  family: Family;
  kind: Kind;
  insertion_loss_db: number;
  return_loss_db: number;
  band_edges_ghz: number[];
  z0_ohm: number;
  topology?: string;
  order?: number;
  method?: "emulate" | "simulate" | "both";
  grid?: GridSpec;
}

export interface FrequencyResponse {
  freq_ghz: number[];
  s21_db: number[];
  s11_db: number[];
}

export interface LadderBranch {
  orientation: "series" | "shunt";
  resonator: string;
  inductance_nh: number;
  capacitance_pf: number;
}

export interface DesignResult {
  spec: DesignRequest;
  order: number;
  selectivity: number | null;
  ripple: {
    reflection_coefficient: number;
    passband_ripple_db: number;
    ripple_factor: number;
  } | null;
  g_values: number[] | null;
  elements: Record<string, unknown> & { type: string };
  response_emulated: FrequencyResponse | null;
  response_simulated: FrequencyResponse | null;
  version: string;
  compute_ms?: number;
}

export interface ApiError {
  code: string;
  message: string;
  constraint?: string;
}

export class DesignApiError extends Error {
  readonly code: string;
  readonly constraint: string;
  readonly status: number;

  constructor(status: number, body: ApiError) {
    super(body.message);
    this.code = body.code;
    this.constraint = body.constraint ?? body.message;
    this.status = status;
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export async function postDesign(
  baseUrl: string,
  body: DesignRequest,
  fetchImpl: FetchLike = fetch,
): Promise<DesignResult> {
  const res = await fetchImpl(`${baseUrl}/api/v1/design`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!res.ok) {
    let err: ApiError;
    try {
      err = (await res.json()) as ApiError;
    } catch {
      err = { code: "internal", message: `service returned HTTP ${res.status}` };
    }
    throw new DesignApiError(res.status, err);
  }
  return (await res.json()) as DesignResult;
}

export async function getHealth(
  baseUrl: string,
  fetchImpl: FetchLike = fetch,
): Promise<{ status: string; version: string }> {
  const res = await fetchImpl(`${baseUrl}/api/v1/health`);
  if (!res.ok) throw new Error(`health check failed: HTTP ${res.status}`);
  return (await res.json()) as { status: string; version: string };
}

/** Form state for the design console.
 *
 * The form shows exactly the frequency fields relevant to the selected
 * filter kind; switching kind resets only kind-specific fields while
 * preserving the loss targets and reference impedance.
 */

import type { DesignRequest, DesignResult, Family, Kind } from "./api.js";

export type FieldName =
  | "fp"
  | "fs"
  | "f1"
  | "f2"
  | "fs1"
  | "fs2"
  | "f0"
  | "bw"
  | "bws"
  | "order";

/** Frequency/order fields each kind requires, in display order. */
export const KIND_FIELDS: Record<Kind, FieldName[]> = {
  lowpass: ["fp", "fs"],
  highpass: ["fs", "fp"],
  bandpass: ["f1", "f2", "fs"],
  bandstop: ["f1", "f2", "fs1", "fs2"],
  coupled_bandpass: ["f0", "bw", "bws"],
  combline: ["f0", "bw", "order"],
  uwb_bandpass: ["f1", "f2"],
};

export const FIELD_LABELS: Record<FieldName, string> = {
  fp: "Passband edge fp (GHz)",
  fs: "Stopband edge fs (GHz)",
  f1: "Lower edge f1 (GHz)",
  f2: "Upper edge f2 (GHz)",
  fs1: "Lower stop edge fs1 (GHz)",
  fs2: "Upper stop edge fs2 (GHz)",
  f0: "Center frequency f0 (GHz)",
  bw: "Passband width (GHz)",
  bws: "Stopband width (GHz)",
  order: "Order N",
};

/** Kinds whose order derives from the loss targets (no order input). */
export const KINDS_WITHOUT_LA: Kind[] = ["combline", "uwb_bandpass"];

export interface FormState {
  family: Family;
  kind: Kind;
  la: number; // stopband insertion loss target, dB
  lr: number; // passband return loss, dB
  z0: number; // reference impedance, ohm
  fields: Partial<Record<FieldName, number>>;
  showLegend: boolean;
  showGrid: boolean;
  lastResult: DesignResult | null;
  errorBanner: string | null;
  requestSeq: number; // stale responses carry an older sequence number
}

export function initialState(): FormState {
  return {
    family: "chebyshev",
    kind: "lowpass",
    la: 40,
    lr: 20,
    z0: 50,
    fields: { fp: 1, fs: 2 },
    showLegend: true,
    showGrid: true,
    lastResult: null,
    errorBanner: null,
    requestSeq: 0,
  };
}

/** Change filter kind: keep la/lr/z0 and toggles, drop kind-specific fields. */
export function switchKind(state: FormState, kind: Kind): FormState {
  if (kind === state.kind) return state;
  return { ...state, kind, fields: {} };
}

export function visibleFields(state: FormState): FieldName[] {
  return KIND_FIELDS[state.kind];
}

/** Client-side validation mirroring the service's constraints; returns the
 * first violated constraint, or null when the form may be submitted. */
export function validate(state: FormState): string | null {
  for (const name of visibleFields(state)) {
    const v = state.fields[name];
    if (v === undefined || Number.isNaN(v)) {
      return `${FIELD_LABELS[name]} is required`;
    }
    if (v <= 0) return `${FIELD_LABELS[name]} must be positive`;
  }
  if (state.lr <= 0) return "return loss must be positive";
  if (state.z0 <= 0) return "reference impedance must be positive";
  const f = state.fields;
  switch (state.kind) {
    case "lowpass":
      if (f.fs! <= f.fp!) return "fs must exceed fp";
      break;
    case "highpass":
      if (f.fp! <= f.fs!) return "fp must exceed fs";
      break;
    case "bandpass":
      if (f.f2! <= f.f1!) return "f2 must exceed f1";
      if (f.fs! <= f.f2!) return "fs must exceed f2";
      break;
    case "bandstop":
      if (f.f2! <= f.f1!) return "f2 must exceed f1";
      if (!(f.f1! < f.fs1! && f.fs1! < f.fs2! && f.fs2! < f.f2!)) {
        return "stop edges must lie inside f1..f2";
      }
      break;
    case "coupled_bandpass":
      if (f.bws! <= f.bw!) return "stopband width must exceed passband width";
      if (f.bw! >= f.f0!) return "passband width must be below the center frequency";
      break;
    case "combline":
      if (!Number.isInteger(f.order!) || f.order! < 2) {
        return "order must be an integer of at least 2";
      }
      break;
    case "uwb_bandpass":
      if (f.f2! <= f.f1!) return "f2 must exceed f1";
      if (f.f1! < 3.1 || f.f2! > 10.6) return "band must lie within 3.1..10.6 GHz";
      break;
  }
  if (!KINDS_WITHOUT_LA.includes(state.kind) && state.la <= state.lr) {
    return "insertion loss target must exceed the return loss";
  }
  return null;
}

/** Band-edge array in the order the service expects. */
export function bandEdges(state: FormState): number[] {
  const f = state.fields;
  switch (state.kind) {
    case "lowpass":
      return [f.fp!, f.fs!];
    case "highpass":
      return [f.fs!, f.fp!];
    case "bandpass":
      return [f.f1!, f.f2!, f.fs!];
    case "bandstop":
      return [f.f1!, f.f2!, f.fs1!, f.fs2!];
    case "coupled_bandpass":
      return [f.f0!, f.bw!, f.bws!];
    case "combline":
      return [f.f0!, f.bw!];
    case "uwb_bandpass":
      return [f.f1!, f.f2!];
  }
}

export function buildRequest(state: FormState): DesignRequest {
  const req: DesignRequest = {
    family: state.family,
    kind: state.kind,
    insertion_loss_db: KINDS_WITHOUT_LA.includes(state.kind) ? 0 : state.la,
    return_loss_db: state.lr,
    band_edges_ghz: bandEdges(state),
    z0_ohm: state.z0,
    method: "both",
  };
  if (state.kind === "combline") req.order = state.fields.order!;
  return req;
}

/** Apply a service response; discard it when a newer request is in flight. */
export function applyResult(state: FormState, seq: number, result: DesignResult): FormState {
  if (seq !== state.requestSeq) return state;
  return { ...state, lastResult: result, errorBanner: null };
}

/** Apply a service error: banner text, previous chart/result untouched. */
export function applyError(state: FormState, seq: number, constraint: string): FormState {
  if (seq !== state.requestSeq) return state;
  return { ...state, errorBanner: constraint };
}

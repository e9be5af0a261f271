"""Design orchestration and canonical serialization.

``design`` runs the full pipeline for a spec (order, elements, both sweep
routes) and the serializers here define the one canonical JSON/CSV encoding
shared by the CLI and the HTTP service.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from . import __version__
from .combline import ComblineNetwork, synthesize_combline
from .coupled import CoupledBpfNetwork, synthesize_coupled_bpf
from .emulation import sweep_closed_form, uwb_response
from .errors import InvalidSpec
from .network import DB_FLOOR, FrequencyResponse, SweepGrid, sweep_network
from .spec import DesignSpec, selectivity
from .synthesis import (
    LadderNetwork,
    PrototypeGValues,
    RippleChain,
    filter_order,
    prototype_g_values,
    ripple_chain,
    scale_lowpass_ladder,
    transform_ladder,
)
from .uwb import UWB_ORDER, UwbCoefficients, uwb_design

LADDER_KINDS = ("lowpass", "highpass", "bandpass", "bandstop")


@dataclass(frozen=True)
class DesignResult:
    spec: DesignSpec
    order: int
    selectivity: float | None
    ripple: RippleChain | None
    g_values: PrototypeGValues | None
    elements: LadderNetwork | CoupledBpfNetwork | ComblineNetwork | UwbCoefficients
    response_emulated: FrequencyResponse | None
    response_simulated: FrequencyResponse | None


def default_grid(spec: DesignSpec) -> SweepGrid:
    e = spec.band_edges_ghz
    if spec.kind == "lowpass":
        step = 0.01
        stop = 2 * e[0]
    elif spec.kind == "highpass":
        step = 0.01
        stop = 2 * e[1]
    elif spec.kind == "bandpass":
        step = 0.01
        stop = e[0] + e[1]
    elif spec.kind == "bandstop":
        step = 0.01
        stop = e[0] + e[3]
    elif spec.kind in ("coupled_bandpass", "combline"):
        step = 0.001
        stop = 2 * e[0]
    else:  # uwb_bandpass
        step = 0.001
        stop = 15.0
    return SweepGrid(step, stop, step)


def design(
    spec: DesignSpec,
    method: str = "both",
    grid: SweepGrid | None = None,
    db_floor: float = DB_FLOOR,
) -> DesignResult:
    if method not in ("emulate", "simulate", "both"):
        raise InvalidSpec("method must be emulate, simulate or both")
    spec.validate()
    if grid is None:
        grid = default_grid(spec)

    emulated = simulated = None

    if spec.kind in LADDER_KINDS:
        s = selectivity(spec)
        n = filter_order(spec.family, spec.insertion_loss_db, spec.return_loss_db, s)
        chain = ripple_chain(spec.return_loss_db) if spec.family == "chebyshev" else None
        g = prototype_g_values(
            spec.family, n, chain.passband_ripple_db if chain else None
        )
        if spec.kind == "lowpass":
            ladder = scale_lowpass_ladder(g, spec.band_edges_ghz[0], spec.z0_ohm, spec.topology)
        else:
            ladder = transform_ladder(g, spec.kind, spec.band_edges_ghz, spec.z0_ohm, spec.topology)
        if method in ("emulate", "both"):
            emulated = sweep_closed_form(spec, grid, db_floor)
        if method in ("simulate", "both"):
            simulated = sweep_network(ladder, grid, db_floor)
        return DesignResult(spec, n, s, chain, g, ladder, emulated, simulated)

    if spec.kind == "coupled_bandpass":
        s = selectivity(spec)
        chain = ripple_chain(spec.return_loss_db)
        net = synthesize_coupled_bpf(spec)
        if method in ("simulate", "both"):
            simulated = sweep_network(net, grid, db_floor)
        return DesignResult(spec, net.order, s, chain, None, net, None, simulated)

    if spec.kind == "combline":
        chain = ripple_chain(spec.return_loss_db)
        f0, bw = spec.band_edges_ghz
        net = synthesize_combline(spec.return_loss_db, f0, bw, spec.order, spec.z0_ohm)
        return DesignResult(spec, spec.order, None, chain, None, net, None, None)

    # uwb_bandpass
    chain = ripple_chain(spec.return_loss_db)
    coeffs = uwb_design(spec.band_edges_ghz[0], spec.band_edges_ghz[1], spec.return_loss_db)
    if method in ("emulate", "both"):
        emulated = uwb_response(coeffs, grid, db_floor)
    return DesignResult(spec, UWB_ORDER, None, chain, None, coeffs, emulated, None)


# --- canonical serialization ----------------------------------------------


def _num(x):
    """Format a number with 12 significant digits, JSON-safe."""
    if isinstance(x, bool):
        raise TypeError("bool is not a JSON number here")
    if isinstance(x, int):
        return str(x)
    if not math.isfinite(x):
        raise ValueError("non-finite value in canonical output")
    s = format(float(x), ".12g")
    # "1e+15" style is valid JSON; "inf"/"nan" are excluded above.
    return s


def _dump(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, float)):
        return _num(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_dump(v) for v in obj) + "]"
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(k)}:{_dump(v)}" for k, v in obj.items()) + "}"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def spec_dict(spec: DesignSpec) -> dict:
    d = {
        "family": spec.family,
        "kind": spec.kind,
        "insertion_loss_db": float(spec.insertion_loss_db),
        "return_loss_db": float(spec.return_loss_db),
        "band_edges_ghz": [float(x) for x in spec.band_edges_ghz],
        "z0_ohm": float(spec.z0_ohm),
        "topology": spec.topology,
    }
    if spec.order is not None:
        d["order"] = int(spec.order)
    return d


def _elements_dict(elements) -> dict:
    if isinstance(elements, LadderNetwork):
        return {
            "type": "ladder",
            "branches": [
                {
                    "orientation": b.orientation,
                    "resonator": b.resonator,
                    "inductance_nh": b.inductance_nh,
                    "capacitance_pf": b.capacitance_pf,
                }
                for b in elements.branches
            ],
            "source_impedance_ohm": elements.source_impedance_ohm,
            "load_impedance_ohm": elements.load_impedance_ohm,
        }
    if isinstance(elements, CoupledBpfNetwork):
        return {
            "type": "coupled_bpf",
            "coupling_caps_pf": list(elements.coupling_caps_pf),
            "node_caps_pf": list(elements.node_caps_pf),
            "node_inductors_nh": list(elements.node_inductors_nh),
            "z0_ohm": elements.z0_ohm,
        }
    if isinstance(elements, ComblineNetwork):
        return {
            "type": "combline",
            "transformer_cap_nf": elements.transformer_cap_nf,
            "odd_impedances_ohm": list(elements.odd_impedances_ohm),
            "even_impedances_ohm": list(elements.even_impedances_ohm),
            "theta0_rad": elements.theta0_rad,
        }
    if isinstance(elements, UwbCoefficients):
        return {
            "type": "uwb",
            "center_freq_ghz": elements.center_freq_ghz,
            "bandwidth_rad": elements.bandwidth_rad,
            "alpha": elements.alpha,
            "zeta": elements.zeta,
            "ripple_factor": elements.ripple_factor,
            "scale_a": elements.scale_a,
        }
    raise TypeError(f"unknown elements {type(elements).__name__}")


def _response_dict(resp: FrequencyResponse | None):
    if resp is None:
        return None
    return {
        "freq_ghz": list(resp.freq_ghz),
        "s21_db": list(resp.s21_db),
        "s11_db": list(resp.s11_db),
    }


def result_dict(result: DesignResult) -> dict:
    d = {
        "spec": spec_dict(result.spec),
        "order": result.order,
        "selectivity": result.selectivity,
        "ripple": None,
        "g_values": list(result.g_values.values) if result.g_values else None,
        "elements": _elements_dict(result.elements),
        "response_emulated": _response_dict(result.response_emulated),
        "response_simulated": _response_dict(result.response_simulated),
        "version": __version__,
    }
    if result.ripple is not None:
        d["ripple"] = {
            "reflection_coefficient": result.ripple.reflection_coefficient,
            "passband_ripple_db": result.ripple.passband_ripple_db,
            "ripple_factor": result.ripple.ripple_factor,
        }
    return d


def result_json(result: DesignResult) -> str:
    """The canonical JSON encoding (byte-stable across entry points)."""
    return _dump(result_dict(result)) + "\n"


def response_csv(result: DesignResult) -> str:
    """CSV of the swept response: header f_ghz,s21_db,s11_db, 6 decimals, LF.

    Emits the emulated route when present, otherwise the simulated one.
    """
    resp = result.response_emulated or result.response_simulated
    if resp is None:
        raise InvalidSpec(f"kind {result.spec.kind!r} produces no frequency response")
    lines = ["f_ghz,s21_db,s11_db"]
    for f, s21, s11 in zip(resp.freq_ghz, resp.s21_db, resp.s11_db):
        lines.append(f"{f:.6f},{s21:.6f},{s11:.6f}")
    return "\n".join(lines) + "\n"

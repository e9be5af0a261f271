"""Closed-form ("emulation") frequency responses: generalized Butterworth and
Chebyshev magnitude equations under the LP/HP/BP/BS frequency substitutions,
plus the UWB filtering-function response.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpec, SingularFrequency
from .network import DB_FLOOR, NUDGE_GHZ, FrequencyResponse, SweepGrid
from .spec import DesignSpec, selectivity
from .synthesis import filter_order, ripple_chain
from .uwb import UwbCoefficients


@dataclass(frozen=True)
class FrequencyMapping:
    """Frequency substitution taking a physical angular frequency to the
    lowpass prototype axis. BP/BS carry w0 = sqrt(w1*w2) and the bandwidth
    scaling a = w0/(w2-w1)."""

    kind: str
    cutoff: float = 0.0  # wc for lowpass/highpass
    w0: float = 0.0
    alpha: float = 0.0

    @classmethod
    def for_spec(cls, spec: DesignSpec) -> "FrequencyMapping":
        e = spec.band_edges_ghz
        if spec.kind == "lowpass":
            return cls("lowpass", cutoff=2 * math.pi * e[0])
        if spec.kind == "highpass":
            return cls("highpass", cutoff=2 * math.pi * e[1])
        if spec.kind in ("bandpass", "bandstop"):
            w1, w2 = 2 * math.pi * e[0], 2 * math.pi * e[1]
            w0 = math.sqrt(w1 * w2)
            return cls(spec.kind, w0=w0, alpha=w0 / (w2 - w1))
        raise InvalidSpec(f"no frequency mapping for kind {spec.kind!r}")


def map_frequency(mapping: FrequencyMapping, omega: float) -> float:
    """Prototype-axis image of omega (scalar form; sweeps use the array path)."""
    if omega <= 0:
        raise InvalidSpec("omega must be positive")
    if mapping.kind == "lowpass":
        return omega / mapping.cutoff
    if mapping.kind == "highpass":
        return -mapping.cutoff / omega
    bp = mapping.alpha * (omega / mapping.w0 - mapping.w0 / omega)
    if mapping.kind == "bandpass":
        return bp
    if bp == 0.0:
        raise SingularFrequency("bandstop mapping is unbounded at the center frequency")
    return -1.0 / bp


def _map_array(mapping: FrequencyMapping, w: np.ndarray) -> np.ndarray:
    if mapping.kind == "lowpass":
        return w / mapping.cutoff
    if mapping.kind == "highpass":
        return -mapping.cutoff / w
    bp = mapping.alpha * (w / mapping.w0 - mapping.w0 / w)
    if mapping.kind == "bandpass":
        return bp
    with np.errstate(divide="ignore"):
        return -1.0 / bp


def closed_form_power(family, order, ripple_factor, mapped_omega):
    """|S12|^2 at a mapped prototype frequency: 1/(1 + x^2N) for Butterworth,
    1/(1 + eps^2 T_N^2) for Chebyshev. Accepts scalars or arrays.

    |Omega| feeds the even power and the Chebyshev cos/cosh branch choice,
    so the substitutions' sign is immaterial.
    """
    if order < 1:
        raise InvalidSpec("order must be at least 1")
    x = np.abs(np.asarray(mapped_omega, dtype=np.float64))
    if family == "butterworth":
        return 1.0 / (1.0 + x ** (2 * order))
    if family != "chebyshev":
        raise InvalidSpec(f"unknown family {family!r}")
    if ripple_factor is None or ripple_factor <= 0:
        raise InvalidSpec("chebyshev requires a positive ripple factor")
    tn = _chebyshev_tn(order, x)
    return 1.0 / (1.0 + (ripple_factor * tn) ** 2)


def _chebyshev_tn(order: int, x: np.ndarray) -> np.ndarray:
    tn = np.empty_like(x)
    inside = x <= 1.0
    tn[inside] = np.cos(order * np.arccos(x[inside]))
    tn[~inside] = np.cosh(order * np.arccosh(x[~inside]))
    return tn


def _power_pair_db(power, complement, db_floor):
    with np.errstate(divide="ignore"):
        s21 = 10.0 * np.log10(power)
        s11 = 10.0 * np.log10(complement)
    s21 = np.minimum(np.maximum(np.where(np.isfinite(s21), s21, db_floor), db_floor), 0.0)
    s11 = np.minimum(np.maximum(np.where(np.isfinite(s11), s11, db_floor), db_floor), 0.0)
    return s21, s11


def sweep_closed_form(
    spec: DesignSpec, grid: SweepGrid, db_floor: float = DB_FLOOR
) -> FrequencyResponse:
    """Pointwise map_frequency + closed_form_power over the grid.

    The reflected power is computed analytically (t/(1+t) with t the shape
    term) rather than as 1 - |S12|^2, to keep precision near 0 dB.
    """
    spec.validate()
    grid.validate()
    s = selectivity(spec)
    order = filter_order(spec.family, spec.insertion_loss_db, spec.return_loss_db, s)
    eps = ripple_chain(spec.return_loss_db).ripple_factor if spec.family == "chebyshev" else None
    mapping = FrequencyMapping.for_spec(spec)

    f = grid.frequencies()
    w = 2.0 * math.pi * f
    x = np.abs(_map_array(mapping, w))
    # Bandstop center maps to infinity; nudge the frequency, not the output.
    bad = ~np.isfinite(x)
    if bad.any():
        x = x.copy()
        x[bad] = np.abs(_map_array(mapping, 2.0 * math.pi * (f[bad] + NUDGE_GHZ)))

    if spec.family == "butterworth":
        t = x ** (2 * order)
    else:
        t = (eps * _chebyshev_tn(order, x)) ** 2
    with np.errstate(invalid="ignore", over="ignore"):
        power = 1.0 / (1.0 + t)
        complement = t / (1.0 + t)
    # t overflows to inf deep in the stopband: all power is reflected.
    overflow = ~np.isfinite(t)
    power[overflow] = 0.0
    complement[overflow] = 1.0

    s21, s11 = _power_pair_db(power, complement, db_floor)
    return FrequencyResponse(
        freq_ghz=tuple(f.tolist()),
        s21_db=tuple(s21.tolist()),
        s11_db=tuple(s11.tolist()),
    )


def uwb_response(
    coeffs: UwbCoefficients, grid: SweepGrid, db_floor: float = DB_FLOOR
) -> FrequencyResponse:
    """UWB filtering-function response: T = A*Tbar(theta) with
    theta = (pi/2)*f/fc; s21 = -10log10(1 + T^2), s11 = 20log10|T| - 10log10(1 + T^2).
    """
    grid.validate()
    f = grid.frequencies()
    theta = (math.pi / 2.0) * f / coeffs.center_freq_ghz

    def tbar(th):
        cos2 = np.cos(th) ** 2
        return (cos2 * cos2 + coeffs.alpha * cos2 + coeffs.zeta) / np.sin(th)

    with np.errstate(divide="ignore", invalid="ignore"):
        t = coeffs.scale_a * tbar(theta)
    bad = ~np.isfinite(t)
    if bad.any():
        th = (math.pi / 2.0) * (f[bad] + NUDGE_GHZ) / coeffs.center_freq_ghz
        t = t.copy()
        t[bad] = coeffs.scale_a * tbar(th)

    t2 = t * t
    with np.errstate(divide="ignore", over="ignore"):
        power = 1.0 / (1.0 + t2)
        complement = t2 / (1.0 + t2)
    overflow = ~np.isfinite(t2)
    power[overflow] = 0.0
    complement[overflow] = 1.0

    s21, s11 = _power_pair_db(power, complement, db_floor)
    return FrequencyResponse(
        freq_ghz=tuple(f.tolist()),
        s21_db=tuple(s21.tolist()),
        s11_db=tuple(s11.tolist()),
    )

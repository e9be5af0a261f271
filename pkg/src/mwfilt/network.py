"""Two-port ABCD machinery: branch matrices, cascading, ABCD -> S conversion
and frequency sweeps over ladder and coupled networks (the element-level
"simulation" route).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernel import BACKEND, sweep_kernel
from .coupled import CoupledBpfNetwork
from .errors import EmptyNetwork, InvalidSpec, SingularConversion, SingularFrequency
from .synthesis import Branch, LadderNetwork

DB_FLOOR = -120.0
NUDGE_GHZ = 1e-9

_RES_CODE = {"single_L": 0, "single_C": 1, "series_LC": 2, "shunt_LC": 3}


@dataclass(frozen=True)
class AbcdMatrix:
    a: complex
    b: complex
    c: complex
    d: complex

    @property
    def determinant(self) -> complex:
        return self.a * self.d - self.b * self.c


@dataclass(frozen=True)
class SweepGrid:
    start_ghz: float
    stop_ghz: float
    step_ghz: float

    def validate(self) -> None:
        if self.step_ghz <= 0:
            raise InvalidSpec("grid step must be positive")
        if not 0 < self.start_ghz <= self.stop_ghz:
            raise InvalidSpec("grid requires 0 < start <= stop")

    @property
    def points(self) -> int:
        return int(math.floor((self.stop_ghz - self.start_ghz) / self.step_ghz + 1e-9)) + 1

    def frequencies(self) -> np.ndarray:
        return self.start_ghz + self.step_ghz * np.arange(self.points, dtype=np.float64)


@dataclass(frozen=True)
class FrequencyResponse:
    freq_ghz: tuple[float, ...]
    s21_db: tuple[float, ...]
    s11_db: tuple[float, ...]


def branch_abcd(branch: Branch, omega: float) -> AbcdMatrix:
    """ABCD matrix of a single reactive branch at angular frequency omega
    (rad * GHz, i.e. omega = 2*pi*f with f in GHz)."""
    if omega <= 0:
        raise InvalidSpec("omega must be positive")
    ln = branch.inductance_nh
    cn = branch.capacitance_pf / 1000.0
    res = branch.resonator
    if res == "single_L":
        x = omega * ln
    elif res == "single_C":
        x = -1.0 / (omega * cn)
    elif res == "series_LC":
        x = omega * ln - 1.0 / (omega * cn)
    elif res == "shunt_LC":
        den = omega * cn - 1.0 / (omega * ln)
        if den == 0.0:
            raise SingularFrequency(f"parallel LC resonates exactly at omega={omega}")
        x = -1.0 / den
    else:
        raise InvalidSpec(f"unknown resonator {res!r}")
    if branch.orientation == "series":
        return AbcdMatrix(1.0, 1j * x, 0.0, 1.0)
    if x == 0.0:
        raise SingularFrequency(f"shunt branch is a short at omega={omega}")
    return AbcdMatrix(1.0, 0.0, -1j / x, 1.0)


def cascade_abcd(matrices) -> AbcdMatrix:
    """Left-to-right product, source side first."""
    matrices = list(matrices)
    if not matrices:
        raise EmptyNetwork("cannot cascade an empty network")
    a, b, c, d = 1.0 + 0j, 0j, 0j, 1.0 + 0j
    for m in matrices:
        a, b, c, d = (
            a * m.a + b * m.c,
            a * m.b + b * m.d,
            c * m.a + d * m.c,
            c * m.b + d * m.d,
        )
    return AbcdMatrix(a, b, c, d)


def abcd_to_s(t: AbcdMatrix, z0_ohm: float, zl_ohm: float | None = None):
    """Convert to (S11, S21) for real source impedance z0 and load zl
    (defaults to z0, the matched form S21 = 2/(A + B/Z0 + C*Z0 + D))."""
    if z0_ohm <= 0:
        raise InvalidSpec("z0 must be positive")
    rs = z0_ohm
    rl = z0_ohm if zl_ohm is None else zl_ohm
    den = t.a * rl + t.b + t.c * rs * rl + t.d * rs
    if abs(den) < 1e-30:
        raise SingularConversion("ABCD to S denominator vanished")
    s21 = 2.0 * math.sqrt(rs * rl) / den
    s11 = (t.a * rl + t.b - t.c * rs * rl - t.d * rs) / den
    return s11, s21


def _branch_arrays(network):
    if isinstance(network, LadderNetwork):
        branches = network.branches
        rs = network.source_impedance_ohm
        rl = network.load_impedance_ohm
    elif isinstance(network, CoupledBpfNetwork):
        branches = coupled_branches(network)
        rs = rl = network.z0_ohm
    else:
        raise InvalidSpec(f"cannot sweep a {type(network).__name__}")
    if not branches:
        raise EmptyNetwork("network has no branches")
    codes = np.array(
        [(0 if b.orientation == "series" else 4) + _RES_CODE[b.resonator] for b in branches],
        dtype=np.int32,
    )
    l_nh = np.array([b.inductance_nh for b in branches], dtype=np.float64)
    c_nf = np.array([b.capacitance_pf / 1000.0 for b in branches], dtype=np.float64)
    return codes, l_nh, c_nf, rs, rl


def coupled_branches(network: CoupledBpfNetwork) -> tuple[Branch, ...]:
    """Expand a coupled BPF into its ladder: series coupling capacitors
    alternating with shunt parallel-LC resonator nodes."""
    branches = [Branch("series", "single_C", 0.0, network.coupling_caps_pf[0])]
    for r in range(network.order):
        branches.append(
            Branch("shunt", "shunt_LC", network.node_inductors_nh[r], network.node_caps_pf[r])
        )
        branches.append(Branch("series", "single_C", 0.0, network.coupling_caps_pf[r + 1]))
    return tuple(branches)


def sweep_network(network, grid: SweepGrid, db_floor: float = DB_FLOOR) -> FrequencyResponse:
    """Sweep a ladder or coupled network over the grid.

    Grid points where a branch immittance is singular are re-evaluated at the
    point nudged by +1e-9 GHz, keeping the emitted grid rectangular.
    """
    grid.validate()
    codes, l_nh, c_nf, rs, rl = _branch_arrays(network)
    f = grid.frequencies()
    s21, s11, _ = sweep_kernel(codes, l_nh, c_nf, f, rs, rl)

    bad = ~(np.isfinite(s21) & np.isfinite(s11))
    if bad.any():
        s21_fix, s11_fix, _ = sweep_kernel(codes, l_nh, c_nf, f[bad] + NUDGE_GHZ, rs, rl)
        s21 = s21.copy()
        s11 = s11.copy()
        s21[bad] = s21_fix
        s11[bad] = s11_fix

    return FrequencyResponse(
        freq_ghz=tuple(f.tolist()),
        s21_db=tuple(magnitude_db(s21, db_floor).tolist()),
        s11_db=tuple(magnitude_db(s11, db_floor).tolist()),
    )


# Backwards-friendly alias matching the operation name.
sweep_ladder = sweep_network


def magnitude_db(s: np.ndarray, db_floor: float = DB_FLOOR) -> np.ndarray:
    """20*log10|s| clamped to the floor and to 0 dB from above (passive
    network; tiny positive overshoot is numerical noise)."""
    mag = np.abs(np.asarray(s))
    with np.errstate(divide="ignore"):
        db = 20.0 * np.log10(mag)
    db = np.maximum(db, db_floor)
    return np.minimum(db, 0.0)


def reflection_db_from_transmission(s21: np.ndarray, db_floor: float = DB_FLOOR) -> np.ndarray:
    """|S11| in dB via 1 - |S21|^2, the subtraction form. Less accurate near
    0 dB than the direct conversion; kept for cross-checking."""
    p = 1.0 - np.abs(np.asarray(s21)) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        db = 10.0 * np.log10(np.abs(p))
    db = np.where(np.isfinite(db), db, db_floor)
    return np.minimum(np.maximum(db, db_floor), 0.0)


def kernel_backend() -> str:
    return BACKEND

"""Design specification: the user-facing filter requirements and their validation."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvalidSpec

FAMILIES = ("butterworth", "chebyshev")
KINDS = (
    "lowpass",
    "highpass",
    "bandpass",
    "bandstop",
    "coupled_bandpass",
    "combline",
    "uwb_bandpass",
)
TOPOLOGIES = ("shunt_first", "series_first")

# Microwave frequency range in GHz.
FREQ_MIN_GHZ = 0.3
FREQ_MAX_GHZ = 300.0

# FCC UWB band in GHz.
UWB_MIN_GHZ = 3.1
UWB_MAX_GHZ = 10.6

# Number of band-edge parameters each kind expects.
_EDGE_COUNT = {
    "lowpass": 2,
    "highpass": 2,
    "bandpass": 3,
    "bandstop": 4,
    "coupled_bandpass": 3,
    "combline": 2,
    "uwb_bandpass": 2,
}


@dataclass(frozen=True)
class DesignSpec:
    """Filter requirements.

    ``band_edges_ghz`` semantics per kind:

    - lowpass:          (f_p, f_s)
    - highpass:         (f_s, f_p)          with f_s < f_p
    - bandpass:         (f1, f2, f_s_high)
    - bandstop:         (f1, f2, f_s1, f_s2)
    - coupled_bandpass: (f0, bw_pass, bw_stop)
    - combline:         (f0, bw)            plus an explicit ``order``
    - uwb_bandpass:     (f1, f2)            within the FCC 3.1-10.6 GHz band
    """

    family: str
    kind: str
    insertion_loss_db: float
    return_loss_db: float
    band_edges_ghz: tuple[float, ...]
    z0_ohm: float = 50.0
    topology: str = "shunt_first"
    order: int | None = None  # combline only

    def __post_init__(self):
        object.__setattr__(self, "band_edges_ghz", tuple(float(x) for x in self.band_edges_ghz))

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidSpec(f"family must be one of {FAMILIES}")
        if self.kind not in KINDS:
            raise InvalidSpec(f"kind must be one of {KINDS}")
        if self.topology not in TOPOLOGIES:
            raise InvalidSpec(f"topology must be one of {TOPOLOGIES}")
        if not self.z0_ohm > 0:
            raise InvalidSpec("z0 must be positive")
        if self.return_loss_db <= 0:
            raise InvalidSpec("lr must be positive")

        edges = self.band_edges_ghz
        want = _EDGE_COUNT[self.kind]
        if len(edges) != want:
            raise InvalidSpec(f"{self.kind} requires {want} band parameters, got {len(edges)}")
        if any(not math.isfinite(x) for x in edges):
            raise InvalidSpec("band parameters must be finite")

        if self.kind in ("lowpass", "highpass", "bandpass", "bandstop", "coupled_bandpass"):
            if self.insertion_loss_db <= self.return_loss_db:
                raise InvalidSpec("la must exceed lr")

        if self.kind == "lowpass":
            fp, fs = edges
            self._check_range(fp, "fp")
            self._check_range(fs, "fs")
            if fs <= fp:
                raise InvalidSpec("fs must exceed fp")
        elif self.kind == "highpass":
            fs, fp = edges
            self._check_range(fs, "fs")
            self._check_range(fp, "fp")
            if fp <= fs:
                raise InvalidSpec("fp must exceed fs")
        elif self.kind == "bandpass":
            f1, f2, fsh = edges
            self._check_range(f1, "f1")
            self._check_range(fsh, "fs")
            if f2 <= f1:
                raise InvalidSpec("f2 must exceed f1")
            if fsh <= f2:
                raise InvalidSpec("fs must exceed f2")
        elif self.kind == "bandstop":
            f1, f2, fs1, fs2 = edges
            self._check_range(f1, "f1")
            self._check_range(f2, "f2")
            if not (f1 < fs1 < fs2 < f2):
                raise InvalidSpec("bandstop requires f1 < fs1 < fs2 < f2")
        elif self.kind == "coupled_bandpass":
            f0, bwp, bws = edges
            if bwp <= 0:
                raise InvalidSpec("bw must be positive")
            if bws <= bwp:
                raise InvalidSpec("bws must exceed bw")
            self._check_range(f0 - bwp / 2, "f0 - bw/2")
            self._check_range(f0 + bwp / 2, "f0 + bw/2")
        elif self.kind == "combline":
            f0, bw = edges
            self._check_range(f0, "f0")
            if bw <= 0:
                raise InvalidSpec("bw must be positive")
            if self.order is None or self.order < 2:
                raise InvalidSpec("combline requires an explicit order >= 2")
        elif self.kind == "uwb_bandpass":
            f1, f2 = edges
            if f1 < UWB_MIN_GHZ:
                raise InvalidSpec(f"f1 must be at least {UWB_MIN_GHZ} GHz")
            if f2 > UWB_MAX_GHZ:
                raise InvalidSpec(f"f2 must not exceed {UWB_MAX_GHZ} GHz")
            if f2 <= f1:
                raise InvalidSpec("f2 must exceed f1")

    @staticmethod
    def _check_range(f: float, name: str) -> None:
        if not (FREQ_MIN_GHZ <= f <= FREQ_MAX_GHZ):
            raise InvalidSpec(f"{name} must lie in [{FREQ_MIN_GHZ}, {FREQ_MAX_GHZ}] GHz")


def selectivity(spec: DesignSpec) -> float:
    """Stopband-to-passband edge ratio S > 1 governing the required order.

    Angular and plain frequencies give the same ratio, so band edges are
    used directly in GHz.
    """
    spec.validate()
    e = spec.band_edges_ghz
    if spec.kind == "lowpass":
        fp, fs = e
        s = fs / fp
    elif spec.kind == "highpass":
        fs, fp = e
        s = fp / fs
    elif spec.kind == "bandpass":
        f1, f2, fsh = e
        s = (2 * fsh - f2 - f1) / (f2 - f1)
    elif spec.kind == "bandstop":
        f1, f2, fs1, fs2 = e
        s = (f2 - f1) / (fs2 - fs1)
    elif spec.kind == "coupled_bandpass":
        _, bwp, bws = e
        s = bws / bwp
    else:
        raise InvalidSpec(f"selectivity is undefined for kind {spec.kind!r}")
    if s <= 1:
        raise InvalidSpec("selectivity must exceed 1; widen the stopband margin")
    return s

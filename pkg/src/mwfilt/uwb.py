"""Fourth-order ultra-wideband bandpass filtering function.

The response is the Chebyshev-normalized quartic-in-cos(theta) function
T(theta) = A * (cos^4 + alpha*cos^2 + zeta)/sin(theta) with A = eps/zeta,
evaluated over electrical length theta = (pi/2) * f/fc.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InfeasibleDesign, InvalidSpec
from .spec import UWB_MAX_GHZ, UWB_MIN_GHZ
from .synthesis import ripple_chain

UWB_ORDER = 4


@dataclass(frozen=True)
class UwbCoefficients:
    center_freq_ghz: float
    bandwidth_rad: float
    alpha: float
    zeta: float
    ripple_factor: float
    scale_a: float  # A = eps/zeta


def uwb_design(f1_ghz: float, f2_ghz: float, return_loss_db: float) -> UwbCoefficients:
    if f1_ghz < UWB_MIN_GHZ:
        raise InvalidSpec(f"f1 must be at least {UWB_MIN_GHZ} GHz")
    if f2_ghz > UWB_MAX_GHZ:
        raise InvalidSpec(f"f2 must not exceed {UWB_MAX_GHZ} GHz")
    if f2_ghz <= f1_ghz:
        raise InvalidSpec("f2 must exceed f1")
    eps = ripple_chain(return_loss_db).ripple_factor

    fc = 0.5 * (f1_ghz + f2_ghz)
    bw = (math.pi / 2.0) * (f2_ghz - f1_ghz) / fc
    half = bw / 2.0
    alpha = 0.75 * (math.cos(half) + 1.0 / 3.0) ** 2 - 4.0 / 3.0
    zeta = 0.25 * math.sin(half) ** 2 * (1.0 - math.cos(half))

    if not alpha * alpha - 4.0 * zeta > 0:
        raise InfeasibleDesign("alpha^2 - 4*zeta > 0 violated; widen the band")
    if not alpha + zeta + 1.0 > 0:
        raise InfeasibleDesign("alpha + zeta + 1 > 0 violated")
    if zeta <= 0:
        raise InfeasibleDesign("zeta must be positive; the band is degenerate")

    return UwbCoefficients(
        center_freq_ghz=fc,
        bandwidth_rad=bw,
        alpha=alpha,
        zeta=zeta,
        ripple_factor=eps,
        scale_a=eps / zeta,
    )

"""Combline bandpass element synthesis: even/odd-mode line impedances and
the input/output matching capacitor.

Element values only; the resonator electrical length is fixed at 50 degrees
for optimum response. No frequency response is produced for this topology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidSpec, NonPhysical
from .synthesis import TWO_PI, ripple_chain

THETA0_RAD = math.radians(50.0)


@dataclass(frozen=True)
class ComblineNetwork:
    transformer_cap_nf: float
    odd_impedances_ohm: tuple[float, ...]  # Z_odd(0) .. Z_odd(N+1)
    even_impedances_ohm: tuple[float, ...]  # N+1 coupling-gap impedances
    theta0_rad: float


def synthesize_combline(
    return_loss_db: float,
    f0_ghz: float,
    bw_ghz: float,
    order: int,
    z0_ohm: float = 50.0,
) -> ComblineNetwork:
    if bw_ghz <= 0:
        raise InvalidSpec("bw must be positive")
    if order < 2:
        raise InvalidSpec("order must be at least 2")
    if z0_ohm <= 0:
        raise InvalidSpec("z0 must be positive")
    n = order
    eps = ripple_chain(return_loss_db).ripple_factor

    w0 = TWO_PI * f0_ghz
    dw = TWO_PI * bw_ghz
    t0 = math.tan(THETA0_RAD)

    # Bandwidth scaling for the combline resonator slope, plus the matching
    # constant beta = 1/(w0*tan(theta0)).
    alpha = 2.0 * w0 * t0 / (dw * (t0 + THETA0_RAD * (1.0 + t0 * t0)))
    beta = 1.0 / (w0 * t0)

    eta = math.sinh(math.asinh(1.0 / eps) / n)
    cl = [(2.0 / eta) * math.sin((2 * r - 1) * math.pi / (2 * n)) for r in range(1, n + 1)]
    k = [math.sqrt(eta * eta + math.sin(r * math.pi / n) ** 2) / eta for r in range(1, n)]

    # Node admittance normalized to Yrr = 1.
    nr = [math.sqrt(alpha * c * t0) for c in cl]
    y_gap = [k[r] * t0 / (nr[r] * nr[r + 1]) for r in range(n - 1)]

    y_node = [0.0] * (n + 2)  # Y0, Y1..YN, Y_{N+1}
    y0 = 1.0 - 1.0 / (nr[0] * math.cos(THETA0_RAD))
    y_node[0] = y0
    y_node[1] = 1.0 - y_gap[0] + 1.0 / nr[0] ** 2 - 1.0 / (nr[0] * math.cos(THETA0_RAD))
    for r in range(2, n):
        y_node[r] = 1.0 - y_gap[r - 2] - y_gap[r - 1]
    y_node[n] = y_node[1]
    y_node[n + 1] = y0

    y01 = 1.0 / (nr[0] * math.cos(THETA0_RAD))
    y_even = [y01] + y_gap + [y01]

    if any(y <= 0 for y in y_node) or any(y <= 0 for y in y_even):
        raise NonPhysical("a line admittance came out non-positive; narrow the bandwidth")

    return ComblineNetwork(
        transformer_cap_nf=beta / z0_ohm,
        odd_impedances_ohm=tuple(z0_ohm / y for y in y_node),
        even_impedances_ohm=tuple(z0_ohm / y for y in y_even),
        theta0_rad=THETA0_RAD,
    )

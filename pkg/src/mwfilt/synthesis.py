"""Lowpass prototype synthesis: ripple chain, filter order, g-values,
element scaling and the LP -> HP/BP/BS element transforms.

Units: frequencies in GHz with omega = 2*pi*f, so element formulas come out
in nH and nF directly; capacitances are reported in pF (x1000).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidSpec

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RippleChain:
    """Reflection coefficient, passband ripple and ripple factor, linked by
    Gamma = 10^(-LR/20), LAr = -10*log10(1 - Gamma^2), eps = sqrt(10^(LAr/10) - 1).
    """

    reflection_coefficient: float
    passband_ripple_db: float
    ripple_factor: float


def ripple_chain(return_loss_db: float) -> RippleChain:
    if return_loss_db <= 0:
        raise InvalidSpec("lr must be positive")
    gamma = 10.0 ** (-return_loss_db / 20.0)
    lar = -10.0 * math.log10(1.0 - gamma * gamma)
    eps = math.sqrt(10.0 ** (0.1 * lar) - 1.0)
    return RippleChain(gamma, lar, eps)


def filter_order(
    family: str,
    insertion_loss_db: float,
    return_loss_db: float,
    selectivity: float,
) -> int:
    """Minimum order meeting the loss targets at the given selectivity.

    Rounds up, except that an exactly integral degree is kept as-is.
    """
    if return_loss_db <= 0:
        raise InvalidSpec("lr must be positive")
    if insertion_loss_db <= return_loss_db:
        raise InvalidSpec("la must exceed lr")
    if selectivity <= 1:
        raise InvalidSpec("selectivity must exceed 1")
    s = selectivity
    if family == "butterworth":
        degree = (insertion_loss_db + return_loss_db) / (20.0 * math.log10(s))
    elif family == "chebyshev":
        degree = (insertion_loss_db + return_loss_db + 6.0) / (
            20.0 * math.log10(s + math.sqrt(s * s - 1.0))
        )
    else:
        raise InvalidSpec(f"unknown family {family!r}")
    n = round(degree)
    if n < degree:
        n += 1
    return max(int(n), 1)


@dataclass(frozen=True)
class PrototypeGValues:
    """Normalized lowpass prototype coefficients g0..g_{N+1}."""

    order: int
    values: tuple[float, ...]  # length order + 2, g0 first

    def __post_init__(self):
        assert len(self.values) == self.order + 2


def prototype_g_values(
    family: str, order: int, passband_ripple_db: float | None = None
) -> PrototypeGValues:
    if order < 1:
        raise InvalidSpec("order must be at least 1")
    n = order
    if family == "butterworth":
        g = [1.0]
        g += [2.0 * math.sin((2 * k - 1) * math.pi / (2 * n)) for k in range(1, n + 1)]
        g.append(1.0)
        return PrototypeGValues(n, tuple(g))
    if family != "chebyshev":
        raise InvalidSpec(f"unknown family {family!r}")

    if passband_ripple_db is None or passband_ripple_db <= 0:
        raise InvalidSpec("chebyshev prototype requires a positive passband ripple")
    lar = passband_ripple_db
    # beta = ln(coth(LAr/17.37)); 17.37 is the rounded form of 40/ln(10),
    # used exactly here so the ladder reproduces the closed-form response.
    beta = math.log(1.0 / math.tanh(lar * math.log(10.0) / 40.0))
    gamma = math.sinh(beta / (2 * n))
    a = [math.sin((2 * k - 1) * math.pi / (2 * n)) for k in range(1, n + 1)]
    b = [gamma * gamma + math.sin(k * math.pi / n) ** 2 for k in range(1, n + 1)]
    g = [1.0, 2.0 * a[0] / gamma]
    for k in range(2, n + 1):
        g.append(4.0 * a[k - 2] * a[k - 1] / (b[k - 2] * g[k - 1]))
    if n % 2 == 1:
        g.append(1.0)
    else:
        g.append(1.0 / math.tanh(beta / 4.0) ** 2)
    return PrototypeGValues(n, tuple(g))


# --- ladder networks -------------------------------------------------------

SERIES, SHUNT = "series", "shunt"
SINGLE_L, SINGLE_C, SERIES_LC, SHUNT_LC = "single_L", "single_C", "series_LC", "shunt_LC"


@dataclass(frozen=True)
class Branch:
    orientation: str  # series | shunt
    resonator: str  # single_L | single_C | series_LC | shunt_LC
    inductance_nh: float = 0.0
    capacitance_pf: float = 0.0


@dataclass(frozen=True)
class LadderNetwork:
    branches: tuple[Branch, ...]
    source_impedance_ohm: float
    load_impedance_ohm: float


def scale_lowpass_ladder(
    g: PrototypeGValues,
    cutoff_ghz: float,
    z0_ohm: float = 50.0,
    topology: str = "shunt_first",
) -> LadderNetwork:
    """Denormalize the prototype to a lowpass LC ladder.

    shunt_first: branch 1 is a shunt capacitor C1 = g1/(Z0*wc), branch 2 a
    series inductor L2 = g2*Z0/wc, alternating; series_first is the mirror.
    """
    if z0_ohm <= 0:
        raise InvalidSpec("z0 must be positive")
    if cutoff_ghz <= 0:
        raise InvalidSpec("cutoff must be positive")
    wc = TWO_PI * cutoff_ghz
    first_shunt = topology == "shunt_first"
    branches = []
    for k in range(1, g.order + 1):
        gk = g.values[k]
        shunt = (k % 2 == 1) == first_shunt
        if shunt:
            branches.append(Branch(SHUNT, SINGLE_C, 0.0, 1000.0 * gk / (z0_ohm * wc)))
        else:
            branches.append(Branch(SERIES, SINGLE_L, gk * z0_ohm / wc, 0.0))
    return LadderNetwork(
        branches=tuple(branches),
        source_impedance_ohm=z0_ohm,
        load_impedance_ohm=_load_impedance(g.values[-1], z0_ohm, branches[-1]),
    )


def _load_impedance(g_last: float, z0_ohm: float, last_branch: Branch) -> float:
    # g_{N+1} terminates the ladder as a resistance when the adjacent element
    # is a shunt one, and as a conductance when it is a series one.
    if last_branch.orientation == SHUNT:
        return g_last * z0_ohm
    return z0_ohm / g_last


def transform_ladder(
    g: PrototypeGValues,
    kind: str,
    band_edges_ghz: tuple[float, ...],
    z0_ohm: float = 50.0,
    topology: str = "shunt_first",
) -> LadderNetwork:
    """Build the HP/BP/BS ladder directly from the prototype g-values.

    highpass: series L -> series C = 1/(g*wc*Z0), shunt C -> shunt L = Z0/(g*wc).
    bandpass (w0 = sqrt(w1*w2), a = w0/(w2-w1)):
        series L -> series LC   L = a*g*Z0/w0,   C = 1/(a*w0*g*Z0)
        shunt  C -> parallel LC C = a*g/(Z0*w0), L = Z0/(a*w0*g)
    bandstop:
        series L -> parallel LC in the series arm, L = g*Z0/(a*w0), C = a/(w0*g*Z0)
        shunt  C -> series LC in the shunt arm,    L = a*Z0/(w0*g), C = g/(a*w0*Z0)
    """
    if kind == "lowpass":
        return scale_lowpass_ladder(g, band_edges_ghz[0], z0_ohm, topology)
    if z0_ohm <= 0:
        raise InvalidSpec("z0 must be positive")
    first_shunt = topology == "shunt_first"
    branches = []
    if kind == "highpass":
        _, fp = band_edges_ghz
        wc = TWO_PI * fp
        for k in range(1, g.order + 1):
            gk = g.values[k]
            shunt = (k % 2 == 1) == first_shunt
            if shunt:
                branches.append(Branch(SHUNT, SINGLE_L, z0_ohm / (gk * wc), 0.0))
            else:
                branches.append(Branch(SERIES, SINGLE_C, 0.0, 1000.0 / (gk * wc * z0_ohm)))
    elif kind in ("bandpass", "bandstop"):
        f1, f2 = band_edges_ghz[0], band_edges_ghz[1]
        w0 = TWO_PI * math.sqrt(f1 * f2)
        a = math.sqrt(f1 * f2) / (f2 - f1)
        for k in range(1, g.order + 1):
            gk = g.values[k]
            shunt = (k % 2 == 1) == first_shunt
            if kind == "bandpass":
                if shunt:
                    branches.append(
                        Branch(SHUNT, SHUNT_LC, z0_ohm / (a * w0 * gk), 1000.0 * a * gk / (z0_ohm * w0))
                    )
                else:
                    branches.append(
                        Branch(SERIES, SERIES_LC, a * gk * z0_ohm / w0, 1000.0 / (a * w0 * gk * z0_ohm))
                    )
            else:
                if shunt:
                    branches.append(
                        Branch(SHUNT, SERIES_LC, a * z0_ohm / (w0 * gk), 1000.0 * gk / (a * w0 * z0_ohm))
                    )
                else:
                    branches.append(
                        Branch(SERIES, SHUNT_LC, gk * z0_ohm / (a * w0), 1000.0 * a / (w0 * gk * z0_ohm))
                    )
    else:
        raise InvalidSpec(f"no ladder transform for kind {kind!r}")
    return LadderNetwork(
        branches=tuple(branches),
        source_impedance_ohm=z0_ohm,
        load_impedance_ohm=_load_impedance(g.values[-1], z0_ohm, branches[-1]),
    )

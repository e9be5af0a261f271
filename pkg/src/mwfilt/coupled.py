"""Capacitively coupled Chebyshev bandpass filter synthesis.

Shunt LC resonator nodes joined by series coupling capacitors; element
values follow the eta / C_r / K_{r,r+1} chain with alpha = f0/BW_pass.
Reported units: pF for capacitors, nH for inductors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InfeasibleDesign, NonPhysical
from .spec import DesignSpec, selectivity
from .synthesis import TWO_PI, filter_order, ripple_chain


@dataclass(frozen=True)
class CoupledBpfNetwork:
    """Source-to-load element values of the coupled-resonator topology.

    coupling_caps_pf has N+1 entries (C01 .. C_{N,N+1}); node_caps_pf and
    node_inductors_nh have N entries each.
    """

    order: int
    coupling_caps_pf: tuple[float, ...]
    node_caps_pf: tuple[float, ...]
    node_inductors_nh: tuple[float, ...]
    z0_ohm: float


def synthesize_coupled_bpf(spec: DesignSpec) -> CoupledBpfNetwork:
    spec.validate()
    f0, bwp, _ = spec.band_edges_ghz
    s = selectivity(spec)
    n = filter_order("chebyshev", spec.insertion_loss_db, spec.return_loss_db, s)
    if n < 2:
        n = 2
    chain = ripple_chain(spec.return_loss_db)
    eps = chain.ripple_factor

    alpha = f0 / bwp
    if alpha <= 1:
        raise InfeasibleDesign("pass bandwidth must be narrower than the center frequency (alpha > 1)")
    w0 = TWO_PI * f0

    eta = math.sinh(math.asinh(1.0 / eps) / n)
    # The chain is symmetric under r -> n+1-r; compute the first half and
    # mirror so the symmetry holds bit-for-bit, not merely to rounding.
    c = [(2.0 / eta) * math.sin((2 * r - 1) * math.pi / (2 * n)) for r in range(1, n + 1)]
    k = [math.sqrt(eta * eta + math.sin(r * math.pi / n) ** 2) / eta for r in range(1, n)]
    for i in range(len(c) // 2):
        c[-1 - i] = c[i]
    for i in range(len(k) // 2):
        k[-1 - i] = k[i]

    end_cap = 1.0 / (w0 * math.sqrt(alpha - 1.0))
    coupling = [end_cap] + [k[r] / (alpha * w0) for r in range(n - 1)] + [end_cap]

    node_caps = []
    for r in range(1, n + 1):
        value = c[r - 1] / w0
        if r == 1:
            value -= math.sqrt(alpha - 1.0) / (w0 * alpha) + coupling[1]
        elif r == n:
            value -= math.sqrt(alpha - 1.0) / (w0 * alpha) + coupling[n - 1]
        else:
            value -= coupling[r - 1] + coupling[r]
        node_caps.append(value)
    node_inductors = [1.0 / (w0 * c[r - 1]) for r in range(1, n + 1)]

    if any(v <= 0 for v in node_caps):
        raise NonPhysical("a node capacitance came out non-positive; widen the pass bandwidth")

    z0 = spec.z0_ohm
    return CoupledBpfNetwork(
        order=n,
        coupling_caps_pf=tuple(1000.0 * v / z0 for v in coupling),
        node_caps_pf=tuple(1000.0 * v / z0 for v in node_caps),
        node_inductors_nh=tuple(v * z0 for v in node_inductors),
        z0_ohm=z0,
    )

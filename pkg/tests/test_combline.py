import math

import pytest

from mwfilt import InvalidSpec, synthesize_combline

# Frozen from an independent high-precision (mpmath) evaluation of the
# admittance chain for N=4, f0=2 GHz, BW=0.2 GHz, LR=20 dB, Z0=50.
GOLDEN_CAP_NF = 0.0013354685405
GOLDEN_ZODD = [110.9186780159, 111.3105094175, 64.3696472160, 64.3696472160, 111.3105094175, 110.9186780159]
GOLDEN_ZEVEN = [91.0383166777, 396.1401318456, 515.3660446343, 396.1401318456, 91.0383166777]


class TestCombline:
    def reference(self):
        return synthesize_combline(20.0, 2.0, 0.2, 4, 50.0)

    def test_golden_values(self):
        net = self.reference()
        assert net.transformer_cap_nf == pytest.approx(GOLDEN_CAP_NF, rel=1e-9)
        assert list(net.odd_impedances_ohm) == pytest.approx(GOLDEN_ZODD, rel=1e-9)
        assert list(net.even_impedances_ohm) == pytest.approx(GOLDEN_ZEVEN, rel=1e-9)

    def test_theta0_fixed(self):
        assert self.reference().theta0_rad == pytest.approx(math.radians(50.0), rel=1e-15)

    def test_boundary_identity(self):
        # Y0 + Y01 = 1 by construction, so Z0/Zodd[0] + Z0/Zeven[0] = 1.
        for order in (3, 4, 5, 6):
            net = synthesize_combline(20.0, 2.0, 0.2, order, 50.0)
            y0 = 50.0 / net.odd_impedances_ohm[0]
            y01 = 50.0 / net.even_impedances_ohm[0]
            assert y0 + y01 == pytest.approx(1.0, rel=1e-12)

    def test_symmetry(self):
        for order in (3, 4, 5, 6):
            net = synthesize_combline(20.0, 2.0, 0.2, order, 50.0)
            zo = net.odd_impedances_ohm
            ze = net.even_impedances_ohm
            assert zo[0] == pytest.approx(zo[-1], rel=1e-12)
            assert zo[1] == pytest.approx(zo[-2], rel=1e-12)
            assert ze[0] == pytest.approx(ze[-1], rel=1e-12)

    def test_all_impedances_positive_and_finite(self):
        net = self.reference()
        for z in net.odd_impedances_ohm + net.even_impedances_ohm:
            assert math.isfinite(z) and z > 0

    def test_rejects_small_order(self):
        with pytest.raises(InvalidSpec):
            synthesize_combline(20.0, 2.0, 0.2, 1, 50.0)

    def test_rejects_zero_bandwidth(self):
        with pytest.raises(InvalidSpec):
            synthesize_combline(20.0, 2.0, 0.0, 4, 50.0)

import math

import numpy as np
import pytest

from mwfilt import (
    DesignSpec,
    FrequencyMapping,
    SingularFrequency,
    SweepGrid,
    closed_form_power,
    design,
    map_frequency,
    ripple_chain,
    sweep_closed_form,
)


class TestMapFrequency:
    def bp(self):
        return FrequencyMapping.for_spec(DesignSpec("butterworth", "bandpass", 40, 20, (2, 3, 4)))

    def test_bandpass_center_maps_to_zero(self):
        m = self.bp()
        assert map_frequency(m, m.w0) == pytest.approx(0.0, abs=1e-12)

    def test_bandpass_edge_maps_to_one(self):
        m = self.bp()
        assert map_frequency(m, 2 * math.pi * 3.0) == pytest.approx(1.0, rel=1e-12)
        assert map_frequency(m, 2 * math.pi * 2.0) == pytest.approx(-1.0, rel=1e-12)

    def test_highpass_cutoff_preserved(self):
        m = FrequencyMapping.for_spec(DesignSpec("butterworth", "highpass", 40, 20, (1, 2)))
        assert map_frequency(m, m.cutoff) == pytest.approx(-1.0)

    def test_bandstop_center_singular(self):
        m = FrequencyMapping.for_spec(DesignSpec("butterworth", "bandstop", 40, 20, (1, 4, 2, 3)))
        with pytest.raises(SingularFrequency):
            map_frequency(m, m.w0)

    @pytest.mark.parametrize("kind,edges", [("bandpass", (2, 3, 4)), ("bandstop", (1, 4, 2, 3))])
    def test_geometric_symmetry(self, kind, edges):
        m = FrequencyMapping.for_spec(DesignSpec("butterworth", kind, 40, 20, edges))
        for w in np.linspace(0.3 * m.w0, 0.98 * m.w0, 37):
            a = abs(map_frequency(m, w))
            b = abs(map_frequency(m, m.w0**2 / w))
            assert a == pytest.approx(b, rel=1e-9)


class TestClosedFormPower:
    def test_butterworth_half_power_at_cutoff(self):
        for n in range(1, 12):
            assert closed_form_power("butterworth", n, None, 1.0) == pytest.approx(0.5)

    def test_butterworth_monotone(self):
        x = np.linspace(0.01, 5.0, 500)
        p = closed_form_power("butterworth", 4, None, x)
        assert np.all(np.diff(p) < 0)

    def test_chebyshev_at_cutoff(self):
        eps = ripple_chain(20.0).ripple_factor
        p = closed_form_power("chebyshev", 6, eps, 1.0)
        assert -10 * math.log10(p) == pytest.approx(0.0436, abs=1e-4)

    def test_chebyshev_odd_at_zero(self):
        assert closed_form_power("chebyshev", 5, 0.3, 0.0) == pytest.approx(1.0)

    def test_chebyshev_even_at_zero(self):
        eps = 0.3
        assert closed_form_power("chebyshev", 4, eps, 0.0) == pytest.approx(1 / (1 + eps**2))

    def test_chebyshev_equiripple(self):
        # All in-band insertion-loss maxima equal the passband ripple.
        eps = ripple_chain(10.0).ripple_factor
        lar = ripple_chain(10.0).passband_ripple_db
        x = np.linspace(0.0, 1.0, 10001)
        for n in range(2, 11):
            il = -10 * np.log10(closed_form_power("chebyshev", n, eps, x))
            # pad so band-edge maxima (the only ones at n=2) count as peaks
            il = np.concatenate(([-np.inf], il, [-np.inf]))
            peaks = il[1:-1][(il[1:-1] >= il[:-2]) & (il[1:-1] >= il[2:])]
            assert len(peaks) > 0
            assert np.max(np.abs(peaks - lar)) < 1e-6


class TestSweepClosedForm:
    def test_chebyshev_lp_reference(self):
        spec = DesignSpec("chebyshev", "lowpass", 40, 20, (1, 2))
        r = design(spec, method="emulate")
        assert r.order == 6
        f = np.array(r.response_emulated.freq_ghz)
        i = int(np.argmin(np.abs(f - 1.0)))
        assert r.response_emulated.s21_db[i] == pytest.approx(-0.0436, abs=1e-3)

    def test_butterworth_n3_stopband_point(self):
        # |S12|^2 = 1/(1 + 2^6) at twice the cutoff
        p = closed_form_power("butterworth", 3, None, 2.0)
        assert 10 * math.log10(p) == pytest.approx(-18.13, abs=0.01)

    def test_bandstop_center_hits_floor(self):
        spec = DesignSpec("butterworth", "bandstop", 40, 20, (1, 4, 2, 3))
        r = design(spec, method="emulate", grid=SweepGrid(0.5, 3.5, 0.25))
        f = np.array(r.response_emulated.freq_ghz)
        i = int(np.argmin(np.abs(f - 2.0)))
        assert r.response_emulated.s21_db[i] == -120.0

    def test_power_reconstruction(self):
        spec = DesignSpec("chebyshev", "bandpass", 40, 20, (2, 3, 4))
        r = design(spec, method="emulate")
        s21 = np.array(r.response_emulated.s21_db)
        s11 = np.array(r.response_emulated.s11_db)
        both = (s21 > -119) & (s11 > -119)
        total = 10 ** (s21[both] / 10) + 10 ** (s11[both] / 10)
        assert np.max(np.abs(total - 1)) < 1e-6


class TestEquivalence:
    CASES = [
        ("butterworth", "lowpass", (1, 2)),
        ("butterworth", "highpass", (1, 2)),
        ("butterworth", "bandpass", (2, 3, 4)),
        ("butterworth", "bandstop", (1, 4, 2, 3)),
        ("chebyshev", "lowpass", (1, 2)),
        ("chebyshev", "highpass", (1, 2)),
        ("chebyshev", "bandpass", (2, 3, 4)),
        ("chebyshev", "bandstop", (1, 4, 2, 3)),
    ]

    @pytest.mark.parametrize("family,kind,edges", CASES)
    def test_routes_agree(self, family, kind, edges):
        spec = DesignSpec(family, kind, 40, 20, edges)
        r = design(spec, method="both")
        for attr in ("s21_db", "s11_db"):
            e = np.array(getattr(r.response_emulated, attr))
            s = np.array(getattr(r.response_simulated, attr))
            mask = (e > -100) & (s > -100)
            assert np.max(np.abs(e - s)[mask]) < 1e-4

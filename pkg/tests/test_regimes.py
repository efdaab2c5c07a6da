import math

import numpy as np
import pytest

from zenolab.errors import DegenerateGrid
from zenolab.regimes import (ANTI_ZENO, STATIONARY, ZENO, RateCurve,
                             classify, find_transitions, survival_after_N)


def curve_from(fn, lo=0.1, hi=3.0, n=30, variant="strong"):
    taus = np.linspace(lo, hi, n)
    return RateCurve(tuple(taus), tuple(fn(t) for t in taus), variant)


class TestRateCurve:
    def test_validation(self):
        with pytest.raises(ValueError):
            RateCurve((1.0, 2.0), (0.1,))
        with pytest.raises(ValueError):
            RateCurve((1.0, 1.0), (0.1, 0.2))
        with pytest.raises(ValueError):
            RateCurve((0.0, 1.0), (0.1, 0.2))


class TestClassify:
    def test_increasing_is_zeno(self):
        labeled = classify(curve_from(lambda t: t))
        assert all(lab == ZENO for lab in labeled.labels)

    def test_decreasing_is_anti_zeno(self):
        labeled = classify(curve_from(lambda t: 1.0 / t))
        assert all(lab == ANTI_ZENO for lab in labeled.labels)

    def test_sine_transitions(self):
        labeled = classify(curve_from(lambda t: 2.0 + math.sin(t),
                                      lo=0.1, hi=6.0, n=120))
        taus = np.asarray(labeled.tau_grid)
        labs = np.asarray(labeled.labels)
        assert np.all(labs[taus < 1.5] == ZENO)
        assert np.all(labs[(taus > 1.65) & (taus < 4.65)] == ANTI_ZENO)
        assert np.all(labs[taus > 4.8] == ZENO)

    def test_flat_is_stationary(self):
        labeled = classify(curve_from(lambda t: 1.0), slope_tol=1e-9)
        assert all(lab == STATIONARY for lab in labeled.labels)

    def test_rescaling_invariance(self):
        base = curve_from(lambda t: 2.0 + math.sin(3.0 * t), n=50)
        scaled = RateCurve(base.tau_grid,
                           tuple(37.5 * g for g in base.gamma), base.variant)
        assert classify(base).labels == classify(scaled).labels

    def test_degenerate_grid(self):
        with pytest.raises(DegenerateGrid):
            classify(RateCurve((1.0, 2.0), (0.1, 0.2)))


class TestFindTransitions:
    def test_monotone_curve_empty(self):
        assert find_transitions(lambda t: t * t, (0.1, 3.0)) == []

    def test_sine_extrema(self):
        trs = find_transitions(lambda t: 2.0 + math.sin(t), (0.1, 6.0),
                               grid_n=64, refine_tol=1e-4)
        assert len(trs) == 2
        assert trs[0].tau_star == pytest.approx(math.pi / 2.0, abs=1e-4)
        assert trs[0].kind == "ZenoToAntiZeno"
        assert trs[1].tau_star == pytest.approx(3.0 * math.pi / 2.0, abs=1e-4)
        assert trs[1].kind == "AntiZenoToZeno"
        assert all(t.error_bound <= 1e-4 for t in trs)

    def test_transitions_land_on_label_boundaries(self):
        fn = lambda t: 2.0 + math.sin(t)
        grid_n = 64
        trs = find_transitions(fn, (0.1, 6.0), grid_n=grid_n)
        taus = np.linspace(0.1, 6.0, grid_n)
        labeled = classify(RateCurve(tuple(taus), tuple(fn(t) for t in taus)))
        for tr in trs:
            i = int(np.searchsorted(taus, tr.tau_star)) - 1
            assert labeled.labels[i] != labeled.labels[i + 1]

    def test_validation(self):
        with pytest.raises(ValueError):
            find_transitions(lambda t: t, (0.0, 1.0))
        with pytest.raises(ValueError):
            find_transitions(lambda t: t, (0.1, 1.0), grid_n=4)


class TestSurvival:
    def test_zero_rate(self):
        assert survival_after_N(0.0, 1.0, 7) == 1.0

    def test_zero_measurements(self):
        assert survival_after_N(0.3, 2.0, 0) == 1.0

    def test_value(self):
        assert survival_after_N(0.1, 1.0, 10) == pytest.approx(math.exp(-1.0),
                                                               rel=1e-15)

    def test_multiplicative(self):
        s = lambda n: survival_after_N(0.37, 0.8, n)
        assert s(5) == pytest.approx(s(2) * s(3), rel=1e-14)

    def test_negative_rate_clamped_with_warning(self):
        with pytest.warns(UserWarning):
            assert survival_after_N(-1e-12, 1.0, 3) == 1.0

    def test_validation(self):
        with pytest.raises(ValueError):
            survival_after_N(0.1, 0.0, 1)
        with pytest.raises(ValueError):
            survival_after_N(0.1, 1.0, -1)

import math

import numpy as np
import pytest

from zenolab.errors import QuadratureFailure
from zenolab.quad import (QuadSpec, integrate_interval,
                          integrate_semi_infinite, integrate_triangle,
                          reduce_triangle)


def test_quadspec_validation():
    with pytest.raises(ValueError):
        QuadSpec(rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadSpec(abs_tol=-1.0)
    with pytest.raises(ValueError):
        QuadSpec(max_evals=1)


class TestSemiInfinite:
    def test_exponential(self):
        r = integrate_semi_infinite(lambda w: np.exp(-w), decay_scale=1.0)
        assert r.value == pytest.approx(1.0, rel=1e-9)

    def test_damped_cosine(self):
        # Laplace integral: int e^-w cos(w) dw = 1 / (1 + 1^2)
        r = integrate_semi_infinite(lambda w: np.exp(-w) * np.cos(w),
                                    decay_scale=1.0)
        assert r.value == pytest.approx(0.5, rel=1e-9)

    def test_zero_integrand(self):
        r = integrate_semi_infinite(lambda w: np.zeros_like(w),
                                    decay_scale=3.0)
        assert r.value == 0.0

    def test_decay_scale_invariance(self):
        vals = [integrate_semi_infinite(lambda w: w * np.exp(-w / 4.0),
                                        decay_scale=L).value
                for L in (0.5, 4.0, 20.0)]
        assert vals == pytest.approx([16.0] * 3, rel=1e-8)

    def test_period_hint_head(self):
        # oscillatory with a known value: int e^-w cos(5 w) = 1/26
        r = integrate_semi_infinite(lambda w: np.exp(-w) * np.cos(5.0 * w),
                                    decay_scale=1.0,
                                    period_hint=2.0 * math.pi / 5.0)
        assert r.value == pytest.approx(1.0 / 26.0, rel=1e-8)

    def test_invalid_decay_scale(self):
        with pytest.raises(ValueError):
            integrate_semi_infinite(lambda w: np.exp(-w), decay_scale=0.0)

    def test_budget_exhaustion(self):
        spec = QuadSpec(rel_tol=1e-13, abs_tol=1e-300, max_evals=60)
        with pytest.raises(QuadratureFailure) as info:
            integrate_semi_infinite(lambda w: np.exp(-w) * np.cos(7.0 * w),
                                    spec, decay_scale=1.0)
        assert math.isfinite(info.value.value)
        assert info.value.error > 0


class TestTriangle:
    def test_constant(self):
        r = integrate_triangle(lambda t, tp: np.ones_like(tp), 2.0)
        assert r.value == pytest.approx(2.0, rel=1e-10)

    def test_tp_only_cosine(self):
        r = integrate_triangle(lambda t, tp: np.cos(tp), 1.0)
        assert r.value == pytest.approx(1.0 - math.cos(1.0), rel=1e-9)

    def test_zero(self):
        r = integrate_triangle(lambda t, tp: np.zeros_like(tp), 1.5)
        assert r.value == 0.0

    def test_genuinely_2d(self):
        # int_0^tau dt int_0^t dt' t * t' = tau^4 / 8
        r = integrate_triangle(lambda t, tp: t * tp, 1.3)
        assert r.value == pytest.approx(1.3**4 / 8.0, rel=1e-10)

    def test_invalid_tau(self):
        with pytest.raises(ValueError):
            integrate_triangle(lambda t, tp: tp, 0.0)


class TestReduceTriangle:
    def test_constant(self):
        assert reduce_triangle(lambda tp: np.ones_like(tp), 2.0).value == \
            pytest.approx(2.0, rel=1e-12)

    def test_cosine(self):
        assert reduce_triangle(np.cos, 1.0).value == \
            pytest.approx(1.0 - math.cos(1.0), rel=1e-10)

    def test_linear(self):
        # int_0^1 (1 - x) x dx = 1/6
        assert reduce_triangle(lambda tp: tp, 1.0).value == \
            pytest.approx(1.0 / 6.0, rel=1e-12)

    @pytest.mark.parametrize("tau", [0.1, 0.7, 2.0, 5.0])
    def test_matches_full_triangle(self, tau):
        def g(tp):
            return np.cos(3.0 * tp) * np.exp(-tp)

        lifted = integrate_triangle(lambda t, tp: g(tp), tau)
        reduced = reduce_triangle(g, tau)
        assert reduced.value == pytest.approx(lifted.value, rel=1e-9)


def test_linearity():
    spec = QuadSpec(rel_tol=1e-10, abs_tol=1e-14)

    def f(w):
        return np.exp(-w)

    def h(w):
        return np.exp(-w) * np.cos(w)

    a, b = 2.5, -0.7
    combo = integrate_semi_infinite(lambda w: a * f(w) + b * h(w), spec,
                                    decay_scale=1.0)
    fa = integrate_semi_infinite(f, spec, decay_scale=1.0)
    hb = integrate_semi_infinite(h, spec, decay_scale=1.0)
    tol = 10.0 * (abs(a) * fa.error + abs(b) * hb.error + combo.error)
    assert abs(combo.value - (a * fa.value + b * hb.value)) <= tol


def test_error_estimates_are_honest():
    cases = [
        (lambda x: np.sin(x), 0.0, math.pi, 2.0),
        (lambda x: x**3, 0.0, 1.0, 0.25),
        (lambda x: 1.0 / (1.0 + x * x), 0.0, 1.0, math.pi / 4.0),
        (lambda x: np.exp(-x * x), 0.0, 6.0, math.sqrt(math.pi) / 2.0),
        (lambda x: np.cos(10.0 * x), 0.0, 1.0, math.sin(10.0) / 10.0),
    ]
    for f, a, b, exact in cases:
        r = integrate_interval(f, a, b)
        assert abs(r.value - exact) <= 10.0 * r.error
    semi = [
        (lambda w: np.exp(-w), 1.0),
        (lambda w: w * np.exp(-w), 1.0),
    ]
    for f, exact in semi:
        r = integrate_semi_infinite(f, decay_scale=1.0)
        assert abs(r.value - exact) <= 10.0 * r.error


def test_interval_breakpoints_and_degenerate():
    # kink at x = 1 handled via breakpoint
    r = integrate_interval(lambda x: np.abs(x - 1.0), 0.0, 2.0,
                           breakpoints=(1.0,))
    assert r.value == pytest.approx(1.0, rel=1e-12)
    assert integrate_interval(lambda x: x, 1.0, 1.0).value == 0.0
    with pytest.raises(ValueError):
        integrate_interval(lambda x: x, 2.0, 1.0)


def test_nonfinite_integrand_rejected():
    with pytest.raises(QuadratureFailure):
        integrate_interval(lambda x: 1.0 / (x - 0.5234), 0.0, 1.0)

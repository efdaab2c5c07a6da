import cmath
import math

import numpy as np
import pytest

from zenolab.bath import (DiscreteModes, InfluencePhases, OhmicFamily,
                          Temperature, eval_J, kappa)
from zenolab.errors import DiscretePointwiseEval

OHMIC = OhmicFamily(G=1.0, s=1.0, omega_c=10.0)


class TestSpectralDensity:
    def test_ohmic_validation(self):
        with pytest.raises(ValueError):
            OhmicFamily(G=-0.1)
        with pytest.raises(ValueError):
            OhmicFamily(G=1.0, s=0.0)
        with pytest.raises(ValueError):
            OhmicFamily(G=1.0, omega_c=-2.0)

    def test_discrete_validation(self):
        with pytest.raises(ValueError):
            DiscreteModes(((0.0, 1.0),))
        with pytest.raises(ValueError):
            DiscreteModes(((1.0, -0.5),))
        assert DiscreteModes(()).modes == ()

    def test_eval_J_at_zero(self):
        assert eval_J(OHMIC, 0.0) == 0.0

    def test_eval_J_at_cutoff(self):
        assert eval_J(OHMIC, 10.0) == pytest.approx(10.0 * math.exp(-1.0),
                                                    rel=1e-14)

    def test_eval_J_weak(self):
        sd = OhmicFamily(G=0.05, s=1.0, omega_c=10.0)
        assert eval_J(sd, 1.0) == pytest.approx(0.05 * math.exp(-0.1),
                                                rel=1e-14)

    def test_eval_J_discrete_raises(self):
        with pytest.raises(DiscretePointwiseEval):
            eval_J(DiscreteModes(((1.0, 0.5),)), 1.0)

    def test_eval_J_negative_omega(self):
        with pytest.raises(ValueError):
            eval_J(OHMIC, -1.0)

    def test_density_nonnegative(self):
        w = np.linspace(0.0, 200.0, 500)
        for s in (0.5, 1.0, 2.0):
            sd = OhmicFamily(G=0.7, s=s, omega_c=10.0)
            assert np.all(sd.density(w) >= 0.0)


class TestTemperature:
    def test_validation(self):
        with pytest.raises(ValueError):
            Temperature(beta=0.0)
        with pytest.raises(ValueError):
            Temperature(beta=-5.0)

    def test_zero_temperature_coth(self):
        t = Temperature()
        assert t.is_zero
        assert t.coth_half(3.2) == 1.0

    def test_coth_limits(self):
        t = Temperature(beta=2.0)
        assert t.coth_half(100.0) == pytest.approx(1.0, rel=1e-12)
        # small argument: coth(x) ~ 1/x
        assert t.coth_half(1e-8) == pytest.approx(1.0 / 1e-8, rel=1e-6)
        assert t.coth_half(1.0) == pytest.approx(1.0 / math.tanh(1.0),
                                                 rel=1e-14)


class TestPhiClosedForms:
    def test_phi_R_zero_time(self):
        ip = InfluencePhases(OHMIC)
        assert ip.phi_R(0.0) == 0.0

    def test_phi_R_ohmic(self):
        ip = InfluencePhases(OHMIC)
        assert ip.phi_R(1.0) == pytest.approx(0.5 * math.log(101.0),
                                              rel=1e-14)

    def test_phi_R_large_beta_converges_to_zero_T(self):
        ip = InfluencePhases(OHMIC, Temperature(beta=1e6))
        assert ip.phi_R(1.0) == pytest.approx(0.5 * math.log(101.0), rel=1e-3)

    def test_phi_I_zero_time(self):
        assert InfluencePhases(OHMIC).phi_I(0.0) == 0.0
        assert InfluencePhases(DiscreteModes(((1.0, 1.0),))).phi_I(0.0) == 0.0

    def test_phi_I_ohmic(self):
        ip = InfluencePhases(OHMIC)
        assert ip.phi_I(1.0) == pytest.approx(math.atan(10.0), rel=1e-14)

    def test_phi_I_asymptote(self):
        ip = InfluencePhases(OHMIC)
        assert abs(ip.phi_I(1e6) - math.pi / 2.0) < 1e-4


class TestPhiQuadrature:
    @pytest.mark.parametrize("t", [0.01, 0.3, 1.0, 4.0, 10.0])
    def test_matches_closed_form_zero_T(self, t):
        ip = InfluencePhases(OHMIC, allow_closed_form=False)
        assert ip.phi_R(t) == pytest.approx(
            0.5 * math.log(1.0 + 100.0 * t * t), rel=1e-8)
        assert ip.phi_I(t) == pytest.approx(math.atan(10.0 * t), rel=1e-8)

    def test_finite_beta_exceeds_zero_T(self):
        cold = InfluencePhases(OHMIC)
        warm = InfluencePhases(OHMIC, Temperature(beta=0.5))
        for t in (0.1, 1.0, 3.0):
            assert warm.phi_R(t) > cold.phi_R(t)

    def test_linearity_in_G_exact(self):
        one = InfluencePhases(OhmicFamily(1.0, 1.0, 10.0),
                              Temperature(beta=2.0), allow_closed_form=False)
        two = InfluencePhases(OhmicFamily(2.0, 1.0, 10.0),
                              Temperature(beta=2.0), allow_closed_form=False)
        assert two.phi_R(1.3) == 2.0 * one.phi_R(1.3)
        assert two.phi_I(1.3) == 2.0 * one.phi_I(1.3)

    def test_sub_and_super_ohmic_run(self):
        for s in (0.5, 2.0):
            ip = InfluencePhases(OhmicFamily(1.0, s, 5.0))
            assert ip.phi_R(1.0) > 0.0
            assert ip.phi_I(1.0) > 0.0

    def test_vectorized_matches_scalar(self):
        ip = InfluencePhases(OHMIC, Temperature(beta=3.0))
        ts = np.array([0.0, 0.5, 2.0])
        np.testing.assert_allclose(ip.phi_R(ts),
                                   [ip.phi_R(float(t)) for t in ts],
                                   rtol=1e-12)

    def test_negative_time_rejected(self):
        with pytest.raises(ValueError):
            InfluencePhases(OHMIC).phi_R(-0.1)


class TestDiscretePhis:
    def test_values(self):
        modes = DiscreteModes(((1.0, 0.25), (3.0, 0.1)))
        ip = InfluencePhases(modes, Temperature(beta=2.0))
        t = 0.7
        expect_r = sum(4.0 * g2 * (1.0 - math.cos(w * t)) / w**2
                       / math.tanh(w)  # coth(beta w / 2) with beta = 2
                       for w, g2 in modes.modes)
        expect_i = sum(4.0 * g2 * math.sin(w * t) / w**2
                       for w, g2 in modes.modes)
        assert ip.phi_R(t) == pytest.approx(expect_r, rel=1e-14)
        assert ip.phi_I(t) == pytest.approx(expect_i, rel=1e-14)

    def test_empty_modes_vanish(self):
        ip = InfluencePhases(DiscreteModes(()))
        assert ip.phi_R(2.0) == 0.0
        assert ip.phi_I(2.0) == 0.0

    def test_linearity_exact(self):
        base = DiscreteModes(((1.0, 0.25), (3.0, 0.1)))
        dbl = DiscreteModes(((1.0, 0.5), (3.0, 0.2)))
        a = InfluencePhases(base, Temperature(beta=1.5))
        b = InfluencePhases(dbl, Temperature(beta=1.5))
        assert b.phi_R(0.9) == 2.0 * a.phi_R(0.9)
        assert b.phi_I(0.9) == 2.0 * a.phi_I(0.9)


class TestKappa:
    def test_discrete(self):
        assert kappa(DiscreteModes(((1.0, 0.25),))) == 1.0
        assert kappa(DiscreteModes(())) == 0.0

    def test_ohmic_closed_form(self):
        assert kappa(OHMIC) == 40.0

    def test_zero_coupling(self):
        assert kappa(OhmicFamily(G=0.0, s=0.7, omega_c=3.0)) == 0.0

    @pytest.mark.parametrize("s,rel", [(2.0, 1e-6), (0.5, 1e-5)])
    def test_quadrature_general_s(self, s, rel):
        # kappa = 4 G wc Gamma(s) for the exponential-cutoff family
        sd = OhmicFamily(G=0.3, s=s, omega_c=5.0)
        assert kappa(sd) == pytest.approx(4.0 * 0.3 * 5.0 * math.gamma(s),
                                          rel=rel)


class TestCorrelation:
    def test_at_zero(self):
        assert InfluencePhases(OHMIC).correlation(0.0) == 1.0 + 0.0j

    def test_value(self):
        ip = InfluencePhases(OHMIC)
        expect = cmath.exp(-0.5 * math.log(101.0)) * cmath.exp(
            -1j * math.atan(10.0))
        got = ip.correlation(1.0)
        assert got == pytest.approx(expect, rel=1e-12)

    def test_decoupled(self):
        ip = InfluencePhases(OhmicFamily(G=0.0, s=1.0, omega_c=10.0))
        assert ip.correlation(5.0) == 1.0 + 0.0j

    @pytest.mark.parametrize("t", [0.0, 0.2, 1.0, 7.0])
    def test_magnitude_bound(self, t):
        ip = InfluencePhases(OHMIC, Temperature(beta=4.0))
        c = ip.correlation(t)
        assert abs(c) <= 1.0 + 1e-12
        assert abs(c) == pytest.approx(math.exp(-ip.phi_R(t)), rel=1e-12)

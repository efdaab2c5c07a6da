"""Strong-coupling effective decay rates in the polaron frame.

For a measured spin j (j = 1/2 for a single two-level system, j = N_S/2 for
N_S systems sharing the environment) prepared in the top Jz eigenstate, the
one-interval decay rate is

    Gamma(tau) = (Delta^2 j / tau) * int_0^tau (tau - t') exp(-Phi_R(t'))
                 * cos[(eps + kappa (1 - 2j)) t' - Phi_I(t')] dt'

using the triangle reduction for the t'-only integrand. The kappa shift is
identically zero at j = 1/2, where the shared-environment and single-spin
expressions coincide. When the bare system evolution is undone before each
measurement the rate becomes Gamma_n = Gamma + Gamma_mod with

    Gamma_mod(tau) = (Delta^2 / tau) (2j) { sin^2(eps tau / 2) / eps^2
        - sin(eps tau / 2) / eps * int_0^tau exp(-Phi_R(t))
          * cos[kappa (2j - 1)(2 tau - t) + eps (t - tau/2) - Phi_I(t)] dt }.

The (2 tau - t) argument of the shared-environment correction is implemented
verbatim; ``two_tau_argument=False`` switches to the (tau - t) variant for
sensitivity studies only.
"""

from __future__ import annotations

import math
import warnings as _warnings
from dataclasses import dataclass

import numpy as np

from .bath import InfluencePhases
from .errors import PerturbativeBreakdown
from .quad import QuadSpec, integrate_interval, reduce_triangle

_TWO_PI = 2.0 * math.pi

#: default tolerance for rate integrals (phases default to 1e-9 separately)
RATE_SPEC = QuadSpec(rel_tol=1e-7, abs_tol=1e-12)


@dataclass(frozen=True)
class SystemParams:
    """Level splitting, tunneling amplitude and total spin j = N_S / 2."""

    epsilon: float
    delta: float
    j: float = 0.5

    def __post_init__(self):
        if self.delta < 0:
            raise ValueError("tunneling amplitude must be nonnegative")
        two_j = 2.0 * self.j
        if abs(two_j - round(two_j)) > 1e-9 or round(two_j) < 1:
            raise ValueError("j must be a positive half-integer")


@dataclass(frozen=True)
class RateResult:
    gamma: float
    survival_one: float
    error: float
    warnings: tuple = ()


def _kappa_shift(sys: SystemParams, ip: InfluencePhases, sign: float,
                 force_large_spin: bool) -> float:
    """kappa * sign * (2j - 1); exactly 0.0 on the single-spin path."""
    if sys.j == 0.5 and not force_large_spin:
        return 0.0
    return ip.kappa() * sign * (2.0 * sys.j - 1.0)


def _polaron_integrand(ip: InfluencePhases, freq: float):
    def g(tp):
        tp = np.asarray(tp, dtype=float)
        return np.exp(-ip.phi_R(tp)) * np.cos(freq * tp - ip.phi_I(tp))

    return g


def _period_hint(freq: float):
    return _TWO_PI / abs(freq) if freq != 0.0 else None


def _breakdown_warnings(sys: SystemParams, gamma: float, tau: float) -> tuple:
    if sys.delta**2 * tau**2 > 0.1 or abs(gamma) * tau > 0.1:
        _warnings.warn("survival deficit is not small; second-order rate "
                       "may be unreliable", PerturbativeBreakdown, stacklevel=3)
        return ("perturbative-breakdown",)
    return ()


def gamma_strong(sys: SystemParams, ip: InfluencePhases, tau: float,
                 spec: QuadSpec | None = None,
                 force_large_spin: bool = False) -> RateResult:
    """One-interval decay rate Gamma(tau) in the polaron frame."""
    tau = float(tau)
    if tau <= 0:
        raise ValueError("tau must be positive")
    if sys.delta == 0.0:
        return RateResult(0.0, 1.0, 0.0)
    spec = spec or RATE_SPEC
    freq = sys.epsilon + (-_kappa_shift(sys, ip, 1.0, force_large_spin))
    res = reduce_triangle(_polaron_integrand(ip, freq), tau, spec,
                          period_hint=_period_hint(freq))
    pref = sys.delta**2 * sys.j / tau
    gamma = pref * res.value
    warns = _breakdown_warnings(sys, gamma, tau)
    return RateResult(gamma, math.exp(-gamma * tau), pref * res.error, warns)


def _gamma_mod(sys: SystemParams, ip: InfluencePhases, tau: float,
               spec: QuadSpec | None, force_large_spin: bool,
               two_tau_argument: bool):
    tau = float(tau)
    if tau <= 0:
        raise ValueError("tau must be positive")
    if sys.epsilon == 0.0:
        raise ValueError("level splitting must be nonzero for the "
                         "system-evolution-removal correction")
    if sys.delta == 0.0:
        return 0.0, 0.0
    spec = spec or RATE_SPEC
    eps = sys.epsilon
    kshift = _kappa_shift(sys, ip, 1.0, force_large_spin)

    def h(t):
        t = np.asarray(t, dtype=float)
        tail = (2.0 * tau - t) if two_tau_argument else (tau - t)
        arg = kshift * tail + eps * (t - 0.5 * tau) - ip.phi_I(t)
        return np.exp(-ip.phi_R(t)) * np.cos(arg)

    res = integrate_interval(h, 0.0, tau, spec,
                             period_hint=_period_hint(eps - kshift))
    half_sin = math.sin(0.5 * eps * tau)
    pref = sys.delta**2 / tau * (2.0 * sys.j)
    value = pref * (half_sin**2 / eps**2 - half_sin / eps * res.value)
    return value, pref * abs(half_sin / eps) * res.error


def gamma_mod_strong(sys: SystemParams, ip: InfluencePhases, tau: float,
                     spec: QuadSpec | None = None,
                     force_large_spin: bool = False,
                     two_tau_argument: bool = True) -> float:
    """Rate correction from undoing the bare system evolution."""
    return _gamma_mod(sys, ip, tau, spec, force_large_spin, two_tau_argument)[0]


def gamma_n_strong(sys: SystemParams, ip: InfluencePhases, tau: float,
                   spec: QuadSpec | None = None,
                   force_large_spin: bool = False,
                   two_tau_argument: bool = True) -> RateResult:
    """Gamma_n(tau) = Gamma(tau) + Gamma_mod(tau)."""
    base = gamma_strong(sys, ip, tau, spec, force_large_spin)
    if sys.delta == 0.0:
        return base
    mod, mod_err = _gamma_mod(sys, ip, tau, spec, force_large_spin,
                              two_tau_argument)
    gamma = base.gamma + mod
    return RateResult(gamma, math.exp(-gamma * tau),
                      base.error + mod_err, base.warnings)

"""Bosonic environments: spectral densities and polaron influence phases.

The continuum family is ``J(w) = G w^s wc^(1-s) exp(-w/wc)`` with coupling
strength G, Ohmicity s and cutoff wc. The influence phases entering the
polaron-frame correlation function C12(t) = exp(-Phi_R(t)) * exp(-i Phi_I(t))
are

    Phi_R(t) = int_0^inf dw J(w) (1 - cos(w t)) / w^2 * coth(beta w / 2)
    Phi_I(t) = int_0^inf dw J(w) sin(w t) / w^2

with the strictly Ohmic (s = 1) closed forms
``Phi_R = (G/2) ln(1 + wc^2 t^2)`` at zero temperature and
``Phi_I = G arctan(wc t)`` at any temperature.

Coupling convention
-------------------
Two conventions coexist and must not be mixed. A continuum density defines
the phases through the integrals above, with no extra prefactor, and the
indirect-interaction constant through ``kappa = 4 int_0^inf J(w)/w dw``.
An explicit mode list carries Hamiltonian couplings |g_k|^2 whose polaron
displacement amplitude is 2 g_k / w_k, so the discrete sums are

    Phi_R(t) = sum_k 4 |g_k|^2 (1 - cos(w_k t)) / w_k^2 * coth(beta w_k / 2)
    Phi_I(t) = sum_k 4 |g_k|^2 sin(w_k t) / w_k^2
    kappa    = sum_k 4 |g_k|^2 / w_k

A bath discretized from a continuum J therefore produces phases four times
the continuum definition; always compare rates computed within one
convention. The exact-diagonalization oracle validates the discrete factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DiscretePointwiseEval, DivergentKappa
from .quad import QuadSpec, integrate_semi_infinite

_TWO_PI = 2.0 * math.pi


def _omc(x):
    """(1 - cos x) / x^2, cancellation-free via 2 sin^2(x/2)."""
    x = np.asarray(x, dtype=float)
    safe = np.where(x == 0.0, 1.0, x)
    return np.where(x == 0.0, 0.5, 2.0 * (np.sin(0.5 * safe) / safe) ** 2)


def _sinc(x):
    """sin(x) / x with the limit value 1 at x = 0."""
    return np.sinc(np.asarray(x, dtype=float) / math.pi)


class SpectralDensity:
    """Marker base for bath structure descriptions."""


@dataclass(frozen=True)
class OhmicFamily(SpectralDensity):
    """Continuum density G w^s wc^(1-s) exp(-w/wc)."""

    G: float
    s: float = 1.0
    omega_c: float = 1.0

    def __post_init__(self):
        if self.G < 0:
            raise ValueError("coupling strength G must be nonnegative")
        if self.s <= 0:
            raise ValueError("Ohmicity parameter s must be positive")
        if self.omega_c <= 0:
            raise ValueError("cutoff frequency must be positive")

    @property
    def is_strictly_ohmic(self) -> bool:
        return self.s == 1.0

    def density(self, omega):
        w = np.asarray(omega, dtype=float)
        # log form keeps w^s * exp(-w/wc) finite for extreme arguments
        with np.errstate(divide="ignore", invalid="ignore",
                         over="ignore", under="ignore"):
            lg = self.s * np.log(w) - w / self.omega_c
            out = (self.G * self.omega_c ** (1.0 - self.s)) * np.exp(lg)
        out = np.where(w > 0.0, out, 0.0)
        return out if np.ndim(omega) else float(out)

    def density_over_omega(self, omega):
        """J(w)/w, stable near w = 0 (exponent s - 1)."""
        w = np.asarray(omega, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore",
                         over="ignore", under="ignore"):
            lg = (self.s - 1.0) * np.log(w) - w / self.omega_c
            out = (self.G * self.omega_c ** (1.0 - self.s)) * np.exp(lg)
        out = np.where(w > 0.0, out, 0.0 if self.s > 1.0 else np.nan)
        if self.s == 1.0:
            out = np.where(w == 0.0, self.G, out)
        return out if np.ndim(omega) else float(out)


@dataclass(frozen=True)
class DiscreteModes(SpectralDensity):
    """Explicit mode list of (frequency, squared coupling |g|^2) pairs."""

    modes: tuple = ()

    def __post_init__(self):
        cleaned = tuple((float(w), float(g2)) for w, g2 in self.modes)
        for w, g2 in cleaned:
            if w <= 0:
                raise ValueError("mode frequencies must be strictly positive")
            if g2 < 0:
                raise ValueError("squared couplings must be nonnegative")
        object.__setattr__(self, "modes", cleaned)

    @property
    def omegas(self) -> np.ndarray:
        return np.array([w for w, _ in self.modes], dtype=float)

    @property
    def g2s(self) -> np.ndarray:
        return np.array([g2 for _, g2 in self.modes], dtype=float)


@dataclass(frozen=True)
class Temperature:
    """Inverse temperature; beta = inf encodes exactly zero temperature."""

    beta: float = math.inf

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError("beta must be positive (inf allowed)")

    @property
    def is_zero(self) -> bool:
        return math.isinf(self.beta)

    def coth_half(self, omega):
        """coth(beta * omega / 2); identically 1 at zero temperature."""
        w = np.asarray(omega, dtype=float)
        if self.is_zero:
            out = np.ones_like(w)
        else:
            x = 0.5 * self.beta * w
            small = np.abs(x) < 1e-4
            with np.errstate(divide="ignore"):
                series = 1.0 / x + x / 3.0
                direct = 1.0 / np.tanh(np.where(small, 1.0, x))
            out = np.where(small, series, direct)
        return out if np.ndim(omega) else float(out)


def eval_J(sd: SpectralDensity, omega):
    """Pointwise spectral density J(omega) for continuum baths."""
    if isinstance(sd, DiscreteModes):
        raise DiscretePointwiseEval(
            "discrete baths have no pointwise density; sum over the modes")
    if np.any(np.asarray(omega) < 0):
        raise ValueError("omega must be nonnegative")
    return sd.density(omega)


def kappa(sd: SpectralDensity, spec: QuadSpec | None = None) -> float:
    """Indirect-interaction constant 4 sum_k |g_k|^2 / w_k.

    Continuum baths use 4 int_0^inf J(w)/w dw, with the exact value
    4 G wc in the strictly Ohmic case.
    """
    if isinstance(sd, DiscreteModes):
        if not sd.modes:
            return 0.0
        return float(4.0 * np.sum(sd.g2s / sd.omegas))
    if sd.s <= 0:
        raise DivergentKappa("kappa requires Ohmicity s > 0")
    if sd.G == 0:
        return 0.0
    if sd.is_strictly_ohmic:
        return 4.0 * sd.G * sd.omega_c
    res = integrate_semi_infinite(
        lambda w: 4.0 * sd.density_over_omega(w),
        spec or QuadSpec(rel_tol=1e-9, abs_tol=1e-13),
        decay_scale=sd.omega_c, singular_power=sd.s - 1.0)
    return res.value


@dataclass(frozen=True)
class InfluencePhases:
    """Evaluator bundle for Phi_R, Phi_I, kappa and C12 at one temperature.

    ``allow_closed_form`` enables the strictly Ohmic shortcuts; switch it
    off to force the quadrature path (used for cross-validation).
    """

    spectral: SpectralDensity
    temp: Temperature = Temperature()
    rel_tol: float = 1e-9
    allow_closed_form: bool = True

    @property
    def _spec(self) -> QuadSpec:
        return QuadSpec(rel_tol=self.rel_tol, abs_tol=1e-13)

    def _check_times(self, t):
        arr = np.asarray(t, dtype=float)
        if np.any(arr < 0):
            raise ValueError("time must be nonnegative")
        return arr

    def phi_R(self, t):
        arr = self._check_times(t)
        sd = self.spectral
        if isinstance(sd, DiscreteModes):
            if not sd.modes:
                out = np.zeros_like(arr)
            else:
                w = sd.omegas
                amp = 4.0 * sd.g2s / w**2 * self.temp.coth_half(w)
                x = arr[..., None] * w
                out = ((1.0 - np.cos(x)) * amp).sum(axis=-1)
            return out if np.ndim(t) else float(out)
        if sd.G == 0.0:
            out = np.zeros_like(arr)
            return out if np.ndim(t) else float(out)
        if self.allow_closed_form and sd.is_strictly_ohmic and self.temp.is_zero:
            out = 0.5 * sd.G * np.log1p((sd.omega_c * arr) ** 2)
            return out if np.ndim(t) else float(out)
        out = np.array([self._phi_R_quad(ti) for ti in np.atleast_1d(arr)])
        return out.reshape(arr.shape) if np.ndim(t) else float(out[0])

    def _phi_R_quad(self, t: float) -> float:
        if t == 0.0:
            return 0.0
        sd = self.spectral
        power = sd.s if self.temp.is_zero else sd.s - 1.0

        def f(w):
            return sd.density(w) * (t * t) * _omc(w * t) * self.temp.coth_half(w)

        return integrate_semi_infinite(f, self._spec, sd.omega_c,
                                       period_hint=_TWO_PI / t,
                                       singular_power=power).value

    def phi_I(self, t):
        arr = self._check_times(t)
        sd = self.spectral
        if isinstance(sd, DiscreteModes):
            if not sd.modes:
                out = np.zeros_like(arr)
            else:
                w = sd.omegas
                amp = 4.0 * sd.g2s / w**2
                out = (np.sin(arr[..., None] * w) * amp).sum(axis=-1)
            return out if np.ndim(t) else float(out)
        if sd.G == 0.0:
            out = np.zeros_like(arr)
            return out if np.ndim(t) else float(out)
        if self.allow_closed_form and sd.is_strictly_ohmic:
            # temperature-independent, so valid at any beta
            out = sd.G * np.arctan(sd.omega_c * arr)
            return out if np.ndim(t) else float(out)
        out = np.array([self._phi_I_quad(ti) for ti in np.atleast_1d(arr)])
        return out.reshape(arr.shape) if np.ndim(t) else float(out[0])

    def _phi_I_quad(self, t: float) -> float:
        if t == 0.0:
            return 0.0
        sd = self.spectral

        def f(w):
            return sd.density_over_omega(w) * t * _sinc(w * t)

        return integrate_semi_infinite(f, self._spec, sd.omega_c,
                                       period_hint=_TWO_PI / t,
                                       singular_power=sd.s - 1.0).value

    def kappa(self) -> float:
        return kappa(self.spectral, self._spec)

    def correlation(self, t) -> complex:
        """Polaron-frame bath correlation C12(t); magnitude <= 1."""
        pr = self.phi_R(t)
        pi = self.phi_I(t)
        return complex(math.exp(-pr) * math.cos(pi),
                       -math.exp(-pr) * math.sin(pi))

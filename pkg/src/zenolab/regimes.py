"""Regime classification and multi-measurement survival.

A point is in the Zeno regime when the rate falls as the measurement
interval shrinks (positive slope of Gamma vs tau) and in the anti-Zeno
regime when it rises; slopes within tolerance of zero are Stationary.
"""

from __future__ import annotations

import math
import warnings as _warnings
from dataclasses import dataclass, replace

import numpy as np

from .errors import DegenerateGrid

ZENO = "Zeno"
ANTI_ZENO = "AntiZeno"
STATIONARY = "Stationary"

ZENO_TO_ANTI = "ZenoToAntiZeno"
ANTI_TO_ZENO = "AntiZenoToZeno"


@dataclass(frozen=True)
class RateCurve:
    tau_grid: tuple
    gamma: tuple
    variant: str = "strong"
    labels: tuple | None = None

    def __post_init__(self):
        taus = tuple(float(t) for t in self.tau_grid)
        gammas = tuple(float(g) for g in self.gamma)
        if len(taus) != len(gammas):
            raise ValueError("tau grid and rate values must share a length")
        if any(t <= 0 for t in taus):
            raise ValueError("tau grid values must be positive")
        if any(b <= a for a, b in zip(taus[:-1], taus[1:])):
            raise ValueError("tau grid must be strictly increasing")
        if self.labels is not None and len(self.labels) != len(taus):
            raise ValueError("labels must match the grid length")
        object.__setattr__(self, "tau_grid", taus)
        object.__setattr__(self, "gamma", gammas)


@dataclass(frozen=True)
class Transition:
    tau_star: float
    kind: str
    error_bound: float


def default_slope_tol(curve: RateCurve) -> float:
    span = curve.tau_grid[-1] - curve.tau_grid[0]
    return 1e-6 * max(abs(g) for g in curve.gamma) / span


def classify(curve: RateCurve, slope_tol: float | None = None) -> RateCurve:
    """Label every grid point Zeno / AntiZeno / Stationary by local slope."""
    if len(curve.tau_grid) < 3:
        raise DegenerateGrid("classification needs at least 3 grid points")
    if slope_tol is None:
        slope_tol = default_slope_tol(curve)
    slopes = np.gradient(np.asarray(curve.gamma), np.asarray(curve.tau_grid))
    labels = tuple(
        ZENO if s > slope_tol else ANTI_ZENO if s < -slope_tol else STATIONARY
        for s in slopes)
    return replace(curve, labels=labels)


def _slope(fn, x: float, h: float) -> float:
    return (fn(x + h) - fn(x - h)) / (2.0 * h)


def find_transitions(curve_fn, tau_range, grid_n: int = 64,
                     refine_tol: float = 1e-4) -> list[Transition]:
    """Locate slope sign changes of ``curve_fn`` on (tau_lo, tau_hi).

    Sign changes are bracketed on a uniform grid and refined by bisection
    on a symmetric finite-difference slope until the bracket width drops
    below ``refine_tol``.
    """
    lo, hi = float(tau_range[0]), float(tau_range[1])
    if not (0 < lo < hi):
        raise ValueError("need 0 < tau_lo < tau_hi")
    if grid_n < 8:
        raise ValueError("grid_n must be at least 8")
    if refine_tol <= 0:
        raise ValueError("refine_tol must be positive")

    taus = np.linspace(lo, hi, grid_n)
    h = min(0.25 * refine_tol, 0.125 * (taus[1] - taus[0]))
    h = max(h, 1e-9 * hi)
    slopes = [_slope(curve_fn, float(t), h) for t in taus]

    out: list[Transition] = []
    for i in range(grid_n - 1):
        sa, sb = slopes[i], slopes[i + 1]
        if sa == 0.0 or sa * sb > 0.0:
            continue
        a, b = float(taus[i]), float(taus[i + 1])
        fa = sa
        while b - a > refine_tol:
            m = 0.5 * (a + b)
            fm = _slope(curve_fn, m, h)
            if fa * fm <= 0.0:
                b = m
            else:
                a, fa = m, fm
        kind = ZENO_TO_ANTI if sa > 0 else ANTI_TO_ZENO
        out.append(Transition(0.5 * (a + b), kind, b - a))
    return out


def survival_after_N(gamma: float, tau: float, n: int) -> float:
    """Survival probability after n measurements: exp(-gamma * n * tau)."""
    tau = float(tau)
    if tau <= 0:
        raise ValueError("tau must be positive")
    n = int(n)
    if n < 0:
        raise ValueError("n must be nonnegative")
    gamma = float(gamma)
    if gamma < 0.0:
        _warnings.warn("negative rate clamped to zero (quadrature noise?)",
                       UserWarning, stacklevel=2)
        gamma = 0.0
    return math.exp(-gamma * n * tau)

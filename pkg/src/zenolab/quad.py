"""Adaptive one- and two-dimensional quadrature.

Every integrator runs a 15-point Gauss-Kronrod rule per panel and greedily
bisects the worst panels until the summed error estimate satisfies
``max(rel_tol * |value|, abs_tol)``. Panels are evaluated in batches, so
integrands must accept numpy arrays. Semi-infinite integrals use the
rational map ``omega = decay_scale * u / (1 - u)``; oscillatory integrands
can be pre-split at period boundaries through ``period_hint``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import QuadratureFailure

# 15-point Kronrod extension of the 7-point Gauss rule (nodes on [-1, 1]).
_XGK_HALF = np.array([
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
])
_WGK_HALF = np.array([
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
])
_WG_HALF = np.array([
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
])

_XGK = np.concatenate([-_XGK_HALF[:-1], _XGK_HALF[::-1]])
_WGK = np.concatenate([_WGK_HALF[:-1], _WGK_HALF[::-1]])
_WG = np.zeros(15)
_WG[1:14:2] = np.concatenate([_WG_HALF[:-1], _WG_HALF[::-1]])

_MAX_INIT_PANELS = 16384
_WIDTH_EPS = 1e-14


@dataclass(frozen=True)
class QuadSpec:
    """Tolerance and budget for one adaptive solve."""

    rel_tol: float = 1e-9
    abs_tol: float = 1e-13
    max_evals: int = 5_000_000

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_evals < 15:
            raise ValueError("max_evals must allow at least one panel")


@dataclass(frozen=True)
class QuadResult:
    value: float
    error: float
    evals: int


def _panel_sums(f, lo, hi):
    """Kronrod and error estimates for a batch of panels."""
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    x = mid[:, None] + half[:, None] * _XGK[None, :]
    fx = np.asarray(f(x.reshape(-1)), dtype=float).reshape(x.shape)
    if not np.all(np.isfinite(fx)):
        raise QuadratureFailure("integrand returned a non-finite value")
    vk = (fx @ _WGK) * half
    vg = (fx @ _WG) * half
    return vk, np.abs(vk - vg)


def _adapt(f, lo, hi, spec):
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    vk, err = _panel_sums(f, lo, hi)
    evals = 15 * lo.size
    while True:
        total = float(vk.sum())
        # floor keeps the estimate honest against pure summation rounding
        tot_err = float(err.sum()) + 2e-16 * float(np.abs(vk).sum())
        bound = max(spec.rel_tol * abs(total), spec.abs_tol)
        if tot_err <= bound:
            return QuadResult(total, tot_err, evals)
        widths = hi - lo
        can_split = widths > _WIDTH_EPS * (np.abs(lo) + np.abs(hi) + 1.0)
        mask = (err > bound / (2.0 * lo.size)) & can_split
        if not mask.any():
            raise QuadratureFailure(
                "panel width underflow before tolerance was met",
                value=total, error=tot_err)
        need = int(mask.sum())
        if evals + 30 * need > spec.max_evals:
            raise QuadratureFailure(
                "evaluation budget exhausted", value=total, error=tot_err)
        mid = 0.5 * (lo[mask] + hi[mask])
        child_lo = np.concatenate([lo[mask], mid])
        child_hi = np.concatenate([mid, hi[mask]])
        cvk, cerr = _panel_sums(f, child_lo, child_hi)
        lo = np.concatenate([lo[~mask], child_lo])
        hi = np.concatenate([hi[~mask], child_hi])
        vk = np.concatenate([vk[~mask], cvk])
        err = np.concatenate([err[~mask], cerr])
        evals += 30 * need


def _initial_edges(a, b, breakpoints, period_hint):
    pts = sorted({float(a), float(b)} | {float(p) for p in breakpoints if a < p < b})
    if period_hint is not None and period_hint > 0:
        step = max(float(period_hint), (b - a) / _MAX_INIT_PANELS)
        edges = []
        for left, right in zip(pts[:-1], pts[1:]):
            n = max(1, int(math.ceil((right - left) / step)))
            edges.extend(np.linspace(left, right, n + 1)[:-1])
        edges.append(float(b))
        pts = edges
    return np.asarray(pts, dtype=float)


def integrate_interval(f, a, b, spec=None, *, breakpoints=(), period_hint=None):
    """Adaptive integral of ``f`` over the finite interval [a, b]."""
    spec = spec or QuadSpec()
    a = float(a)
    b = float(b)
    if not b > a:
        if b == a:
            return QuadResult(0.0, 0.0, 0)
        raise ValueError("interval endpoints must satisfy a <= b")
    edges = _initial_edges(a, b, breakpoints, period_hint)
    return _adapt(f, edges[:-1], edges[1:], spec)


def integrate_semi_infinite(f, spec=None, decay_scale=1.0, *,
                            breakpoints=(), period_hint=None,
                            singular_power=None):
    """Adaptive integral of ``f`` over [0, inf).

    ``decay_scale`` sets the rational change of variables
    ``omega = decay_scale * u / (1 - u)``; pick it near the scale on which
    the integrand decays. With ``period_hint`` or ``breakpoints`` the head
    region [0, 45 * decay_scale] is integrated directly with the panels
    pre-split, and only the far tail goes through the transform.

    ``singular_power`` declares algebraic behavior f ~ omega^p near zero
    (p > -1). Fractional p below 1 is flattened by the substitution
    omega = A * v^q with q = 2 / (p + 1), which plain bisection cannot
    resolve on its own.
    """
    spec = spec or QuadSpec()
    scale = float(decay_scale)
    if scale <= 0:
        raise ValueError("decay_scale must be positive")
    bps = sorted(float(p) for p in breakpoints if p > 0)
    flatten = (singular_power is not None and singular_power < 1.0
               and abs(singular_power - round(singular_power)) > 1e-9)
    if flatten and singular_power <= -1.0:
        raise ValueError("singular_power must exceed -1")

    if bps or (period_hint is not None) or flatten:
        start = max(45.0 * scale, 2.0 * bps[-1] if bps else 0.0)
        if flatten:
            q = 2.0 / (singular_power + 1.0)
            pts = list(bps)
            if period_hint is not None and period_hint > 0:
                step = max(float(period_hint), start / _MAX_INIT_PANELS)
                pts.extend(np.arange(step, start, step).tolist())
            v_pts = tuple((p / start) ** (1.0 / q) for p in pts)

            def head_integrand(v):
                w = start * v**q
                return (np.asarray(f(w), dtype=float)
                        * start * q * v ** (q - 1.0))

            head = integrate_interval(head_integrand, 0.0, 1.0, spec,
                                      breakpoints=v_pts)
        else:
            head = integrate_interval(f, 0.0, start, spec,
                                      breakpoints=bps,
                                      period_hint=period_hint)
    else:
        start = 0.0
        head = QuadResult(0.0, 0.0, 0)

    def mapped(u):
        one_minus = 1.0 - u
        w = start + scale * u / one_minus
        return np.asarray(f(w), dtype=float) * scale / one_minus**2

    tail = integrate_interval(mapped, 0.0, 1.0, spec)
    return QuadResult(head.value + tail.value, head.error + tail.error,
                      head.evals + tail.evals)


def integrate_triangle(f, tau, spec=None):
    """Iterated adaptive integral of ``f(t, tp)`` over 0 <= tp <= t <= tau.

    ``f`` is called with a scalar ``t`` and an array of ``tp`` values.
    """
    spec = spec or QuadSpec()
    tau = float(tau)
    if tau <= 0:
        raise ValueError("tau must be positive")
    inner_spec = QuadSpec(rel_tol=0.5 * spec.rel_tol,
                          abs_tol=max(spec.abs_tol / (2.0 * tau), 1e-300),
                          max_evals=spec.max_evals)
    tracker = {"err": 0.0, "evals": 0}

    def outer(ts):
        ts = np.atleast_1d(np.asarray(ts, dtype=float))
        out = np.empty_like(ts)
        for i, t in enumerate(ts):
            if t <= 0.0:
                out[i] = 0.0
                continue
            r = integrate_interval(lambda tp, _t=float(t): f(_t, tp),
                                   0.0, float(t), inner_spec)
            out[i] = r.value
            tracker["err"] = max(tracker["err"], r.error)
            tracker["evals"] += r.evals
        return out

    res = integrate_interval(outer, 0.0, tau, spec)
    return QuadResult(res.value, res.error + tau * tracker["err"],
                      res.evals + tracker["evals"])


def reduce_triangle(g, tau, spec=None, *, period_hint=None):
    """Triangle integral of an integrand depending on ``tp`` only.

    Uses the exact identity
    ``int_0^tau dt int_0^t dtp g(tp) = int_0^tau (tau - tp) g(tp) dtp``.
    """
    tau = float(tau)
    if tau <= 0:
        raise ValueError("tau must be positive")

    def weighted(tp):
        return (tau - tp) * np.asarray(g(tp), dtype=float)

    return integrate_interval(weighted, 0.0, tau, spec, period_hint=period_hint)

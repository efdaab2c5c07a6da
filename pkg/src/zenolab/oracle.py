"""Exact small-bath validation of the polaron-frame rate formulas.

Builds the dense lab-frame Hamiltonian

    H_L = eps J_z + Delta J_x + sum_k w_k n_k + 2 J_z sum_k g_k (b_k + b_k^+)

on the spin (x) Fock product basis with a per-mode truncation (for j = 1/2
the coupling operator 2 J_z equals sigma_z), prepares the
measurement-conditioned thermal state P exp(-beta H_L) P / Z with P the
projector onto the top J_z eigenstate, and iterates projective survival
measurements, optionally undoing the bare system evolution exp(-i H_SL tau)
before each one. ``polaron_prediction`` evaluates the matching polaron-frame
rate with the discrete-mode phase sums so the two routes are directly
comparable.

All propagation uses Hermitian eigendecompositions: Hamiltonians are real
symmetric by construction (couplings g_k = sqrt(|g_k|^2) are taken real;
coupling phases are unobservable in the quantities computed here).
"""

from __future__ import annotations

import math
import warnings as _warnings
from dataclasses import dataclass
from functools import reduce
from typing import NamedTuple

import numpy as np

from .bath import DiscreteModes, InfluencePhases, OhmicFamily, Temperature
from .errors import DegenerateNormalization, DimensionCap, TruncationWarning
from .strong_rates import SystemParams, gamma_n_strong, gamma_strong

_BOUNDARY_TOL = 1e-4


@dataclass(frozen=True)
class ExactModel:
    """Lab-frame model: system, discrete modes, truncation and temperature."""

    sys: SystemParams
    modes: DiscreteModes
    n_max: int = 8
    temp: Temperature = Temperature(beta=10.0)
    remove_system_evolution: bool = False
    dim_cap: int = 4096

    def __post_init__(self):
        if self.n_max < 2:
            raise ValueError("need at least 2 Fock levels per mode")
        if not math.isfinite(self.temp.beta):
            raise ValueError("the exact construction needs finite beta; "
                             "approximate zero temperature with a large one "
                             "(see suggest_beta)")

    @property
    def spin_dim(self) -> int:
        return int(round(2.0 * self.sys.j)) + 1

    @property
    def bath_dim(self) -> int:
        return self.n_max ** len(self.modes.modes)

    @property
    def dim(self) -> int:
        return self.spin_dim * self.bath_dim


@dataclass(frozen=True)
class ExactRun:
    """Survival record of one repeated-measurement simulation."""

    survivals: tuple
    rate: float
    boundary_weight: float
    truncated: bool


class PolaronPrediction(NamedTuple):
    survival: float
    gamma: float


def _spin_operators(j: float):
    dim = int(round(2.0 * j)) + 1
    m = j - np.arange(dim)
    jz = np.diag(m)
    jp = np.zeros((dim, dim))
    for i in range(1, dim):
        jp[i - 1, i] = math.sqrt(j * (j + 1) - m[i] * (m[i] + 1))
    jx = 0.5 * (jp + jp.T)
    return jz, jx


def _lowering(n: int) -> np.ndarray:
    a = np.zeros((n, n))
    for i in range(1, n):
        a[i - 1, i] = math.sqrt(i)
    return a


def _lift(op: np.ndarray, k: int, n_modes: int, n: int) -> np.ndarray:
    ops = [np.eye(n)] * n_modes
    ops[k] = op
    return reduce(np.kron, ops)


def _check_cap(model: ExactModel):
    if model.dim > model.dim_cap:
        raise DimensionCap(
            f"dense dimension {model.dim} exceeds the cap {model.dim_cap}")


def build_hamiltonian(model: ExactModel):
    """Dense real-symmetric (H_L, H_SL) on the spin (x) Fock basis."""
    _check_cap(model)
    jz, jx = _spin_operators(model.sys.j)
    h_spin = model.sys.epsilon * jz + model.sys.delta * jx
    n_modes = len(model.modes.modes)
    n = model.n_max
    if n_modes == 0:
        return h_spin.copy(), h_spin.copy()
    eye_bath = np.eye(model.bath_dim)
    h_sl = np.kron(h_spin, eye_bath)
    h_bath = np.zeros((model.bath_dim, model.bath_dim))
    coupling = np.zeros_like(h_bath)
    for k, (w, g2) in enumerate(model.modes.modes):
        a = _lowering(n)
        h_bath += w * _lift(a.T @ a, k, n_modes, n)
        coupling += math.sqrt(g2) * _lift(a + a.T, k, n_modes, n)
    h_l = (h_sl + np.kron(np.eye(model.spin_dim), h_bath)
           + np.kron(2.0 * jz, coupling))
    return h_l, h_sl


def _thermal_matrix(evals: np.ndarray, vecs: np.ndarray, beta: float):
    # shifted by the ground energy; the shift cancels after normalization
    w = np.exp(-beta * (evals - evals[0]))
    return (vecs * w) @ vecs.T


def correlated_initial_state(model: ExactModel,
                             global_gibbs: bool = False) -> np.ndarray:
    """Measurement-conditioned thermal state on the top-Jz sector.

    Default: Gibbs state of the sector-projected Hamiltonian P H_L P, i.e.
    the bath thermalized around the pinned spin state. This is the state
    whose dynamics the polaron-frame rate formulas describe, and at
    ``delta = 0`` it coincides exactly with the projected global Gibbs
    state P exp(-beta H_L) P / Z.

    ``global_gibbs=True`` selects that literal global construction instead.
    The two differ by tunneling admixtures of other-sector eigenstates; at
    very large beta those admixtures (weight ~ delta^2) outweigh the
    exponentially small thermal occupation of the measured sector and the
    global construction degenerates into a shadow of the true ground
    state, so it is kept only for sensitivity studies.
    """
    _check_cap(model)
    h_l, _ = build_hamiltonian(model)
    db = model.bath_dim
    if global_gibbs:
        evals, vecs = np.linalg.eigh(h_l)
        boltz = _thermal_matrix(evals, vecs, model.temp.beta)
        block = boltz[:db, :db]
    else:
        evals, vecs = np.linalg.eigh(h_l[:db, :db])
        block = _thermal_matrix(evals, vecs, model.temp.beta)
    z = float(np.trace(block))
    if not z > 1e-290:
        raise DegenerateNormalization(
            "projected thermal weight underflowed; reduce beta or improve "
            "the truncation")
    rho = np.zeros_like(h_l)
    rho[:db, :db] = 0.5 * (block + block.T) / z
    return rho


def _boundary_mask(model: ExactModel) -> np.ndarray:
    """Diagonal mask of basis states with any mode at the top Fock level."""
    n_modes = len(model.modes.modes)
    if n_modes == 0:
        return np.zeros(model.dim, dtype=bool)
    idx = np.arange(model.bath_dim)
    hit = np.zeros(model.bath_dim, dtype=bool)
    for _ in range(n_modes):
        hit |= (idx % model.n_max) == model.n_max - 1
        idx //= model.n_max
    return np.tile(hit, model.spin_dim)


def propagator(model: ExactModel, tau: float) -> np.ndarray:
    """One-interval propagator exp(-i H_L tau), with the bare system
    evolution undone first when the model requests removal."""
    _check_cap(model)
    h_l, _ = build_hamiltonian(model)
    evals, vecs = np.linalg.eigh(h_l)
    u = (vecs * np.exp(-1j * evals * tau)) @ vecs.T
    if model.remove_system_evolution:
        jz, jx = _spin_operators(model.sys.j)
        h_spin = model.sys.epsilon * jz + model.sys.delta * jx
        se, sv = np.linalg.eigh(h_spin)
        u_undo = (sv * np.exp(1j * se * tau)) @ sv.T
        u = np.kron(u_undo, np.eye(model.bath_dim)) @ u
    return u


def exact_survival(model: ExactModel, tau: float, n_meas: int = 1) -> ExactRun:
    """Repeated projective measurements on the exactly evolved state."""
    tau = float(tau)
    if tau <= 0:
        raise ValueError("tau must be positive")
    n_meas = int(n_meas)
    if n_meas < 1:
        raise ValueError("need at least one measurement")
    u = propagator(model, tau)
    rho = correlated_initial_state(model).astype(complex)
    db = model.bath_dim
    mask = _boundary_mask(model)
    survivals = []
    boundary = 0.0
    for _ in range(n_meas):
        rho = u @ rho @ u.conj().T
        diag = np.real(np.diag(rho))
        boundary = max(boundary, float(diag[mask].sum()))
        s = float(diag[:db].sum())
        survivals.append(s)
        if not s > 1e-290:
            raise DegenerateNormalization("survival probability vanished")
        nxt = np.zeros_like(rho)
        nxt[:db, :db] = rho[:db, :db] / s
        rho = nxt
    truncated = boundary > _BOUNDARY_TOL
    if truncated:
        _warnings.warn(
            f"boundary Fock weight {boundary:.2e} exceeds {_BOUNDARY_TOL:g}; "
            "increase n_max", TruncationWarning, stacklevel=2)
    rate = -math.log(survivals[0]) / tau
    return ExactRun(tuple(survivals), rate, boundary, truncated)


def polaron_prediction(model: ExactModel, tau: float) -> PolaronPrediction:
    """Polaron-frame prediction with the matching discrete-mode sums."""
    ip = InfluencePhases(model.modes, model.temp)
    if model.remove_system_evolution:
        res = gamma_n_strong(model.sys, ip, tau)
    else:
        res = gamma_strong(model.sys, ip, tau)
    return PolaronPrediction(res.survival_one, res.gamma)


def discretize_bath(sd: OhmicFamily, k_modes: int,
                    omega_max: float | None = None) -> DiscreteModes:
    """Midpoint-rule mode list: w_k at bin centers, |g_k|^2 = J(w_k) dw."""
    if not isinstance(sd, OhmicFamily):
        raise TypeError("discretize_bath needs a continuum density")
    k_modes = int(k_modes)
    if k_modes < 1:
        raise ValueError("need at least one mode")
    top = 5.0 * sd.omega_c if omega_max is None else float(omega_max)
    if top <= 0:
        raise ValueError("omega_max must be positive")
    dw = top / k_modes
    centers = (np.arange(k_modes) + 0.5) * dw
    g2 = sd.density(centers) * dw
    return DiscreteModes(tuple(zip(centers.tolist(), g2.tolist())))


def suggest_beta(model: ExactModel, weight_tol: float = 1e-12) -> float:
    """Beta large enough that excited sector levels weigh < weight_tol.

    Uses the gap above the ground state of the sector-projected
    Hamiltonian, matching the default initial-state construction.
    """
    _check_cap(model)
    h_l, _ = build_hamiltonian(model)
    db = model.bath_dim
    evals = np.linalg.eigvalsh(h_l[:db, :db])
    above = evals[evals > evals[0] + 1e-12]
    if above.size == 0:
        return 1e6
    return math.log(1.0 / weight_tol) / float(above[0] - evals[0])

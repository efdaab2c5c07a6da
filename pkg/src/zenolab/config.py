"""Run configuration: flat ``key = value`` files plus override mappings.

Config files are UTF-8 text, one ``key = value`` per line, ``#`` comments.
Values given on the command line override file values. Every field is
validated before any computation starts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from pathlib import Path

from .bath import DiscreteModes, OhmicFamily, Temperature
from .errors import ConfigError
from .quad import QuadSpec
from .strong_rates import SystemParams

VARIANTS = ("strong", "strong_mod", "weak_pop", "weak_filter", "oracle",
            "synthetic")


def _parse_bool(raw: str) -> bool:
    low = raw.strip().lower()
    if low in ("true", "yes", "1", "on"):
        return True
    if low in ("false", "no", "0", "off"):
        return False
    raise ConfigError(f"not a boolean: {raw!r}")


def _parse_beta(raw: str) -> float:
    low = str(raw).strip().lower()
    if low in ("inf", "infinity"):
        return math.inf
    return float(raw)


@dataclass
class RunConfig:
    variant: str = "strong"
    epsilon: float = 1.0
    delta: float = 0.05
    j: float = 0.5
    G: float = 1.0
    s: float = 1.0
    omega_c: float = 10.0
    modes_file: str = ""
    beta: float = math.inf
    tau_lo: float = 0.1
    tau_hi: float = 3.0
    tau_points: int = 30
    rel_tol: float = 1e-7
    phase_rel_tol: float = 1e-9
    n_spins: int = 1
    name: str = "curve"
    # oracle-specific
    n_max: int = 8
    n_meas: int = 1
    tau: float = 1.0
    removal: bool = False
    oracle_tol: float = 0.05
    dim_cap: int = 4096
    # transition search
    grid_n: int = 64
    refine_tol: float = 1e-4

    def validate(self):
        if self.variant not in VARIANTS:
            raise ConfigError(f"unknown variant {self.variant!r}; "
                              f"expected one of {', '.join(VARIANTS)}")
        if not self.tau_lo < self.tau_hi:
            raise ConfigError("tau range must satisfy lo < hi")
        if self.tau_lo <= 0:
            raise ConfigError("tau_lo must be positive")
        if self.tau_points < 2:
            raise ConfigError("tau_points must be at least 2")
        if self.rel_tol <= 0 or self.phase_rel_tol <= 0:
            raise ConfigError("tolerances must be positive")
        if self.G < 0:
            raise ConfigError("G must be nonnegative")
        if self.s <= 0 or self.omega_c <= 0:
            raise ConfigError("need s > 0 and omega_c > 0")
        if self.delta < 0:
            raise ConfigError("delta must be nonnegative")
        two_j = 2.0 * self.j
        if abs(two_j - round(two_j)) > 1e-9 or round(two_j) < 1:
            raise ConfigError("j must be a positive half-integer")
        if not self.beta > 0:
            raise ConfigError("beta must be positive (or inf)")
        if self.n_spins < 1:
            raise ConfigError("n_spins must be a positive integer")
        if self.variant == "strong_mod" and self.epsilon == 0:
            raise ConfigError("strong_mod needs a nonzero epsilon")
        if self.variant == "oracle":
            if not math.isfinite(self.beta):
                raise ConfigError("the oracle needs a finite beta")
            if self.n_max < 2:
                raise ConfigError("n_max must be at least 2")
            if self.n_meas < 1:
                raise ConfigError("n_meas must be at least 1")
            if self.tau <= 0:
                raise ConfigError("tau must be positive")
        if self.grid_n < 8:
            raise ConfigError("grid_n must be at least 8")
        if self.refine_tol <= 0:
            raise ConfigError("refine_tol must be positive")
        return self


_FIELD_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _coerce(key: str, raw: str):
    if key not in _FIELD_TYPES:
        raise ConfigError(f"unknown config key {key!r}")
    kind = _FIELD_TYPES[key]
    try:
        if key == "beta":
            return _parse_beta(raw)
        if kind == "bool":
            return _parse_bool(raw)
        if kind == "int":
            return int(raw)
        if kind == "float":
            return float(raw)
        return str(raw)
    except ValueError as exc:
        raise ConfigError(f"bad value for {key}: {raw!r}") from exc


def parse_config_text(text: str) -> dict:
    """Raw key -> string mapping from a flat config document."""
    raw: dict = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = stripped.split("=", 1)
        raw[key.strip()] = value.strip()
    return raw


def load_config(path: str | None = None, overrides: dict | None = None
                ) -> RunConfig:
    raw: dict = {}
    if path:
        p = Path(path)
        if not p.is_file():
            raise ConfigError(f"config file not found: {path}")
        raw.update(parse_config_text(p.read_text(encoding="utf-8")))
    if overrides:
        raw.update({k: str(v) for k, v in overrides.items()})
    cfg = RunConfig()
    for key, value in raw.items():
        setattr(cfg, key, _coerce(key, value))
    return cfg.validate()


def load_modes_file(path: str) -> DiscreteModes:
    """Mode list file: one 'omega g2' pair per line, '#' comments."""
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"modes file not found: {path}")
    pairs = []
    for lineno, line in enumerate(p.read_text(encoding="utf-8").splitlines(),
                                  start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ConfigError(f"{path}:{lineno}: expected 'omega g2'")
        try:
            pairs.append((float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad number") from exc
    try:
        return DiscreteModes(tuple(pairs))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def build_spectral(cfg: RunConfig):
    if cfg.modes_file:
        return load_modes_file(cfg.modes_file)
    return OhmicFamily(G=cfg.G, s=cfg.s, omega_c=cfg.omega_c)


def build_system(cfg: RunConfig) -> SystemParams:
    return SystemParams(epsilon=cfg.epsilon, delta=cfg.delta, j=cfg.j)


def build_temperature(cfg: RunConfig) -> Temperature:
    return Temperature(beta=cfg.beta)


def build_rate_spec(cfg: RunConfig) -> QuadSpec:
    return QuadSpec(rel_tol=cfg.rel_tol, abs_tol=1e-12)

"""Command-line front end.

Subcommands: ``rate-curve``, ``figure``, ``transitions``, ``oracle-check``,
``sweep``. Exit codes: 0 success, 2 configuration error, 3 numerical
failure (including an oracle check outside tolerance), 4 dimension cap.

Outputs are CSV files with the exact header ``tau,gamma,regime,err_estimate``
plus a JSON manifest carrying the full configuration, package version, wall
time and any warnings. Numbers are written in shortest round-trip form and
files are written atomically (temp file + rename), so identical
configurations produce byte-identical CSVs.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__
from .bath import InfluencePhases
from .config import (RunConfig, build_rate_spec, build_spectral, build_system,
                     build_temperature, load_config, parse_config_text)
from .errors import (ConfigError, DegenerateNormalization, DimensionCap,
                     QuadratureFailure, ZenoLabError)
from .oracle import ExactModel, exact_survival, polaron_prediction
from .presets import PRESETS
from .regimes import RateCurve, classify, find_transitions
from .strong_rates import gamma_n_strong, gamma_strong
from .weak_rates import FilterEval, _filter_rate_result, _popdecay_result

CSV_HEADER = "tau,gamma,regime,err_estimate"

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_DIMENSION = 4


def _atomic_write(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + f".tmp{os.getpid()}")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def _fmt(x: float) -> str:
    return repr(float(x))


def _manifest(cfg_dict: dict, wall: float, warnings: list) -> str:
    doc = {"config": cfg_dict, "version": __version__,
           "wall_seconds": wall, "warnings": warnings}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _config_dict(cfg: RunConfig) -> dict:
    out = dict(vars(cfg))
    if math.isinf(out["beta"]):
        out["beta"] = "inf"
    return out


def _point_evaluator(cfg: RunConfig):
    """tau -> (gamma, err_estimate, warnings tuple) for the chosen variant."""
    spec = build_rate_spec(cfg)
    if cfg.variant == "synthetic":
        return lambda tau: (2.0 + math.sin(tau), 0.0, ())
    sd = build_spectral(cfg)
    temp = build_temperature(cfg)
    if cfg.variant in ("strong", "strong_mod"):
        sys_p = build_system(cfg)
        ip = InfluencePhases(sd, temp, rel_tol=cfg.phase_rel_tol)
        fn = gamma_strong if cfg.variant == "strong" else gamma_n_strong

        def ev(tau):
            r = fn(sys_p, ip, tau, spec)
            return r.gamma, r.error, r.warnings

        return ev
    if cfg.variant == "weak_pop":
        def ev(tau):
            r = _popdecay_result(cfg.epsilon, sd, tau, spec)
            return r.value, r.error, ()

        return ev
    if cfg.variant == "weak_filter":
        fe = FilterEval(build_system(cfg), spec)

        def ev(tau):
            r = _filter_rate_result(fe, sd, temp, tau, spec)
            return cfg.n_spins * r.value, cfg.n_spins * r.error, ()

        return ev
    if cfg.variant == "oracle":
        sys_p = build_system(cfg)
        model = ExactModel(sys=sys_p, modes=sd, n_max=cfg.n_max, temp=temp,
                           remove_system_evolution=cfg.removal,
                           dim_cap=cfg.dim_cap)

        def ev(tau):
            run = exact_survival(model, tau, 1)
            warns = (("fock-truncation",) if run.truncated else ())
            return run.rate, 0.0, warns

        return ev
    raise ConfigError(f"variant {cfg.variant!r} has no curve evaluator")


def _compute_curve(cfg: RunConfig, threads: int):
    taus = np.linspace(cfg.tau_lo, cfg.tau_hi, cfg.tau_points)
    ev = _point_evaluator(cfg)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(ev, taus))
    else:
        rows = [ev(t) for t in taus]
    gammas = [r[0] for r in rows]
    errs = [r[1] for r in rows]
    warned = sorted({w for r in rows for w in r[2]})
    if len(taus) >= 3:
        labeled = classify(RateCurve(tuple(taus), tuple(gammas), cfg.variant))
        labels = labeled.labels
    else:
        labels = ("Stationary",) * len(taus)
    return taus, gammas, labels, errs, warned


def _curve_csv(taus, gammas, labels, errs) -> str:
    lines = [CSV_HEADER]
    for t, g, lab, e in zip(taus, gammas, labels, errs):
        lines.append(f"{_fmt(t)},{_fmt(g)},{lab},{_fmt(e)}")
    return "\n".join(lines) + "\n"


def cmd_rate_curve(cfg: RunConfig, out_dir: Path, threads: int,
                   fmt: str = "csv") -> int:
    start = time.perf_counter()
    taus, gammas, labels, errs, warned = _compute_curve(cfg, threads)
    if fmt == "json":
        doc = {"tau": [float(t) for t in taus], "gamma": gammas,
               "regime": list(labels), "err_estimate": errs}
        _atomic_write(out_dir / f"{cfg.name}.json",
                      json.dumps(doc, indent=2) + "\n")
    else:
        _atomic_write(out_dir / f"{cfg.name}.csv",
                      _curve_csv(taus, gammas, labels, errs))
    wall = time.perf_counter() - start
    _atomic_write(out_dir / f"{cfg.name}.manifest.json",
                  _manifest(_config_dict(cfg), wall, warned))
    return EXIT_OK


def cmd_figure(preset_name: str, out_dir: Path, threads: int,
               tau_points: int | None = None) -> int:
    if preset_name not in PRESETS:
        raise ConfigError(f"unknown preset {preset_name!r}; "
                          f"choose from {', '.join(sorted(PRESETS))}")
    preset = PRESETS[preset_name]
    start = time.perf_counter()
    warned: list = []
    curve_meta = []
    for curve in preset.curves:
        raw = {**preset.base, **curve.overrides,
               "variant": preset.variant}
        if tau_points is not None:
            raw["tau_points"] = tau_points
        cfg = load_config(None, {k: str(v) for k, v in raw.items()})
        safe = curve.label.replace("=", "").replace(".", "p")
        cfg.name = f"{preset.name}_{safe}"
        taus, gammas, labels, errs, w = _compute_curve(cfg, threads)
        _atomic_write(out_dir / f"{cfg.name}.csv",
                      _curve_csv(taus, gammas, labels, errs))
        warned.extend(w)
        curve_meta.append({"file": f"{cfg.name}.csv", "label": curve.label,
                           "style": curve.style,
                           "params": _config_dict(cfg)})
    wall = time.perf_counter() - start
    manifest_cfg = {"preset": preset.name, "variant": preset.variant,
                    "curves": curve_meta}
    _atomic_write(out_dir / f"{preset.name}.manifest.json",
                  _manifest(manifest_cfg, wall, sorted(set(warned))))
    return EXIT_OK


def cmd_transitions(cfg: RunConfig, out_dir: Path) -> int:
    start = time.perf_counter()
    ev = _point_evaluator(cfg)
    transitions = find_transitions(lambda t: ev(t)[0],
                                   (cfg.tau_lo, cfg.tau_hi),
                                   grid_n=cfg.grid_n,
                                   refine_tol=cfg.refine_tol)
    doc = {"config": _config_dict(cfg), "version": __version__,
           "wall_seconds": time.perf_counter() - start,
           "transitions": [{"tau_star": t.tau_star, "kind": t.kind,
                            "error_bound": t.error_bound}
                           for t in transitions]}
    _atomic_write(out_dir / f"{cfg.name}.transitions.json",
                  json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_oracle_check(cfg: RunConfig, out_dir: Path) -> int:
    start = time.perf_counter()
    sd = build_spectral(cfg)
    model = ExactModel(sys=build_system(cfg), modes=sd, n_max=cfg.n_max,
                       temp=build_temperature(cfg),
                       remove_system_evolution=cfg.removal,
                       dim_cap=cfg.dim_cap)
    run = exact_survival(model, cfg.tau, cfg.n_meas)
    pred = polaron_prediction(model, cfg.tau)
    s_exact = run.survivals[0]
    deficit_exact = 1.0 - s_exact
    deficit_pred = 1.0 - pred.survival
    abs_diff = abs(deficit_exact - deficit_pred)
    rel = abs_diff / deficit_pred if deficit_pred > 0 else 0.0
    ok = rel <= cfg.oracle_tol
    doc = {"config": _config_dict(cfg), "version": __version__,
           "wall_seconds": time.perf_counter() - start,
           "s_exact": s_exact, "s_pred": pred.survival,
           "gamma_pred": pred.gamma, "rate_exact": run.rate,
           "abs_discrepancy": abs_diff, "rel_deficit_discrepancy": rel,
           "boundary_weight": run.boundary_weight,
           "truncated": run.truncated, "tolerance": cfg.oracle_tol,
           "pass": ok}
    _atomic_write(out_dir / f"{cfg.name}.oracle.json",
                  json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if ok else EXIT_NUMERICAL


_SWEEPABLE = ("G", "omega_c", "j", "delta", "epsilon", "beta", "n_spins", "s")


def cmd_sweep(config_path: str | None, overrides: dict, out_dir: Path,
              threads: int) -> int:
    raw: dict = {}
    if config_path:
        p = Path(config_path)
        if not p.is_file():
            raise ConfigError(f"config file not found: {config_path}")
        raw.update(parse_config_text(p.read_text(encoding="utf-8")))
    raw.update(overrides)
    lists = {}
    for key in _SWEEPABLE:
        if key in raw and "," in str(raw[key]):
            lists[key] = [v.strip() for v in str(raw[key]).split(",")]
    if not lists:
        raise ConfigError("sweep needs at least one comma-separated "
                          f"parameter among: {', '.join(_SWEEPABLE)}")
    start = time.perf_counter()
    combos = []
    keys = sorted(lists)
    for values in itertools.product(*(lists[k] for k in keys)):
        combo = dict(raw)
        combo.update(dict(zip(keys, values)))
        cfg = load_config(None, combo)
        stamp = "__".join(f"{k}{v}" for k, v in zip(keys, values))
        cfg.name = f"{cfg.name}__{stamp}".replace(".", "p")
        taus, gammas, labels, errs, _ = _compute_curve(cfg, threads)
        _atomic_write(out_dir / f"{cfg.name}.csv",
                      _curve_csv(taus, gammas, labels, errs))
        combos.append({"file": f"{cfg.name}.csv",
                       "values": dict(zip(keys, values))})
    doc = {"config": {k: str(v) for k, v in raw.items()}, "sweep": combos,
           "version": __version__,
           "wall_seconds": time.perf_counter() - start, "warnings": []}
    _atomic_write(out_dir / "sweep.manifest.json",
                  json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _default_threads() -> int:
    env = os.environ.get("ZENO_LAB_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zenolab",
        description="Effective decay rates of repeatedly measured "
                    "spin-boson systems")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, config=True):
        if config:
            p.add_argument("--config", default=None,
                           help="flat key = value config file")
            p.add_argument("--set", action="append", default=[],
                           metavar="KEY=VALUE", dest="sets",
                           help="override a single config key (repeatable)")
            p.add_argument("--tol", type=float, default=None,
                           help="relative quadrature tolerance for rates")
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--threads", type=int, default=_default_threads(),
                       help="concurrent curve-point evaluations "
                            "(default: ZENO_LAB_THREADS or 1)")

    p_rate = sub.add_parser("rate-curve", help="rate vs tau curve")
    common(p_rate)
    p_rate.add_argument("--format", choices=("csv", "json"), default="csv")

    p_fig = sub.add_parser("figure", help="built-in figure preset family")
    p_fig.add_argument("--preset", required=True,
                       help=f"one of: {', '.join(sorted(PRESETS))}")
    p_fig.add_argument("--points", type=int, default=None,
                       help="override the preset tau grid size")
    common(p_fig, config=False)

    p_tr = sub.add_parser("transitions", help="locate regime transitions")
    common(p_tr)

    p_or = sub.add_parser("oracle-check",
                          help="exact simulation vs polaron prediction")
    common(p_or)

    p_sw = sub.add_parser("sweep",
                          help="Cartesian product over comma-separated "
                               "parameter lists")
    common(p_sw)
    return ap


def _overrides(args) -> dict:
    out = {}
    for item in getattr(args, "sets", []):
        if "=" not in item:
            raise ConfigError(f"--set expects KEY=VALUE, got {item!r}")
        key, value = item.split("=", 1)
        out[key.strip()] = value.strip()
    if getattr(args, "tol", None) is not None:
        out["rel_tol"] = str(args.tol)
    return out


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    out_dir = Path(args.out)
    try:
        if args.command == "figure":
            return cmd_figure(args.preset, out_dir, args.threads, args.points)
        overrides = _overrides(args)
        if args.command == "sweep":
            return cmd_sweep(args.config, overrides, out_dir, args.threads)
        cfg = load_config(args.config, overrides)
        if args.command == "rate-curve":
            return cmd_rate_curve(cfg, out_dir, args.threads, args.format)
        if args.command == "transitions":
            return cmd_transitions(cfg, out_dir)
        if args.command == "oracle-check":
            return cmd_oracle_check(cfg, out_dir)
        raise ConfigError(f"unknown command {args.command!r}")
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DimensionCap as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except (QuadratureFailure, DegenerateNormalization, ZenoLabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()

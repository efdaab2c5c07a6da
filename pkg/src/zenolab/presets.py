"""Built-in figure presets: parameter families as data, not code branches.

Each preset names a rate variant, shared base parameters, and one curve per
(label, line style, overrides) entry. Styles follow the dashed / dot-dashed /
solid convention used throughout the plotted families.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PresetCurve:
    label: str
    style: str
    overrides: dict


@dataclass(frozen=True)
class FigurePreset:
    name: str
    variant: str
    base: dict
    curves: tuple


_GRID = {"tau_lo": 0.05, "tau_hi": 3.0, "tau_points": 60}
_STRONG = {"epsilon": 1.0, "delta": 0.05, "s": 1.0, "omega_c": 10.0,
           "beta": "inf", "j": 0.5, **_GRID}
_WEAK_POP = {"epsilon": 1.0, "s": 1.0, "omega_c": 10.0, "beta": "inf",
             **_GRID}
_WEAK_FILTER = {"epsilon": 1.0, "delta": 0.05, "s": 1.0, "omega_c": 10.0,
                "beta": "inf", "n_spins": 1, **_GRID}

_G_TRIPLE = (
    PresetCurve("G=1", "dashed", {"G": 1.0}),
    PresetCurve("G=1.75", "dotdashed", {"G": 1.75}),
    PresetCurve("G=2.5", "solid", {"G": 2.5}),
)
_WC_TRIPLE = (
    PresetCurve("omega_c=10", "dashed", {"omega_c": 10.0}),
    PresetCurve("omega_c=15", "dotdashed", {"omega_c": 15.0}),
    PresetCurve("omega_c=20", "solid", {"omega_c": 20.0}),
)

PRESETS = {
    "fig1a": FigurePreset("fig1a", "strong", dict(_STRONG), _G_TRIPLE),
    "fig1b": FigurePreset("fig1b", "weak_pop", dict(_WEAK_POP), (
        PresetCurve("G=0.02", "dashed", {"G": 0.02}),
        PresetCurve("G=0.05", "dotdashed", {"G": 0.05}),
        PresetCurve("G=0.1", "solid", {"G": 0.1}),
    )),
    "fig2a": FigurePreset("fig2a", "strong", {**_STRONG, "G": 1.0},
                          _WC_TRIPLE),
    "fig2b": FigurePreset("fig2b", "weak_pop", {**_WEAK_POP, "G": 0.05},
                          _WC_TRIPLE),
    "fig3a": FigurePreset("fig3a", "strong_mod", dict(_STRONG), _G_TRIPLE),
    "fig3b": FigurePreset("fig3b", "weak_filter", dict(_WEAK_FILTER), (
        PresetCurve("G=0.001", "dashed", {"G": 0.001}),
        PresetCurve("G=0.003", "dotdashed", {"G": 0.003}),
        PresetCurve("G=0.005", "solid", {"G": 0.005}),
    )),
    "fig4a": FigurePreset("fig4a", "strong", {**_STRONG, "j": 1.0},
                          _G_TRIPLE),
    "fig4b": FigurePreset("fig4b", "strong", {**_STRONG, "G": 1.5}, (
        PresetCurve("j=0.5", "dashed", {"j": 0.5}),
        PresetCurve("j=1", "dotdashed", {"j": 1.0}),
        PresetCurve("j=2", "solid", {"j": 2.0}),
    )),
    "fig5a": FigurePreset("fig5a", "strong_mod", {**_STRONG, "j": 1.0}, (
        PresetCurve("G=1", "dashed", {"G": 1.0}),
        PresetCurve("G=2.5", "solid", {"G": 2.5}),
    )),
    "fig5b": FigurePreset("fig5b", "weak_filter",
                          {**_WEAK_FILTER, "n_spins": 2}, (
        PresetCurve("G=0.001", "dashed", {"G": 0.001}),
        PresetCurve("G=0.005", "solid", {"G": 0.005}),
    )),
}

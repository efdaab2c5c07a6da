"""Curve-family figure rendering.

Reads the public rate-curve CSV schema (``tau,gamma,regime,err_estimate``)
and draws one styled line per curve: dashed red, dot-dashed magenta and
solid blue, following the convention of the source figure families. Data
is never altered or reordered; the vertex count of each drawn line equals
the CSV row count.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

EXPECTED_HEADER = ["tau", "gamma", "regime", "err_estimate"]

STYLES = {
    "dashed": ("--", "red"),
    "dotdashed": ("-.", "magenta"),
    "solid": ("-", "blue"),
}


class SchemaError(Exception):
    """CSV file missing, malformed, or not in the rate-curve schema."""


@dataclass(frozen=True)
class CurveSpec:
    csv_path: str
    style: str = "solid"
    label: str = ""

    def __post_init__(self):
        if self.style not in STYLES:
            raise ValueError(f"unknown line style {self.style!r}; "
                             f"expected one of {', '.join(STYLES)}")


@dataclass(frozen=True)
class PlotSpec:
    curves: tuple
    output: str
    xlabel: str = r"$\tau$"
    ylabel: str = r"$\Gamma(\tau)$"
    title: str = ""
    fmt: str = ""  # inferred from the output suffix when empty

    def __post_init__(self):
        if not self.curves:
            raise ValueError("need at least one curve")
        fmt = self.fmt or Path(self.output).suffix.lstrip(".").lower()
        if fmt not in ("png", "svg"):
            raise ValueError(f"unsupported format {fmt!r}; use png or svg")
        object.__setattr__(self, "fmt", fmt)


@dataclass(frozen=True)
class RenderReport:
    output: str
    points_per_curve: tuple = field(default_factory=tuple)


def load_curve(path: str):
    """(tau, gamma) arrays from one rate-curve CSV; strict schema check."""
    p = Path(path)
    if not p.is_file():
        raise SchemaError(f"CSV file not found: {path}")
    with p.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file") from None
        if header != EXPECTED_HEADER:
            raise SchemaError(
                f"{path}: header {','.join(header)!r} does not match "
                f"{','.join(EXPECTED_HEADER)!r}")
        taus, gammas = [], []
        for lineno, row in enumerate(reader, start=2):
            if len(row) != 4:
                raise SchemaError(f"{path}:{lineno}: expected 4 columns")
            try:
                taus.append(float(row[0]))
                gammas.append(float(row[1]))
            except ValueError:
                raise SchemaError(
                    f"{path}:{lineno}: non-numeric tau/gamma") from None
    if not taus:
        raise SchemaError(f"{path}: no data rows")
    return taus, gammas


def render(spec: PlotSpec) -> RenderReport:
    """Draw every curve of ``spec`` into one image file."""
    loaded = [(load_curve(c.csv_path), c) for c in spec.curves]
    fig, ax = plt.subplots(figsize=(6.4, 4.2), dpi=150)
    counts = []
    try:
        for (taus, gammas), curve in loaded:
            dashes, color = STYLES[curve.style]
            line, = ax.plot(taus, gammas, linestyle=dashes, color=color,
                            label=curve.label or None, linewidth=1.6)
            counts.append(len(line.get_xdata()))
        ax.set_xlabel(spec.xlabel)
        ax.set_ylabel(spec.ylabel)
        if spec.title:
            ax.set_title(spec.title)
        if any(c.label for c in spec.curves):
            ax.legend(frameon=False)
        ax.margins(x=0.02)
        fig.tight_layout()
        out = Path(spec.output)
        out.parent.mkdir(parents=True, exist_ok=True)
        metadata = {"Date": None} if spec.fmt == "svg" else None
        fig.savefig(out, format=spec.fmt, metadata=metadata)
    finally:
        plt.close(fig)
    return RenderReport(str(spec.output), tuple(counts))

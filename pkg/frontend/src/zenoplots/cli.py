"""Command line: render a preset manifest or explicit curve triples.

Usage:
    plots <preset-manifest.json> [--out IMAGE] [--format png|svg]
    plots --csv a.csv --style dashed --label "G=1" \
          [--csv b.csv --style solid --label "G=2.5" ...] --out IMAGE

Exit codes: 0 on success, 1 on missing/ill-formed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .plots import CurveSpec, PlotSpec, SchemaError, render


def _curves_from_manifest(manifest_path: Path):
    try:
        doc = json.loads(manifest_path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read manifest {manifest_path}: {exc}")
    entries = doc.get("config", {}).get("curves", [])
    if not entries:
        raise SchemaError(f"{manifest_path}: manifest lists no curves")
    base = manifest_path.parent
    curves = []
    for entry in entries:
        try:
            curves.append(CurveSpec(csv_path=str(base / entry["file"]),
                                    style=entry.get("style", "solid"),
                                    label=entry.get("label", "")))
        except (KeyError, ValueError) as exc:
            raise SchemaError(f"{manifest_path}: bad curve entry: {exc}")
    name = doc.get("config", {}).get("preset") or manifest_path.stem
    return tuple(curves), base / f"{name}.png"


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="plots",
        description="Render rate-curve CSV families into a styled figure")
    ap.add_argument("manifest", nargs="?", default=None,
                    help="preset manifest JSON emitted alongside the CSVs")
    ap.add_argument("--csv", action="append", default=[],
                    help="curve CSV path (repeatable)")
    ap.add_argument("--style", action="append", default=[],
                    choices=("dashed", "dotdashed", "solid"),
                    help="line style for the matching --csv")
    ap.add_argument("--label", action="append", default=[],
                    help="legend label for the matching --csv")
    ap.add_argument("--out", default=None, help="output image path")
    ap.add_argument("--format", choices=("png", "svg"), default=None)
    ap.add_argument("--title", default="")
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.manifest is not None:
            if args.csv:
                raise SchemaError("pass either a manifest or --csv triples, "
                                  "not both")
            curves, default_out = _curves_from_manifest(Path(args.manifest))
        else:
            if not args.csv:
                raise SchemaError("nothing to plot: give a manifest or "
                                  "--csv entries")
            if len(args.style) != len(args.csv) or \
                    len(args.label) != len(args.csv):
                raise SchemaError("--csv, --style and --label must be "
                                  "repeated the same number of times")
            curves = tuple(CurveSpec(c, s, l) for c, s, l in
                           zip(args.csv, args.style, args.label))
            default_out = Path(args.csv[0]).with_suffix(".png")
        out = Path(args.out) if args.out else default_out
        if args.format:
            out = out.with_suffix(f".{args.format}")
        spec = PlotSpec(curves=curves, output=str(out), title=args.title,
                        fmt=args.format or "")
        report = render(spec)
    except (SchemaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {report.output} "
          f"({', '.join(str(n) for n in report.points_per_curve)} points)")
    return 0


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()

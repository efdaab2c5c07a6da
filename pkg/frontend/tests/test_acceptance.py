"""Secondary acceptance: render every figure preset emitted by the engine.

Generates the CSV families with the primary CLI (coarse tau grids keep the
run quick; the curve COUNT per preset is what the captions pin down), then
renders each manifest and checks the drawn curves one-for-one.
"""

import json

import pytest

from zenolab.cli import main as engine_main
from zenoplots.cli import main as plots_main
from zenoplots.plots import CurveSpec, PlotSpec, SchemaError, render

EXPECTED_CURVES = {
    "fig1a": 3, "fig1b": 3, "fig2a": 3, "fig2b": 3, "fig3a": 3,
    "fig3b": 3, "fig4a": 3, "fig4b": 3, "fig5a": 2, "fig5b": 2,
}


@pytest.fixture(scope="module")
def preset_outputs(tmp_path_factory):
    root = tmp_path_factory.mktemp("presets")
    for name in EXPECTED_CURVES:
        out = root / name
        assert engine_main(["figure", "--preset", name, "--out", str(out),
                            "--points", "8"]) == 0
    return root


def test_all_presets_render(preset_outputs):
    for name, n_curves in EXPECTED_CURVES.items():
        manifest = preset_outputs / name / f"{name}.manifest.json"
        assert plots_main([str(manifest)]) == 0
        image = preset_outputs / name / f"{name}.png"
        assert image.is_file() and image.stat().st_size > 0
        doc = json.loads(manifest.read_text(encoding="utf-8"))
        assert len(doc["config"]["curves"]) == n_curves
    print(f"PASS criterion 11: all {len(EXPECTED_CURVES)} presets render "
          "with caption-matching curve counts")


def test_vertex_counts_match_rows(preset_outputs):
    manifest = preset_outputs / "fig1a" / "fig1a.manifest.json"
    doc = json.loads(manifest.read_text(encoding="utf-8"))
    curves = tuple(CurveSpec(str(preset_outputs / "fig1a" / c["file"]),
                             c["style"], c["label"])
                   for c in doc["config"]["curves"])
    report = render(PlotSpec(curves=curves,
                             output=str(preset_outputs / "check.png")))
    for count, entry in zip(report.points_per_curve, doc["config"]["curves"]):
        csv_rows = (preset_outputs / "fig1a" / entry["file"]).read_text(
            encoding="utf-8").strip().splitlines()
        assert count == len(csv_rows) - 1


def test_schema_violation_fails_nonzero(preset_outputs, tmp_path):
    bad = tmp_path / "broken.csv"
    bad.write_text("tau;gamma\n0.1;0.2\n", encoding="utf-8")
    rc = plots_main(["--csv", str(bad), "--style", "solid", "--label", "x",
                     "--out", str(tmp_path / "broken.png")])
    assert rc != 0
    with pytest.raises(SchemaError):
        render(PlotSpec(curves=(CurveSpec(str(bad), "solid", "x"),),
                        output=str(tmp_path / "broken.png")))

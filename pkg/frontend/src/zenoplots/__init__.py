"""Publication-style rendering of rate-curve CSV families."""

__version__ = "0.1.0"

from .plots import (CurveSpec, PlotSpec, RenderReport, SchemaError,
                    load_curve, render)

__all__ = ["CurveSpec", "PlotSpec", "RenderReport", "SchemaError",
           "load_curve", "render", "__version__"]

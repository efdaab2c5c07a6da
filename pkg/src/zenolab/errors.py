"""Exception and warning types shared across the package."""


class ZenoLabError(Exception):
    """Base class for all package-specific errors."""


class DiscretePointwiseEval(ZenoLabError):
    """A discrete mode list has no pointwise spectral density; sum over modes instead."""


class QuadratureFailure(ZenoLabError):
    """Requested tolerance could not be met within the evaluation budget.

    Carries the best available estimate and the achieved error bound.
    """

    def __init__(self, message, value=float("nan"), error=float("inf")):
        super().__init__(message)
        self.value = value
        self.error = error


class DivergentKappa(ZenoLabError):
    """The indirect-interaction constant diverges (requires Ohmicity s > 0)."""


class DegenerateGrid(ZenoLabError):
    """Too few grid points for slope classification."""


class DimensionCap(ZenoLabError):
    """Requested exact model exceeds the dense-dimension cap."""


class DegenerateNormalization(ZenoLabError):
    """Projected thermal weight underflowed; beta too large for this truncation."""


class ConfigError(ZenoLabError):
    """Invalid run configuration."""


class PerturbativeBreakdown(UserWarning):
    """Second-order treatment questionable: survival deficit is no longer small."""


class TruncationWarning(UserWarning):
    """Fock-space truncation boundary carries non-negligible weight."""

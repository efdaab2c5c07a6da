"""Effective decay rates of repeatedly measured spin-boson systems.

Library + CLI covering strong-coupling polaron-frame rates, weak-coupling
comparison rates, Zeno / anti-Zeno regime analysis, and an exact
small-bath simulator used as a validation oracle.
"""

__version__ = "0.1.0"

from . import errors
from .bath import (DiscreteModes, InfluencePhases, OhmicFamily,
                   SpectralDensity, Temperature, eval_J, kappa)
from .oracle import (ExactModel, ExactRun, PolaronPrediction,
                     build_hamiltonian, correlated_initial_state,
                     discretize_bath, exact_survival, polaron_prediction,
                     propagator, suggest_beta)
from .quad import (QuadResult, QuadSpec, integrate_interval,
                   integrate_semi_infinite, integrate_triangle,
                   reduce_triangle)
from .regimes import (RateCurve, Transition, classify, find_transitions,
                      survival_after_N)
from .strong_rates import (RateResult, SystemParams, gamma_mod_strong,
                           gamma_n_strong, gamma_strong)
from .weak_rates import (FilterEval, filter_Q, gamma_weak_filter,
                         gamma_weak_popdecay)

__all__ = [
    "__version__", "errors",
    "SpectralDensity", "OhmicFamily", "DiscreteModes", "Temperature",
    "InfluencePhases", "eval_J", "kappa",
    "QuadSpec", "QuadResult", "integrate_interval",
    "integrate_semi_infinite", "integrate_triangle", "reduce_triangle",
    "SystemParams", "RateResult", "gamma_strong", "gamma_mod_strong",
    "gamma_n_strong",
    "FilterEval", "gamma_weak_popdecay", "filter_Q", "gamma_weak_filter",
    "RateCurve", "Transition", "classify", "find_transitions",
    "survival_after_N",
    "ExactModel", "ExactRun", "PolaronPrediction", "build_hamiltonian",
    "correlated_initial_state", "exact_survival", "polaron_prediction",
    "discretize_bath", "propagator", "suggest_beta",
]

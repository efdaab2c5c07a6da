import math

import numpy as np
import pytest


@pytest.fixture
def mc_triangle():
    """Monte-Carlo triangle integrator: independent oracle for 2D quadrature.

    Samples the square uniformly and folds across the diagonal so the
    estimate covers 0 <= tp <= t <= tau. Returns (estimate, std error).
    """

    def run(f, tau, n=10**6, seed=0):
        rng = np.random.default_rng(seed)
        a = rng.uniform(0.0, tau, size=n)
        b = rng.uniform(0.0, tau, size=n)
        t = np.maximum(a, b)
        tp = np.minimum(a, b)
        vals = np.asarray(f(t, tp), dtype=float)
        area = 0.5 * tau * tau
        return area * vals.mean(), area * vals.std(ddof=1) / math.sqrt(n)

    return run

"""Shared helpers for the test suite."""

import numpy as np

from haarhankel import RadialFunction


def dyadic_step_profile(values, h=1.0):
    """RadialFunction whose g(r) = f(r)*r equals a dyadic step function.

    ``values`` are the step heights of the rescaled profile on the
    2^m equal cells of [0, 1]; the antiderivative of g is the exact
    piecewise-linear ramp, so coefficient integrals need no quadrature.
    Returns (radial_function, jump_radii).
    """
    values = np.asarray(values, dtype=float)
    n = values.size
    width = h / n
    cum = np.concatenate(([0.0], np.cumsum(values) * width))

    def evaluate(r):
        r = np.asarray(r, dtype=float)
        idx = np.clip(np.floor(r / width).astype(int), 0, n - 1)
        step = np.where((r >= 0.0) & (r < h), values[idx], 0.0)
        return step / np.where(r == 0.0, np.inf, r)

    def g_antiderivative(r):
        r = np.asarray(r, dtype=float)
        rc = np.clip(r, 0.0, h)
        idx = np.clip(np.floor(rc / width).astype(int), 0, n - 1)
        return cum[idx] + values[idx] * (rc - idx * width)

    f = RadialFunction(evaluate=evaluate, g_antiderivative=g_antiderivative)
    return f, width * np.arange(1, n)

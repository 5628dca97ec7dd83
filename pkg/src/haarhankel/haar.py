"""Haar-basis analysis of radial profiles.

A radial input f is turned into g(r) = f(r) * r, truncated to [0, h],
rescaled to the unit interval and expanded over the Haar system: one
scaling coefficient (the mean) plus detail coefficients d_{jk} down to
a chosen level.  Coefficients come from an analytic antiderivative of
g when the input provides one, otherwise from adaptive quadrature.
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import specfun
from .oracle import QuadratureConfig, direct_integral
from .series import TransformOrder

MAX_LEVEL_LIMIT = 30

_COEFF_QUAD = QuadratureConfig(abs_tol=1e-12, rel_tol=1e-12)


@dataclass(frozen=True)
class RadialFunction:
    """A real function of radius r >= 0, in physical units.

    ``evaluate`` must accept floats and numpy arrays elementwise.  The
    optional ``g_antiderivative`` maps r to the integral of
    g(t) = t * f(t) over [0, r]; when present, coefficient integrals
    are exact antiderivative differences instead of quadrature.
    """

    evaluate: Callable
    g_antiderivative: Optional[Callable] = None


@dataclass(frozen=True)
class WaveletCoefficients:
    """Sparse Haar table of a rescaled profile on [0, 1].

    ``scaling`` holds the single unit-support mean {0: c}; ``details``
    maps (j, k) to d_{jk} for 0 <= j <= max_level, 0 <= k < 2^j.  Only
    entries with |d| above ``threshold`` are stored.  ``h`` is the
    physical support length the table was rescaled from.
    """

    h: float
    max_level: int
    scaling: dict
    details: dict
    threshold: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.h) and self.h > 0.0):
            raise ValueError("support length h must be finite and > 0")
        if self.max_level < 0:
            raise ValueError("max_level must be >= 0")
        if self.threshold < 0.0:
            raise ValueError("threshold must be >= 0")
        if set(self.scaling) != {0}:
            raise ValueError("rescaled table carries exactly one scaling entry, k = 0")
        for (j, k) in self.details:
            if not 0 <= j <= self.max_level or not 0 <= k <= 2**j - 1:
                raise ValueError(f"detail index ({j}, {k}) out of range")
        values = list(self.scaling.values()) + list(self.details.values())
        if not all(math.isfinite(v) for v in values):
            raise ValueError("coefficients must be finite")
        if self.threshold > 0.0 and any(
            abs(d) <= self.threshold for d in self.details.values()
        ):
            raise ValueError("stored detail magnitudes must exceed the threshold")
        object.__setattr__(self, "scaling", dict(self.scaling))
        object.__setattr__(self, "details", dict(self.details))


def scaling_coefficient(g, k, antiderivative=None, quad=None):
    """Mean of g over [k, k+1]: the scaling coefficient c_{0k}."""
    k = int(k)
    if antiderivative is not None:
        return float(antiderivative(k + 1.0)) - float(antiderivative(float(k)))
    return direct_integral(g, float(k), k + 1.0, quad or _COEFF_QUAD)


def detail_coefficient(g, j, k, antiderivative=None, quad=None):
    """Detail coefficient d_{jk}: 2^(j/2) * (left-half minus right-half integral)."""
    j, k = int(j), int(k)
    if j < 0 or not 0 <= k <= 2**j - 1:
        raise ValueError("detail index out of range")
    width = 2.0**-j
    lo, mid, hi = k * width, (k + 0.5) * width, (k + 1) * width
    if antiderivative is not None:
        left = float(antiderivative(mid)) - float(antiderivative(lo))
        right = float(antiderivative(hi)) - float(antiderivative(mid))
    else:
        quad = quad or _COEFF_QUAD
        left = direct_integral(g, lo, mid, quad)
        right = direct_integral(g, mid, hi, quad)
    return 2.0 ** (0.5 * j) * (left - right)


def decompose(f, h, max_level, threshold=0.0, order=TransformOrder.ORDER1, quad=None):
    """Haar table of g(r) = f(r) * r truncated to [0, h].

    Parameters
    ----------
    f : RadialFunction
        Physical input; the extra factor r is applied here.
    h : float
        Truncation radius; the profile is rescaled to x = r/h.
    max_level : int
        Finest detail level J (capacity-limited to 30).
    threshold : float
        Details with |d| <= threshold are discarded.
    order : TransformOrder
        Transform the table is destined for; the table itself is
        order-independent, the argument is validated and recorded only
        through the caller's usage.
    quad : QuadratureConfig, optional
        Controls numeric coefficient integration (default 1e-12 abs).
    """
    h = float(h)
    if not (math.isfinite(h) and h > 0.0):
        raise ValueError("h must be finite and > 0")
    max_level = int(max_level)
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    if max_level > MAX_LEVEL_LIMIT:
        raise ValueError(f"max_level {max_level} exceeds capacity limit {MAX_LEVEL_LIMIT}")
    threshold = float(threshold)
    if threshold < 0.0:
        raise ValueError("threshold must be >= 0")
    if not isinstance(order, TransformOrder):
        raise ValueError("order must be a TransformOrder")

    def g_rescaled(x):
        r = h * np.asarray(x, dtype=float)
        return r * np.asarray(f.evaluate(r), dtype=float)

    antiderivative = None
    if f.g_antiderivative is not None:
        antiderivative = lambda x: float(f.g_antiderivative(h * x)) / h

    c0 = scaling_coefficient(g_rescaled, 0, antiderivative, quad)
    details = {}
    for j in range(max_level + 1):
        for k in range(2**j):
            d = detail_coefficient(g_rescaled, j, k, antiderivative, quad)
            if abs(d) > threshold:
                details[(j, k)] = d
    return WaveletCoefficients(
        h=h, max_level=max_level, scaling={0: c0}, details=details, threshold=threshold
    )


def reconstruct(coeffs, x):
    """Partial Haar sum of the rescaled profile at x in [0, 1].

    Atoms are right-continuous, so dyadic breakpoints take the value
    of the interval to their right.
    """
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    parts = []
    for k, c in coeffs.scaling.items():
        if 0.0 <= x - k < 1.0:
            parts.append(c)
    for j in range(coeffs.max_level + 1):
        k = math.floor(x * 2.0**j)
        d = coeffs.details.get((j, k))
        if d is not None:
            t = x * 2.0**j - k
            parts.append(d * 2.0 ** (0.5 * j) * (1.0 if t < 0.5 else -1.0))
    return math.fsum(parts)


def gaussian_radial_function(a):
    """The bell profile f(r) = r * exp(-a^2 r^2) with analytic antiderivative.

    Its g(r) = r^2 exp(-a^2 r^2) integrates in closed form to
    (sqrt(pi)*erf(a r) - 2 a r exp(-a^2 r^2)) / (4 a^3).
    """
    a = float(a)
    if not (math.isfinite(a) and a > 0.0):
        raise ValueError("a must be finite and > 0")
    a2 = a * a

    def evaluate(r):
        r = np.asarray(r, dtype=float)
        return r * np.exp(-a2 * r * r)

    def g_antiderivative(r):
        r = np.asarray(r, dtype=float)
        return (
            math.sqrt(math.pi) * specfun.erf(a * r) - 2.0 * a * r * np.exp(-a2 * r * r)
        ) / (4.0 * a2 * a)

    return RadialFunction(evaluate=evaluate, g_antiderivative=g_antiderivative)


def gaussian_coefficients(a, h, max_level):
    """Closed-form Haar table for the bell profile (no quadrature)."""
    return decompose(gaussian_radial_function(a), h, max_level, threshold=0.0)


def gaussian_exact_transform(a, p):
    """Order-1 transform of the bell profile: p/(4 a^4) * exp(-p^2/(4 a^2))."""
    a = float(a)
    if not (math.isfinite(a) and a > 0.0):
        raise ValueError("a must be finite and > 0")
    p = np.asarray(p, dtype=float)
    out = p / (4.0 * a**4) * np.exp(-p * p / (4.0 * a * a))
    return float(out) if out.ndim == 0 else out


def sampled_radial_function(radii, values):
    """Piecewise-linear f from (r, value) samples, zero beyond the last r."""
    radii = np.asarray(radii, dtype=float)
    values = np.asarray(values, dtype=float)
    if radii.ndim != 1 or radii.shape != values.shape or radii.size == 0:
        raise ValueError("need equal-length, non-empty sample arrays")
    if np.any(radii < 0.0):
        raise ValueError("sample radii must be >= 0")
    if np.any(np.diff(radii) <= 0.0):
        raise ValueError("sample radii must be strictly increasing")
    if not (np.isfinite(radii).all() and np.isfinite(values).all()):
        raise ValueError("samples must be finite")

    def evaluate(r):
        return np.interp(r, radii, values, right=0.0)

    return RadialFunction(evaluate=evaluate)

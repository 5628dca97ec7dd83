"""Independent ground truth by direct quadrature.

The oscillatory Hankel integrand is integrated panel by panel between
successive (approximate) zeros of J_n(p*r), so each panel covers at
most one half-oscillation.  Panels use fixed-order Gauss-Legendre with
one halving refinement as the error estimate; the panel with the worst
estimate is re-split until the summed estimate meets tolerance.
"""

import heapq
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special as _sp

from .series import TransformOrder

_MAX_DEPTH = 50


class IntegrationError(RuntimeError):
    """Adaptive quadrature ran out of budget before converging."""

    def __init__(self, message, estimate, error_bound, interval):
        super().__init__(
            f"{message} on [{interval[0]:g}, {interval[1]:g}]: "
            f"estimate {estimate:.17g}, error bound {error_bound:.3g}"
        )
        self.estimate = estimate
        self.error_bound = error_bound
        self.interval = interval


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and budgets for the quadrature routines.

    ``r_max`` is the truncation radius of the Hankel integral and must
    be set (positive) before calling :func:`direct_hankel`.
    """

    abs_tol: float = 1e-11
    rel_tol: float = 1e-11
    max_panels: int = 100_000
    nodes_per_panel: int = 32
    r_max: float | None = None

    def __post_init__(self):
        if not (self.abs_tol > 0.0 and self.rel_tol > 0.0):
            raise ValueError("tolerances must be > 0")
        if self.max_panels < 1:
            raise ValueError("max_panels must be >= 1")
        if self.nodes_per_panel < 2:
            raise ValueError("nodes_per_panel must be >= 2")
        if self.r_max is not None and not self.r_max > 0.0:
            raise ValueError("r_max must be > 0")


@lru_cache(maxsize=16)
def _gauss_legendre(n):
    return np.polynomial.legendre.leggauss(n)


def _gl_panel(func, lo, hi, n):
    x, w = _gauss_legendre(n)
    half = 0.5 * (hi - lo)
    return half * float(np.dot(w, func(0.5 * (lo + hi) + half * x)))


def _eval_panel(func, lo, hi, n):
    # halved re-evaluation doubles as the error estimate
    coarse = _gl_panel(func, lo, hi, n)
    mid = 0.5 * (lo + hi)
    fine = _gl_panel(func, lo, mid, n) + _gl_panel(func, mid, hi, n)
    return fine, abs(fine - coarse)


def _adaptive(func, edges, cfg):
    n = cfg.nodes_per_panel
    panels = {}
    heap = []
    ident = itertools.count()
    total = 0.0
    total_err = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, err = _eval_panel(func, lo, hi, n)
        i = next(ident)
        panels[i] = (lo, hi, val, err, 0)
        heapq.heappush(heap, (-err, i))
        total += val
        total_err += err

    def best():
        return math.fsum(p[2] for p in sorted(panels.values()))

    while total_err > max(cfg.abs_tol, cfg.rel_tol * abs(total)):
        while heap and heap[0][1] not in panels:
            heapq.heappop(heap)
        _, i = heapq.heappop(heap)
        lo, hi, val, err, depth = panels.pop(i)
        if depth >= _MAX_DEPTH:
            raise IntegrationError(
                "max refinement depth reached", best(), total_err, (lo, hi)
            )
        if len(panels) + 2 > cfg.max_panels:
            panels[i] = (lo, hi, val, err, depth)
            raise IntegrationError(
                "panel budget exhausted", best(), total_err, (lo, hi)
            )
        total -= val
        total_err -= err
        mid = 0.5 * (lo + hi)
        for a, b in ((lo, mid), (mid, hi)):
            v, e = _eval_panel(func, a, b, n)
            j = next(ident)
            panels[j] = (a, b, v, e, depth + 1)
            heapq.heappush(heap, (-e, j))
            total += v
            total_err += e
    return best()


def panel_edges(order, p, r_max):
    """Panel boundaries in [0, r_max]: first-order McMahon zeros of J_n(p*r)."""
    if p <= 0.0:
        return np.array([0.0, r_max])
    n = 1 if order is TransformOrder.ORDER1 else 0
    count = int(p * r_max / math.pi) + 2
    s = np.arange(1, count + 1, dtype=float)
    beta = (s + 0.5 * n - 0.25) * np.pi
    zeros = (beta - (4.0 * n * n - 1.0) / (8.0 * beta)) / p
    zeros = zeros[(zeros > 0.0) & (zeros < r_max * (1.0 - 1e-12))]
    return np.concatenate(([0.0], zeros, [r_max]))


def direct_hankel(f, order, p, cfg, breakpoints=None):
    """Integral over [0, r_max] of f(r) * r * J_n(p*r).

    ``f`` needs an ``evaluate`` attribute accepting float arrays.
    Estimated error is at most max(abs_tol, rel_tol * |result|).
    Known kinks or jumps of f can be passed as ``breakpoints`` so no
    panel straddles one (the halving estimator is blind to a jump it
    never brackets).
    """
    p = float(p)
    if not math.isfinite(p) or p < 0.0:
        raise ValueError("p must be finite and >= 0")
    if cfg.r_max is None:
        raise ValueError("QuadratureConfig.r_max must be set for direct_hankel")
    if order is TransformOrder.ORDER1 and p == 0.0:
        return 0.0
    kernel = _sp.j1 if order is TransformOrder.ORDER1 else _sp.j0

    def integrand(r):
        return np.asarray(f.evaluate(r), dtype=float) * r * kernel(p * r)

    edges = panel_edges(order, p, cfg.r_max)
    if breakpoints is not None:
        cuts = np.asarray(breakpoints, dtype=float)
        cuts = cuts[(cuts > 0.0) & (cuts < cfg.r_max)]
        edges = np.unique(np.concatenate((edges, cuts)))
    if len(edges) - 1 > cfg.max_panels:
        edges = np.concatenate((edges[: cfg.max_panels], [cfg.r_max]))
    return _adaptive(integrand, edges, cfg)


def direct_integral(g, lo, hi, cfg=None):
    """Adaptive integral of a plain (array-capable) callable over [lo, hi]."""
    if cfg is None:
        cfg = QuadratureConfig()
    lo, hi = float(lo), float(hi)
    if hi < lo:
        raise ValueError("integration bounds must satisfy lo <= hi")
    if hi == lo:
        return 0.0

    def integrand(x):
        return np.asarray(g(x), dtype=float)

    return _adaptive(integrand, np.array([lo, hi]), cfg)

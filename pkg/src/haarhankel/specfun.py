"""Double-precision special functions used by the transform series.

Bessel J0/J1 and erf are thin wrappers over scipy's Cephes routines with
symmetry enforced exactly (they are evaluated on |x|, so J0 is even and
J1/erf are odd bit-for-bit).  The Struve functions H0/H1 are evaluated
in three regimes chosen so every regime stays below 1e-10 absolute
error in binary64:

* ``x <= 10``   ascending power series,
* ``10 < x <= 25``  expansion in Bessel functions of increasing order
  (all terms bounded by 1, no cancellation),
* ``x > 25``    Y_nu plus the optimally truncated asymptotic tail of
  H_nu - Y_nu.

All functions accept scalars or numpy arrays and evaluate elementwise;
scalar input yields a Python float.
"""

import numpy as np
from scipy import special as _sp

# Regime boundaries for the Struve functions.  Measured worst absolute
# errors against a 60-digit series reference: power series 2.9e-13 at
# x=10, Bessel series 3e-16 on (10, 25], asymptotic tail 3.6e-13 at
# x=25 (improving rapidly for larger x).
SERIES_CUTOFF = 10.0
ASYMPTOTIC_CUTOFF = 25.0


def _as_finite(x, where):
    arr = np.asarray(x, dtype=float)
    if not np.isfinite(arr).all():
        raise ValueError(f"{where}: argument must be finite")
    return arr


def _as_nonnegative(x, where):
    arr = _as_finite(x, where)
    if np.any(arr < 0.0):
        raise ValueError(f"{where}: argument must be >= 0")
    return arr


def _ret(x, values):
    # scalar in, float out; array in, array out
    if np.isscalar(x) or getattr(x, "ndim", None) == 0:
        return float(values)
    return values


def bessel_j0(x):
    """Bessel function J0(x); even in x exactly."""
    arr = _as_finite(x, "bessel_j0")
    return _ret(x, _sp.j0(np.abs(arr)))


def bessel_j1(x):
    """Bessel function J1(x); odd in x exactly."""
    arr = _as_finite(x, "bessel_j1")
    return _ret(x, np.copysign(1.0, arr) * _sp.j1(np.abs(arr)))


def erf(x):
    """Error function; odd in x exactly."""
    arr = _as_finite(x, "erf")
    return _ret(x, np.copysign(1.0, arr) * _sp.erf(np.abs(arr)))


def struve_h0(x):
    """Struve function H0(x) for x >= 0, absolute error <= 1e-10."""
    arr = _as_nonnegative(x, "struve_h0")
    return _ret(x, _struve(0, arr))


def struve_h1(x):
    """Struve function H1(x) for x >= 0, absolute error <= 1e-10."""
    arr = _as_nonnegative(x, "struve_h1")
    return _ret(x, _struve(1, arr))


def struve_d(x):
    """The combination D(x) = H0(x)*J1(x) - H1(x)*J0(x) for x >= 0."""
    arr = _as_nonnegative(x, "struve_d")
    return _ret(x, _struve_d_values(arr))


def j0_primitive(x):
    """Integral of J0(t) over [0, x], x >= 0.

    Closed form x*J0(x) + (pi*x/2)*D(x); equals 0 at x = 0 and tends
    to 1 as x grows.
    """
    arr = _as_nonnegative(x, "j0_primitive")
    return _ret(x, _j0_primitive_values(arr))


def _struve_d_values(arr):
    return _struve(0, arr) * _sp.j1(arr) - _struve(1, arr) * _sp.j0(arr)


def _j0_primitive_values(arr):
    return arr * _sp.j0(arr) + (0.5 * np.pi) * arr * _struve_d_values(arr)


def _struve(nu, x):
    x = np.atleast_1d(x)
    out = np.empty_like(x)
    small = x <= SERIES_CUTOFF
    big = x > ASYMPTOTIC_CUTOFF
    mid = ~(small | big)
    if small.any():
        out[small] = _struve_power_series(nu, x[small])
    if mid.any():
        out[mid] = _struve_bessel_series(nu, x[mid])
    if big.any():
        out[big] = _struve_asymptotic(nu, x[big])
    return out


def _struve_power_series(nu, x):
    # H_nu(x) = sum_n (-1)^n (x/2)^(2n+nu+1) / (Gamma(n+3/2) Gamma(n+nu+3/2))
    half = 0.5 * x
    q = half * half
    term = half ** (nu + 1) / (_sp.gamma(1.5) * _sp.gamma(nu + 1.5))
    total = term.copy()
    for n in range(200):
        term = term * (-q) / ((n + 1.5) * (n + nu + 1.5))
        total += term
        if np.all(np.abs(term) <= 1e-18 * np.maximum(1.0, np.abs(total))):
            break
    return total


def _struve_bessel_series(nu, x):
    # H0(x) = (4/pi) sum_{k>=0} J_{2k+1}(x)/(2k+1)
    # H1(x) = (2/pi)(1 - J0(x)) + (4/pi) sum_{k>=1} J_{2k}(x)/(4k^2-1)
    # J_n(x) is negligible once n exceeds x by a few x^(1/3) widths.
    xmax = float(np.max(x))
    n_top = int(xmax + 16.0 * xmax ** (1.0 / 3.0) + 12.0)
    if nu == 0:
        orders = np.arange(1, n_top, 2)
        weights = 1.0 / orders
        base = 0.0
    else:
        orders = np.arange(2, n_top, 2)
        k = orders // 2
        weights = 1.0 / (4.0 * k * k - 1.0)
        base = (2.0 / np.pi) * (1.0 - _sp.j0(x))
    jmat = _sp.jv(orders[:, None], x[None, :])
    # ascending-order terms decay, so add from the small end
    tail = (4.0 / np.pi) * np.sum(jmat[::-1] * weights[::-1, None], axis=0)
    return base + tail


def _struve_asymptotic(nu, x):
    # H_nu(x) = Y_nu(x) + (1/pi) * divergent tail, truncated at its
    # smallest term; below x=25 the smallest term exceeds 1e-10.
    y = _sp.y0(x) if nu == 0 else _sp.y1(x)
    if nu == 0:
        term = 2.0 / (np.pi * x)
    else:
        term = np.full_like(x, 2.0 / np.pi)
    total = term.copy()
    inv_x2 = 1.0 / (x * x)
    for m in range(80):
        factor = -((2 * m + 1) ** 2) if nu == 0 else -(4.0 * m * m - 1.0)
        nxt = term * factor * inv_x2
        # freeze lanes whose terms stopped decreasing (divergent tail)
        nxt = np.where(np.abs(nxt) >= np.abs(term), 0.0, nxt)
        total += nxt
        term = nxt
        if np.all(np.abs(term) <= 1e-18):
            break
    return y + total

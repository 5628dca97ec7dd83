"""Hankel transforms of order 0 and 1 via Haar wavelet expansion.

The radial profile g(r) = f(r) * r is truncated to [0, h], expanded in
the Haar basis, and transformed term by term: every Haar atom has an
exact Hankel transform expressible through Bessel J0/J1 and Struve
H0/H1 functions.  A direct panel-quadrature oracle provides the
independent ground truth.
"""

from .haar import (
    RadialFunction,
    WaveletCoefficients,
    decompose,
    detail_coefficient,
    gaussian_coefficients,
    gaussian_exact_transform,
    gaussian_radial_function,
    reconstruct,
    sampled_radial_function,
    scaling_coefficient,
)
from .oracle import (
    IntegrationError,
    QuadratureConfig,
    direct_hankel,
    direct_integral,
    panel_edges,
)
from .series import (
    Curve,
    TransformOrder,
    atom_transform_detail,
    atom_transform_scaling,
    transform,
    transform_grid,
)
from .specfun import (
    bessel_j0,
    bessel_j1,
    erf,
    j0_primitive,
    struve_d,
    struve_h0,
    struve_h1,
)

__version__ = "0.1.0"

__all__ = [
    "Curve",
    "IntegrationError",
    "QuadratureConfig",
    "RadialFunction",
    "TransformOrder",
    "WaveletCoefficients",
    "atom_transform_detail",
    "atom_transform_scaling",
    "bessel_j0",
    "bessel_j1",
    "decompose",
    "detail_coefficient",
    "direct_hankel",
    "direct_integral",
    "erf",
    "gaussian_coefficients",
    "gaussian_exact_transform",
    "gaussian_radial_function",
    "j0_primitive",
    "panel_edges",
    "reconstruct",
    "sampled_radial_function",
    "scaling_coefficient",
    "struve_d",
    "struve_h0",
    "struve_h1",
    "transform",
    "transform_grid",
]

"""Exact and floating-point tools for the inverse of the standard normal CDF."""

from .approx import approx_eval, error_scan
from .gauss import normal_cdf, normal_pdf, normal_sf, probit_reference
from .lambertw import lambert_w0
from .polys import c_via_derivative_recurrence, poly_sequence, series_coeff_c
from .series import probit_hybrid, s_series

__version__ = "0.1.0"

__all__ = [
    "approx_eval",
    "error_scan",
    "normal_cdf",
    "normal_pdf",
    "normal_sf",
    "probit_reference",
    "lambert_w0",
    "c_via_derivative_recurrence",
    "poly_sequence",
    "series_coeff_c",
    "probit_hybrid",
    "s_series",
]

"""Exact arithmetic substrate: Q, {q, sqrt(q)}, Q(w) and sparse polynomials."""

from .numbers import (
    Eisenstein,
    RootValue,
    compare_sqrt_sum,
    eisenstein_pow,
    format_rational,
    omega_power,
    parse_rational,
    rational_sqrt,
    root_value_compare,
)
from .parse import ExpressionError, parse_eisenstein, parse_poly, parse_scalar
from .poly import SparsePoly, format_poly, poly_substitute

__all__ = [
    "Eisenstein",
    "ExpressionError",
    "RootValue",
    "SparsePoly",
    "compare_sqrt_sum",
    "eisenstein_pow",
    "format_poly",
    "format_rational",
    "omega_power",
    "parse_eisenstein",
    "parse_poly",
    "parse_rational",
    "parse_scalar",
    "poly_substitute",
    "rational_sqrt",
    "root_value_compare",
]

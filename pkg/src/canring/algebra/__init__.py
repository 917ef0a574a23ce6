"""Exact arithmetic: rationals, polynomials over QQ and fraction-free linear algebra."""

from .linalg import (
    EchelonBasis,
    RationalMatrix,
    inverse,
    kernel_basis,
    left_kernel,
    rank,
    solve,
    span_contains,
)
from .polynomial import (
    Polynomial,
    bidegree,
    format_polynomial,
    hirzebruch_ring,
    parse_polynomial,
    poly_add,
    poly_divmod_by,
    poly_mul,
    polynomial_ring,
    projective_ring,
    total_degree,
)
from .rational import floor_rational, format_rational, fractional_part, parse_rational

__all__ = [
    "EchelonBasis",
    "Polynomial",
    "RationalMatrix",
    "bidegree",
    "floor_rational",
    "format_polynomial",
    "format_rational",
    "fractional_part",
    "hirzebruch_ring",
    "inverse",
    "kernel_basis",
    "left_kernel",
    "parse_polynomial",
    "parse_rational",
    "poly_add",
    "poly_divmod_by",
    "poly_mul",
    "polynomial_ring",
    "projective_ring",
    "rank",
    "solve",
    "span_contains",
    "total_degree",
]

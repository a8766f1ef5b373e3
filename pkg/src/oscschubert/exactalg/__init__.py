"""Exact arithmetic kernels: rationals, Q(i), polynomials, matrices, Sturm counts."""

from .matrix import PolyMatrix, all_minors, bareiss_determinant, determinant, minor, rank
from .multipoly import MultiPoly, parse_poly, split_real_imaginary
from .numbers import QQ, GaussianRational, Rational, as_gaussian, as_rational
from .sturm import (
    NotSquarefreeError,
    count_real_roots,
    is_squarefree,
    sturm_count_real_roots,
    sturm_sequence,
)
from .unipoly import UniPoly, poly_gcd, squarefree_part

__all__ = [
    "QQ",
    "Rational",
    "GaussianRational",
    "as_rational",
    "as_gaussian",
    "UniPoly",
    "poly_gcd",
    "squarefree_part",
    "MultiPoly",
    "parse_poly",
    "split_real_imaginary",
    "PolyMatrix",
    "determinant",
    "minor",
    "all_minors",
    "bareiss_determinant",
    "rank",
    "sturm_sequence",
    "sturm_count_real_roots",
    "count_real_roots",
    "is_squarefree",
    "NotSquarefreeError",
]

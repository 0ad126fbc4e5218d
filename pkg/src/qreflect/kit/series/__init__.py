"""Polynomials and rational generating functions over cyclotomic numbers."""

from .parse import parse_series
from .poly import Poly, series_inverse, series_product
from .rational import FactoredRational, LaurentExpansion, expand, laurent_at_one
from .reconstruct import (
    CyclotomicFactorization,
    PalindromeKind,
    PalindromeReport,
    cyclotomic_factorization,
    default_order_bound,
    palindrome_check,
    reconstruct_rational,
)

__all__ = [
    "Poly",
    "FactoredRational",
    "LaurentExpansion",
    "CyclotomicFactorization",
    "PalindromeKind",
    "PalindromeReport",
    "expand",
    "laurent_at_one",
    "reconstruct_rational",
    "palindrome_check",
    "cyclotomic_factorization",
    "default_order_bound",
    "parse_series",
    "series_inverse",
    "series_product",
]

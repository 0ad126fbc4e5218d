"""Exact arithmetic in cyclotomic fields."""

from .grammar import check_conductor, evaluate, format_coefficient, parse_coefficient
from .number import ONE, ZERO, CycNumber
from .roots import NumberTheory, RootOfUnity, as_root_of_unity, number_theory

__all__ = [
    "CycNumber",
    "ZERO",
    "ONE",
    "RootOfUnity",
    "as_root_of_unity",
    "number_theory",
    "NumberTheory",
    "evaluate",
    "parse_coefficient",
    "format_coefficient",
    "check_conductor",
]

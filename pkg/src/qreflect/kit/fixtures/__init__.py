"""Worked algebras and the default fixture suites."""

from .algebras import (
    diagonal,
    iterated_ore,
    iterated_ore_relations,
    skew_square_plane,
    sl2_homogenized,
    solvable_lie,
)
from .rootsums import RootSumSuite
from .worked import WorkedExamples, series_agrees

__all__ = [
    "WorkedExamples",
    "RootSumSuite",
    "series_agrees",
    "skew_square_plane",
    "iterated_ore",
    "iterated_ore_relations",
    "solvable_lie",
    "sl2_homogenized",
    "diagonal",
]

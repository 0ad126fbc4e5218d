"""Sums of roots of unity equal to a non-negative integer."""

from .model import (
    PAIR,
    Exclusion,
    RootSumProblem,
    Roots,
    SolutionFamily,
    Template,
    render_roots,
    roots_sum,
)
from .solver import (
    DEFAULT_CANDIDATE_LIMIT,
    averaging_sum,
    brute_force,
    contains,
    is_reduced,
    reduced_solutions,
    solve,
    templates,
    verify_family,
)

__all__ = [
    "Exclusion",
    "RootSumProblem",
    "Roots",
    "SolutionFamily",
    "Template",
    "PAIR",
    "render_roots",
    "roots_sum",
    "DEFAULT_CANDIDATE_LIMIT",
    "averaging_sum",
    "brute_force",
    "contains",
    "is_reduced",
    "reduced_solutions",
    "solve",
    "templates",
    "verify_family",
]

"""Finitely presented graded algebras, rewriting systems and constructors."""

from .constructors import (
    down_up,
    free_algebra,
    homogenize_lie,
    ore_extension,
    polynomial_ring,
    quantum_plane,
    rees_weyl,
)
from .fileformat import load_presentation, parse_presentation
from .presentation import (
    AlgebraProfile,
    Generator,
    HilbertCheck,
    NormalBasis,
    NormalityResult,
    Presentation,
    dims_and_verify,
    groebner_truncated,
    normal_basis,
    normality_check,
    quotient,
    relations_hold,
)
from .rewriting import MonomialOrder, RewritingSystem, complete
from .words import NCPoly, Word, render_word

__all__ = [
    "NCPoly",
    "Word",
    "render_word",
    "MonomialOrder",
    "RewritingSystem",
    "complete",
    "Generator",
    "AlgebraProfile",
    "Presentation",
    "NormalBasis",
    "HilbertCheck",
    "NormalityResult",
    "groebner_truncated",
    "normal_basis",
    "dims_and_verify",
    "normality_check",
    "relations_hold",
    "quotient",
    "free_algebra",
    "polynomial_ring",
    "quantum_plane",
    "ore_extension",
    "homogenize_lie",
    "rees_weyl",
    "down_up",
    "parse_presentation",
    "load_presentation",
]

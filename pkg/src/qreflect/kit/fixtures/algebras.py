"""Algebras and automorphisms of the worked examples."""

from __future__ import annotations

from ..algebra import (
    AlgebraProfile,
    Presentation,
    free_algebra,
    homogenize_lie,
    ore_extension,
)
from ..automorphism import GradedAutomorphism, verify_automorphism


def skew_square_plane() -> Presentation:
    """``k⟨x, y⟩/(x² − y²)``, a quantum polynomial ring of dimension 2."""
    return (
        free_algebra(["x", "y"], "skew_square")
        .with_relations(["x^2 - y^2"])
        .with_profile(AlgebraProfile.quantum(2))
    )


def iterated_ore() -> Presentation:
    """Double Ore extension of ``k⟨b1, b2⟩/(b1² − b2²)`` on ``b3`` and ``b4``.

    Relations: ``b1b3 = −b3b1``, ``b2b3 = b3b2``, ``b1b4 = −b4b1``,
    ``b2b4 = b4b2`` and ``b3b4 − b4b3 = b1b2 + b2b1``.
    """
    base = (
        free_algebra(["b1", "b2"], "B")
        .with_relations(["b1^2 - b2^2"])
        .with_profile(AlgebraProfile.quantum(2))
    )
    tau = verify_automorphism(base, [[-1, 0], [0, 1]], "tau")
    middle = ore_extension(base, tau, name="b3", side="right")
    tau_prime = verify_automorphism(
        middle, [[-1, 0, 0], [0, 1, 0], [0, 0, 1]], "tau'"
    )
    return ore_extension(
        middle,
        tau_prime,
        {"b3": "b1*b2 + b2*b1"},
        name="b4",
        side="right",
        algebra_name="iterated_ore",
    )


def iterated_ore_relations() -> Presentation:
    """The same algebra typed from its six relations."""
    return free_algebra(["b1", "b2", "b3", "b4"], "iterated_ore_typed").with_relations(
        [
            "b1^2 - b2^2",
            "b1*b3 + b3*b1",
            "b2*b3 - b3*b2",
            "b1*b4 + b4*b1",
            "b2*b4 - b4*b2",
            "b3*b4 - b4*b3 - b1*b2 - b2*b1",
        ]
    )


def solvable_lie() -> Presentation:
    """Homogenization of the Lie algebra ``[x, y] = y``."""
    constants = [
        [[0, 0], [0, 1]],
        [[0, -1], [0, 0]],
    ]
    return homogenize_lie(constants, ["x", "y"], "z", name="H(solvable)")


def sl2_homogenized() -> Presentation:
    """Homogenized ``sl2``: ``[e, f] = h``, ``[h, e] = 2e``, ``[h, f] = −2f``."""
    constants = [
        [[0, 0, 0], [0, 0, 1], [-2, 0, 0]],
        [[0, 0, -1], [0, 0, 0], [0, 2, 0]],
        [[2, 0, 0], [0, -2, 0], [0, 0, 0]],
    ]
    return homogenize_lie(constants, ["e", "f", "h"], "z", name="H(sl2)")


def diagonal(
    presentation: Presentation, entries, name: str = "g"
) -> GradedAutomorphism:
    """Verified diagonal automorphism."""
    n = len(entries)
    return verify_automorphism(
        presentation,
        [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)],
        name,
    )

"""Eigenvalues and eigenvectors of finite order automorphisms on degree 1."""

from __future__ import annotations

from typing import List, Tuple

from ..algebra import NCPoly
from ..automorphism import GradedAutomorphism
from ..cyclotomic import CycNumber, RootOfUnity
from ..linalg import nullspace, rank

Eigenvalues = Tuple[Tuple[RootOfUnity, int], ...]


def _shifted(g: GradedAutomorphism, value: CycNumber) -> list[list[CycNumber]]:
    return [
        [entry - value if i == j else entry for j, entry in enumerate(row)]
        for i, row in enumerate(g.matrix)
    ]


def eigen_structure(g: GradedAutomorphism, order: int) -> Eigenvalues:
    """Eigenvalues of ``g`` on degree 1 with multiplicities, by exact rank.

    ``order`` is the (finite) order of ``g``; every eigenvalue is an
    ``order``-th root of unity and ``g`` is diagonalizable.
    """
    found = []
    for k in range(order):
        root = RootOfUnity.canonical(order, k)
        multiplicity = g.size - rank(_shifted(g, root.value()))
        if multiplicity:
            found.append((root, multiplicity))
    found.sort()
    return tuple(found)


def eigenvectors(g: GradedAutomorphism, root: RootOfUnity) -> List[NCPoly]:
    """A basis of the degree-1 eigenspace of ``root``."""
    return [
        NCPoly({(i,): v for i, v in enumerate(vector) if v})
        for vector in nullspace(_shifted(g, root.value()))
    ]


def non_trivial(eigenvalues: Eigenvalues) -> list[RootOfUnity]:
    """Eigenvalues other than 1, with repetition."""
    return [r for r, m in eigenvalues if r.order != 1 for _ in range(m)]


def fixed_dimension(eigenvalues: Eigenvalues) -> int:
    """Multiplicity of the eigenvalue 1."""
    return sum(m for r, m in eigenvalues if r.order == 1)

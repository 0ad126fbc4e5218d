"""Graded automorphisms given by their action on degree-1 generators."""

from __future__ import annotations

import logging
from typing import Dict, List, Sequence, Tuple, Union

from ..algebra import NCPoly, Presentation, RewritingSystem, Word
from ..cyclotomic import ONE, ZERO, CycNumber, parse_coefficient
from ..exceptions import ExceedsCap, NonInvertible, NotAnAutomorphism, PreconditionError
from ..linalg import identity, inverse, matmul

log = logging.getLogger(__name__)

Entry = Union[CycNumber, int, str]
Matrix = Tuple[Tuple[CycNumber, ...], ...]
Terms = Dict[Word, CycNumber]


def _as_matrix(rows: Sequence[Sequence[Entry]]) -> Matrix:
    return tuple(
        tuple(
            parse_coefficient(e) if isinstance(e, str) else CycNumber.coerce(e)
            for e in row
        )
        for row in rows
    )


class GradedAutomorphism:
    """Invertible matrix on the degree-1 generators of a presentation.

    Columns are images: ``g(x_j) = Σ_i matrix[i][j] · x_i``. Instances created
    through :func:`verify_automorphism` preserve the relation ideal.
    """

    def __init__(
        self,
        presentation: Presentation,
        matrix: Sequence[Sequence[Entry]],
        name: str = "g",
    ):
        """Create without verification; prefer :func:`verify_automorphism`."""
        self.presentation = presentation
        self.matrix = _as_matrix(matrix)
        self.name = name
        self._actions: Dict[RewritingSystem, GradedAction] = {}

    @property
    def size(self) -> int:
        """Number of degree-1 generators."""
        return len(self.matrix)

    def image(self, index: int) -> NCPoly:
        """Image of a generator."""
        return NCPoly({(i,): self.matrix[i][index] for i in range(self.size)})

    def apply(self, element: NCPoly) -> NCPoly:
        """Substitute generator images into an element of the free algebra."""
        images = [self.image(j) for j in range(self.size)]
        result = NCPoly()
        for word, coeff in element.items():
            term = NCPoly.constant(coeff)
            for x in word:
                term = term * images[x]
            result = result + term
        return result

    def _same_algebra(self, other: GradedAutomorphism):
        if other.presentation is not self.presentation:
            raise PreconditionError(
                f"{self.name} and {other.name} act on different presentations"
            )

    def __matmul__(self, other: GradedAutomorphism) -> GradedAutomorphism:
        """Composition ``self ∘ other``."""
        self._same_algebra(other)
        return GradedAutomorphism(
            self.presentation,
            matmul(self.matrix, other.matrix),
            f"{self.name}*{other.name}",
        )

    __mul__ = __matmul__

    def inverse(self) -> GradedAutomorphism:
        """Inverse automorphism."""
        inv = inverse(self.matrix)
        if inv is None:
            raise NonInvertible(f"{self.name} is singular")
        return GradedAutomorphism(self.presentation, inv, f"{self.name}^-1")

    def __pow__(self, exponent: int) -> GradedAutomorphism:
        """Integer power."""
        base = self if exponent >= 0 else self.inverse()
        result = self.identity(self.presentation)
        for _ in range(abs(exponent)):
            result = GradedAutomorphism(
                self.presentation, matmul(base.matrix, result.matrix)
            )
        result.name = self.name if exponent == 1 else f"{self.name}^{exponent}"
        return result

    @classmethod
    def identity(cls, presentation: Presentation) -> GradedAutomorphism:
        """The identity automorphism."""
        return cls(presentation, identity(presentation.ngens), "id")

    @classmethod
    def diagonal(
        cls, presentation: Presentation, entries: Sequence[Entry], name: str = "g"
    ) -> GradedAutomorphism:
        """Diagonal automorphism ``x_i ↦ entries[i]·x_i`` (unverified)."""
        n = len(entries)
        return cls(
            presentation,
            [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)],
            name,
        )

    def is_identity(self) -> bool:
        """Whether the matrix is the identity."""
        return all(
            self.matrix[i][j] == (ONE if i == j else ZERO)
            for i in range(self.size)
            for j in range(self.size)
        )

    def is_diagonal(self) -> bool:
        """Whether the matrix is diagonal."""
        return all(
            not self.matrix[i][j]
            for i in range(self.size)
            for j in range(self.size)
            if i != j
        )

    def order(self, cap: int) -> int:
        """Smallest ``m ≥ 1`` with ``g^m = id``; :class:`ExceedsCap` above ``cap``."""
        power = self
        for m in range(1, cap + 1):
            if power.is_identity():
                return m
            power = GradedAutomorphism(
                self.presentation, matmul(self.matrix, power.matrix)
            )
        raise ExceedsCap(cap, f"order of {self.name} exceeds the cap {cap}")

    def action(self, system: RewritingSystem) -> GradedAction:
        """Action on the normal words of a rewriting system (cached)."""
        action = self._actions.get(system)
        if action is None:
            action = GradedAction(self, system)
            self._actions[system] = action
        return action

    def __eq__(self, other: object) -> bool:
        """Equal matrices on the same presentation."""
        if not isinstance(other, GradedAutomorphism):
            return NotImplemented
        return other.presentation is self.presentation and other.matrix == self.matrix

    def __hash__(self) -> int:
        """Hash of the matrix."""
        return hash(self.matrix)

    def render_images(self) -> List[str]:
        """Generator images as ``x -> ...`` strings."""
        names = self.presentation.names
        return [
            f"{names[j]} -> {self.presentation.render(self.image(j))}"
            for j in range(self.size)
        ]

    def __str__(self) -> str:
        """Render in the automorphism file format."""
        rows = [", ".join(str(e) for e in row) for row in self.matrix]
        header = f"automorphism {self.name} on {self.presentation.name}"
        return "\n".join([header, *rows])

    def __repr__(self) -> str:
        """Get a technical string representation of this instance."""
        return f"GradedAutomorphism({self.name!r}, {self.presentation.name!r})"


class GradedAction:
    """Matrices of an automorphism on the normal-word bases of each degree.

    Images are computed one letter at a time, ``g(x·w) = g(x)·g(w)``, reusing
    the normal form of ``g(w)``.
    """

    def __init__(self, automorphism: GradedAutomorphism, system: RewritingSystem):
        """Create for a complete rewriting system."""
        self.automorphism = automorphism
        self.system = system
        self._images: Dict[Word, Terms] = {(): {(): ONE}}

    def image(self, word: Word) -> Terms:
        """Normal form of ``g(word)``."""
        cached = self._images.get(word)
        if cached is not None:
            return cached
        rest = self.image(word[1:])
        column = self.automorphism.matrix
        result: Terms = {}
        for x in range(self.automorphism.size):
            scale = column[x][word[0]]
            if not scale:
                continue
            for w, c in self.system.left_multiply(x, rest).items():
                result[w] = result.get(w, ZERO) + scale * c
        result = {w: c for w, c in result.items() if not c.is_zero()}
        self._images[word] = result
        return result

    def apply(self, element: NCPoly) -> NCPoly:
        """Normal form of ``g(element)``."""
        total: Terms = {}
        for word, coeff in self.system.normal_form(element).items():
            for w, c in self.image(word).items():
                total[w] = total.get(w, ZERO) + coeff * c
        return NCPoly(total)

    def trace(self, degree: int) -> CycNumber:
        """``tr(g | A_degree)``."""
        total = ZERO
        for word in self.system.normal_words(degree):
            total = total + self.image(word).get(word, ZERO)
        return total

    def matrix(self, degree: int) -> List[List[CycNumber]]:
        """Dense matrix on the normal words of ``degree``; columns are images."""
        basis = self.system.normal_words(degree)
        position = {w: i for i, w in enumerate(basis)}
        rows = [[ZERO] * len(basis) for _ in basis]
        for j, word in enumerate(basis):
            for w, c in self.image(word).items():
                rows[position[w]][j] = c
        return rows


def verify_automorphism(
    presentation: Presentation, matrix: Sequence[Sequence[Entry]], name: str = "g"
) -> GradedAutomorphism:
    """Check invertibility and invariance of the relation ideal.

    Each relation's image must reduce to zero modulo the relations, using a
    rewriting system complete to the largest relation degree.
    """
    if not presentation.degree_one_generated:
        raise PreconditionError(
            f"{presentation.name} has generators above degree 1; matrix automorphisms "
            "need a degree-1 generated presentation"
        )
    g = GradedAutomorphism(presentation, matrix, name)
    n = presentation.ngens
    if g.size != n or any(len(row) != n for row in g.matrix):
        raise PreconditionError(f"{name} must be a {n}x{n} matrix")
    if inverse(g.matrix) is None:
        raise NonInvertible(f"{name} is singular")
    if presentation.relations:
        system = presentation.rewriting(presentation.max_relation_degree)
        for relation in presentation.relations:
            if system.normal_form(g.apply(relation)):
                raise NotAnAutomorphism(
                    f"{name} is not an automorphism of {presentation.name}",
                    witness=presentation.render(relation),
                )
    log.debug("verified automorphism %s of %s", name, presentation.name)
    return g

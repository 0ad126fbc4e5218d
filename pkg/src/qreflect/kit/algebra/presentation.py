"""Finitely presented connected graded algebras."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from ..cyclotomic import ONE, CycNumber, evaluate
from ..cyclotomic.grammar import RESERVED
from ..exceptions import HilbertMismatch, ParseError, PreconditionError
from ..linalg import EchelonBasis
from ..series import FactoredRational, Poly, expand
from .rewriting import MonomialOrder, RewritingSystem, complete
from .words import NCPoly, Word

log = logging.getLogger(__name__)

ElementLike = Union[NCPoly, str]


@dataclass(frozen=True)
class Generator:
    """A named generator with a positive degree."""

    name: str
    degree: int = 1

    def __post_init__(self):
        """Validate the generator."""
        if not self.name.isidentifier() or self.name in RESERVED or self.name == "t":
            raise ValueError(f"invalid generator name {self.name!r}")
        if self.degree < 1:
            raise ValueError(f"generator {self.name} has degree {self.degree} < 1")


@dataclass(frozen=True)
class AlgebraProfile:
    """Declared homological data: global dimension and Hilbert series."""

    gldim: int
    hilbert: FactoredRational

    @classmethod
    def quantum(cls, n: int) -> AlgebraProfile:
        """Profile of a quantum polynomial ring in ``n`` variables."""
        return cls(n, FactoredRational.inverse_of([(1, n)]))

    @property
    def gkdim(self) -> int:
        """Pole order of the Hilbert series at t = 1."""
        return self.hilbert.pole_order_at_one()

    @property
    def is_quantum(self) -> bool:
        """Whether the Hilbert series is ``1/(1 − t)^gldim``."""
        return self.hilbert.numerator == Poly([1]) and self.hilbert.denom_factors == (
            (ONE, self.gldim),
        )

    @property
    def euler(self) -> Poly:
        """Euler polynomial ``e`` with ``H = 1/e``."""
        numerator = self.hilbert.numerator
        if numerator.degree != 0:
            raise PreconditionError(
                f"Hilbert series {self.hilbert} is not the inverse of a polynomial"
            )
        return self.hilbert.denominator() * numerator[0].inverse()

    @property
    def euler_degree(self) -> int:
        """Degree of the Euler polynomial."""
        return self.euler.degree

    @property
    def p_factor(self) -> Poly:
        """The polynomial ``p`` with ``e = (1 − t)^gkdim · p``."""
        p = self.euler
        for _ in range(self.gkdim):
            p, _ = p.divide_linear(1)
        return p

    def __str__(self) -> str:
        """Render the profile."""
        return f"gldim {self.gldim}, hilbert {self.hilbert}"


@dataclass(frozen=True, eq=False)
class Presentation:
    """Generators with degrees and homogeneous relations.

    ``order`` lists generator names from largest to smallest for the
    degree-lexicographic monomial order; it defaults to the generator order.
    """

    name: str
    generators: Tuple[Generator, ...]
    relations: Tuple[NCPoly, ...] = ()
    order: Tuple[str, ...] | None = None
    profile: AlgebraProfile | None = None
    _systems: Dict[Tuple[int, Tuple[int, ...]], RewritingSystem] = field(
        default_factory=dict, init=False, repr=False
    )

    def __post_init__(self):
        """Validate names, degrees and homogeneity."""
        names = self.names
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if self.order is not None and sorted(self.order) != sorted(names):
            raise ValueError(f"order {self.order} does not list the generators {names}")
        weights = self.weights
        for relation in self.relations:
            if not relation:
                raise ValueError("zero relation")
            if not relation.is_homogeneous(weights):
                raise ValueError(f"relation {self.render(relation)} is not homogeneous")
            if relation.coefficient(()):
                raise ValueError(
                    f"relation {self.render(relation)} has a constant term"
                )

    @property
    def names(self) -> Tuple[str, ...]:
        """Generator names in order."""
        return tuple(g.name for g in self.generators)

    @property
    def weights(self) -> Tuple[int, ...]:
        """Generator degrees in order."""
        return tuple(g.degree for g in self.generators)

    @property
    def ngens(self) -> int:
        """Number of generators."""
        return len(self.generators)

    def index(self, name: str) -> int:
        """Position of a generator."""
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"{self.name} has no generator {name!r}") from None

    def gen(self, name: str) -> NCPoly:
        """The generator as an element."""
        return NCPoly.generator(self.index(name))

    @property
    def degree_one_generated(self) -> bool:
        """Whether all generators have degree 1."""
        return all(g.degree == 1 for g in self.generators)

    @property
    def max_relation_degree(self) -> int:
        """Largest relation degree (0 without relations)."""
        return max((max(r.degrees(self.weights)) for r in self.relations), default=0)

    def monomial_order(self, order: Sequence[str] | None = None) -> MonomialOrder:
        """The monomial order, ``order`` overriding the declared ranking."""
        ranking = order or self.order or self.names
        return MonomialOrder(self.weights, [self.index(n) for n in ranking])

    def element(
        self, text: ElementLike, *, source: str | None = None, line: int | None = None
    ) -> NCPoly:
        """Parse an element in the coefficient grammar extended by the generators."""
        if isinstance(text, NCPoly):
            return text
        names = {g.name: NCPoly.generator(i) for i, g in enumerate(self.generators)}
        value = evaluate(text, names, source=source, line=line)
        if isinstance(value, CycNumber):
            return NCPoly.constant(value)
        if not isinstance(value, NCPoly):
            msg = f"not an element of {self.name}: {text!r}"
            raise ParseError(msg, source=source, line=line)
        return value

    def degree_of(self, element: NCPoly) -> int:
        """Degree of a nonzero homogeneous element."""
        degrees = element.degrees(self.weights)
        if len(degrees) != 1:
            raise PreconditionError(
                f"{self.render(element)} is not homogeneous and nonzero"
            )
        return degrees.pop()

    def render(self, element: NCPoly, order: MonomialOrder | None = None) -> str:
        """Render an element with generator names."""
        key = (order or self.monomial_order()).key
        return element.render(self.names, key=key)

    def rewriting(
        self, cutoff: int, order: Sequence[str] | None = None
    ) -> RewritingSystem:
        """Rewriting system complete to ``cutoff`` (cached per cutoff and order)."""
        monomial_order = self.monomial_order(order)
        key = (cutoff, monomial_order.ranking)
        system = self._systems.get(key)
        if system is None:
            system = complete(self.relations, monomial_order, cutoff)
            self._systems[key] = system
        return system

    def with_relations(
        self, extra: Sequence[ElementLike], name: str | None = None
    ) -> Presentation:
        """The presentation with additional relations; the profile is dropped."""
        return Presentation(
            name or self.name,
            self.generators,
            self.relations + tuple(self.element(e) for e in extra),
            self.order,
        )

    def with_profile(self, profile: AlgebraProfile | None) -> Presentation:
        """The same presentation with another declared profile."""
        return Presentation(
            self.name, self.generators, self.relations, self.order, profile
        )

    def __str__(self) -> str:
        """Render in the presentation file format."""
        lines = [
            f"algebra {self.name}",
            "generators " + " ".join(f"{g.name}:{g.degree}" for g in self.generators),
        ]
        if self.order is not None:
            lines.append("order " + " ".join(self.order))
        lines.extend(f"relation {self.render(r)}" for r in self.relations)
        if self.profile is not None:
            lines.append(f"hilbert {self.profile.hilbert}")
            lines.append(f"gldim {self.profile.gldim}")
        return "\n".join(lines)


@dataclass(frozen=True)
class NormalBasis:
    """Normal words per degree and the resulting graded dimensions."""

    words: Tuple[Tuple[Word, ...], ...]
    cutoff: int

    @property
    def dims(self) -> List[int]:
        """``dim A_0 .. dim A_cutoff``."""
        return [len(w) for w in self.words]


@dataclass(frozen=True)
class HilbertCheck:
    """Comparison of computed dimensions with a declared Hilbert series."""

    basis: NormalBasis
    expected: Tuple[CycNumber, ...]
    mismatch_degree: int | None = None

    @property
    def passed(self) -> bool:
        """Whether every degree agrees."""
        return self.mismatch_degree is None


def groebner_truncated(
    presentation: Presentation, cutoff: int, order: Sequence[str] | None = None
) -> RewritingSystem:
    """Rewriting system of ``presentation`` confluent on words up to ``cutoff``."""
    if cutoff < presentation.max_relation_degree:
        raise PreconditionError(
            f"cutoff {cutoff} is below the relation degree "
            f"{presentation.max_relation_degree}"
        )
    return presentation.rewriting(cutoff, order)


def normal_basis(presentation: Presentation, cutoff: int) -> NormalBasis:
    """Normal words of every degree up to ``cutoff``."""
    system = presentation.rewriting(cutoff)
    return NormalBasis(tuple(system.normal_words(d) for d in range(cutoff + 1)), cutoff)


def dims_and_verify(
    presentation: Presentation,
    profile: AlgebraProfile | None,
    cutoff: int,
    *,
    strict: bool = True,
) -> HilbertCheck:
    """Compare graded dimensions with the declared Hilbert series through ``cutoff``.

    With ``strict`` a disagreement raises :class:`HilbertMismatch`, otherwise the
    first disagreeing degree is recorded on the returned check.
    """
    profile = profile or presentation.profile
    if profile is None:
        raise PreconditionError(f"{presentation.name} has no declared Hilbert series")
    basis = normal_basis(presentation, cutoff)
    expected = tuple(expand(profile.hilbert, cutoff))
    for degree, (dim, value) in enumerate(zip(basis.dims, expected)):
        log.debug("dim %s_%d = %d", presentation.name, degree, dim)
        if value != dim:
            if strict:
                raise HilbertMismatch(degree, value, dim)
            return HilbertCheck(basis, expected, degree)
    return HilbertCheck(basis, expected)


@dataclass(frozen=True)
class NormalityResult:
    """Outcome of a degree-truncated normality check."""

    element: str
    degree: int
    cutoff: int
    failed_at: int | None = None
    witness: str | None = None

    @property
    def normal(self) -> bool:
        """Whether ``b·A_i = A_i·b`` held in every checked degree."""
        return self.failed_at is None

    def __str__(self) -> str:
        """Describe the verdict and its scope."""
        if self.normal:
            return f"{self.element} is normal (verified to degree {self.cutoff})"
        return (
            f"{self.element} is not normal: degree {self.failed_at} "
            f"fails at word {self.witness}"
        )


def normality_check(
    presentation: Presentation, element: ElementLike, cutoff: int
) -> NormalityResult:
    """Compare ``b·A_i`` with ``A_i·b`` inside ``A_{d+i}`` for ``d + i ≤ cutoff``."""
    system = presentation.rewriting(cutoff)
    b = system.normal_form(presentation.element(element))
    label = presentation.render(b)
    if not b:
        return NormalityResult(label, 0, cutoff)
    d0 = presentation.degree_of(b)
    if d0 > cutoff:
        raise PreconditionError(f"element degree {d0} is above the cutoff {cutoff}")
    key = system.order.key
    for i in range(1, cutoff - d0 + 1):
        left, right = EchelonBasis(key), EchelonBasis(key)
        products = []
        for word in system.normal_words(i):
            w = NCPoly.word(word)
            lw, rw = system.multiply(b, w), system.multiply(w, b)
            left.add(lw.terms)
            right.add(rw.terms)
            products.append((word, lw, rw))
        for word, lw, rw in products:
            if not right.contains(lw.terms) or not left.contains(rw.terms):
                log.debug("normality of %s fails in degree %d", label, d0 + i)
                return NormalityResult(
                    label, d0, cutoff, d0 + i, presentation.render(NCPoly.word(word))
                )
    return NormalityResult(label, d0, cutoff)


def relations_hold(
    target: Presentation,
    source: Presentation,
    images: Mapping[str, ElementLike],
    cutoff: int | None = None,
) -> List[str]:
    """Source relations whose image under ``images`` is nonzero in ``target``.

    An empty list means the assignment extends to an algebra map ``source → target``
    (checked on the relations only).
    """
    image = {
        source.index(name): target.element(value) for name, value in images.items()
    }
    missing = set(range(source.ngens)) - set(image)
    if missing:
        raise PreconditionError(
            "no image for " + ", ".join(source.names[i] for i in sorted(missing))
        )
    substituted = []
    for relation in source.relations:
        total = NCPoly()
        for word, coeff in relation.items():
            term = NCPoly.constant(coeff)
            for x in word:
                term = term * image[x]
            total = total + term
        substituted.append((relation, total))
    needed = max(
        (max(p.degrees(target.weights), default=0) for _, p in substituted), default=0
    )
    system = target.rewriting(max(needed, cutoff or 0, target.max_relation_degree))
    return [
        source.render(relation)
        for relation, value in substituted
        if system.normal_form(value)
    ]


def quotient(
    presentation: Presentation, element: ElementLike, name: str | None = None
) -> Presentation:
    """Factor ring by a homogeneous element.

    A declared profile becomes ``H·(1 − t^d)`` with global dimension one less,
    which is right when the element is normal and regular.
    """
    b = presentation.element(element)
    d = presentation.degree_of(b)
    result = presentation.with_relations(
        [b], name or f"{presentation.name}/({presentation.render(b)})"
    )
    if presentation.profile is None:
        return result
    hilbert = presentation.profile.hilbert
    numerator = hilbert.numerator * Poly([1] + [0] * (d - 1) + [-1])
    reduced = FactoredRational(numerator, hilbert.denom_factors).reduced()
    return result.with_profile(
        AlgebraProfile(presentation.profile.gldim - 1, reduced)
    )

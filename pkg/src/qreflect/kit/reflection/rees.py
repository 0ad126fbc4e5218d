"""Quasi-reflections and reflection groups of Rees rings of Weyl algebras."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

from ..algebra import Presentation
from ..automorphism import GradedAutomorphism, order_and_closure
from ..cyclotomic import ONE, ZERO, CycNumber
from ..exceptions import ExceedsCap, PreconditionError
from .classify import DEFAULT_ORDER_CAP, ClassificationReport, classify

log = logging.getLogger(__name__)

CENTRAL = "z"


def _central_index(presentation: Presentation) -> int:
    if CENTRAL not in presentation.names or presentation.ngens % 2 == 0:
        raise PreconditionError(
            f"{presentation.name} is not a Rees ring of a Weyl algebra"
        )
    return presentation.index(CENTRAL)


def translation_shape(presentation: Presentation, g: GradedAutomorphism) -> bool:
    """Whether ``g`` is ``z ↦ −z`` plus translations ``x_i ↦ x_i + a_i·z``."""
    zi = _central_index(presentation)
    for j in range(g.size):
        for i in range(g.size):
            entry = g.matrix[i][j]
            if j == zi:
                expected = -ONE if i == zi else ZERO
            elif i == zi:
                continue
            else:
                expected = ONE if i == j else ZERO
            if entry != expected:
                return False
    return True


@dataclass(frozen=True)
class ReesReport:
    """Classification of one automorphism together with the shape check."""

    classification: ClassificationReport
    translation_shape: bool

    @property
    def consistent(self) -> bool:
        """Whether every quasi-reflection found has the translation shape."""
        return self.translation_shape or not self.classification.is_quasi_reflection


def rees_classify(
    presentation: Presentation,
    g: GradedAutomorphism,
    cutoff: int,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> ReesReport:
    """Classify ``g`` and compare with the translation shape."""
    shape = translation_shape(presentation, g)
    report = classify(
        presentation, presentation.profile, g, cutoff, order_cap=order_cap
    )
    return ReesReport(report, shape)


@dataclass(frozen=True)
class ReesGroupReport:
    """Closure, quasi-reflections and degree-1 invariants of a group."""

    generators: Tuple[str, ...]
    order_cap: int
    group_order: int | None = None
    quasi_reflections: Tuple[str, ...] = ()
    invariant_degree_one: CycNumber | None = None
    generator_count: int = 0

    @property
    def exceeds_cap(self) -> bool:
        """Whether the closure passed the order cap."""
        return self.group_order is None

    @property
    def verdict(self) -> str:
        """Verdict text."""
        if self.exceeds_cap:
            return (
                f"closure exceeds the order cap {self.order_cap} "
                "(evidence, not proof, of infinite order)"
            )
        if not self.quasi_reflections:
            return "no quasi-reflection: A^G has infinite global dimension"
        if len(self.quasi_reflections) > 1 or self.group_order != 2:
            return "G is not {Id, g} for a reflection g: A^G is not regular"
        return (
            f"dim (A^G)_1 = {self.invariant_degree_one} < {self.generator_count} "
            "= dim A_1: A^G is not isomorphic to A (generator count)"
        )


def rees_group(
    presentation: Presentation,
    generators: Sequence[GradedAutomorphism],
    cutoff: int,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> ReesGroupReport:
    """Close ``generators`` and report the reflection-group constraints.

    The degree-1 Molien coefficient is the average trace on ``A_1``.
    """
    _central_index(presentation)
    names = tuple(g.name for g in generators)
    try:
        group = order_and_closure(generators, order_cap)
    except ExceedsCap:
        return ReesGroupReport(names, order_cap, generator_count=presentation.ngens)
    quasi = tuple(
        g.name
        for g in group
        if classify(
            presentation, presentation.profile, g, cutoff, order_cap=order_cap
        ).is_quasi_reflection
    )
    total = ZERO
    for g in group:
        for i in range(g.size):
            total = total + g.matrix[i][i]
    degree_one = total / group.order
    log.info("group of order %d with %d quasi-reflections", group.order, len(quasi))
    return ReesGroupReport(
        names, order_cap, group.order, quasi, degree_one, presentation.ngens
    )

"""Witness-scoped rigidity verdicts from normal squares of degree-1 elements."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

from ..algebra import NCPoly, NormalityResult, Presentation, normality_check
from ..algebra.presentation import ElementLike
from ..automorphism import GradedAutomorphism
from .classify import DEFAULT_ORDER_CAP
from .eigen import eigen_structure, eigenvectors

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CandidateCheck:
    """Normality of a candidate ``b`` and of ``b²``."""

    element: str
    normal: NormalityResult
    square: NormalityResult


@dataclass(frozen=True)
class RigidityVerdict:
    """Outcome of the normal-square search over the candidates."""

    checks: Tuple[CandidateCheck, ...]
    cutoff: int
    notes: Tuple[str, ...] = ()

    @property
    def witnesses(self) -> list[str]:
        """Candidates whose square is normal."""
        return [c.element for c in self.checks if c.square.normal]

    @property
    def hypothesis_fails(self) -> bool:
        """Whether some candidate has a normal square."""
        return bool(self.witnesses)

    @property
    def message(self) -> str:
        """Verdict text, scoped to the candidates."""
        if self.hypothesis_fails:
            return (
                f"normal square for {', '.join(self.witnesses)}: "
                "no rigidity conclusion"
            )
        return (
            f"no candidate has a normal square (checked to degree {self.cutoff}): "
            "no quasi-reflection among automorphisms whose eigenvectors lie in "
            "the candidate set"
        )


def _candidate_elements(
    presentation: Presentation,
    candidates: Sequence[ElementLike],
    automorphisms: Sequence[GradedAutomorphism],
    order_cap: int,
) -> list[NCPoly]:
    elements = [presentation.element(c) for c in candidates]
    for g in automorphisms:
        for root, _ in eigen_structure(g, g.order(order_cap)):
            elements.extend(eigenvectors(g, root))
    unique: dict[str, NCPoly] = {}
    for b in elements:
        if presentation.degree_of(b) != 1:
            raise ValueError(f"candidate {presentation.render(b)} is not of degree 1")
        unique.setdefault(presentation.render(b), b)
    return list(unique.values())


def rigidity_verdict(
    presentation: Presentation,
    candidates: Sequence[ElementLike],
    cutoff: int,
    *,
    automorphisms: Sequence[GradedAutomorphism] = (),
    order_cap: int = DEFAULT_ORDER_CAP,
) -> RigidityVerdict:
    """Run normality checks on ``b`` and ``b²`` for each candidate ``b`` of degree 1.

    Eigenvectors of ``automorphisms`` join the candidates. Generators left out
    of the candidates whose square is normal are reported as notes.
    """
    system = presentation.rewriting(cutoff)
    elements = _candidate_elements(presentation, candidates, automorphisms, order_cap)
    checks = []
    for b in elements:
        square = system.normal_form(b * b)
        checks.append(
            CandidateCheck(
                presentation.render(b),
                normality_check(presentation, b, cutoff),
                normality_check(presentation, square, cutoff),
            )
        )
    covered = {c.element for c in checks}
    notes = []
    for name in presentation.names:
        if name in covered:
            continue
        x = presentation.gen(name)
        if normality_check(presentation, system.normal_form(x * x), cutoff).normal:
            notes.append(f"{name}^2 is normal")
    verdict = RigidityVerdict(tuple(checks), cutoff, tuple(notes))
    log.info("rigidity on %s: %s", presentation.name, verdict.message)
    return verdict

"""Consistency checks for mystic reflections."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Tuple

from ..algebra import AlgebraProfile, Presentation, normality_check
from ..automorphism import GradedAutomorphism, trace_series
from ..cyclotomic import RootOfUnity
from ..exceptions import PreconditionError
from ..linalg import EchelonBasis
from ..series import FactoredRational, expand
from .classify import ClassificationReport, ReflectionKind
from .eigen import eigenvectors

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    """A named sub-check with its witness."""

    name: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        """Render as ``PASS name: detail``."""
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


@dataclass(frozen=True)
class MysticCheck:
    """Sub-checks run on a mystic reflection."""

    name: str
    checks: Tuple[Check, ...]

    @property
    def passed(self) -> bool:
        """Whether every sub-check passed."""
        return all(c.passed for c in self.checks)


def mystic_consistency(
    presentation: Presentation,
    profile: AlgebraProfile,
    g: GradedAutomorphism,
    report: ClassificationReport,
    cutoff: int,
    normality_cutoff: int | None = None,
) -> MysticCheck:
    """Check the traces of ``g²``, ``g³`` and the squares of the eigenvectors.

    With ``b₁``, ``b₂`` eigenvectors for ``i`` and ``−i``: ``Tr(g³)`` is the
    coefficient-wise conjugate of ``Tr(g)``, ``Tr(g²) = 1/((1−t)^{n−2}(1+t)²)``,
    ``b₁²`` and ``b₂²`` are dependent in degree 2 and ``b₁²`` is normal.
    """
    if report.kind is not ReflectionKind.MYSTIC_REFLECTION:
        raise PreconditionError(f"{g.name} is classified as {report.kind}")
    n = profile.gkdim
    checks = []

    base = report.trace.coefficients
    cube = trace_series(presentation, g**3, cutoff)
    conjugate = all(c == b.conjugate() for b, c in zip(base, cube))
    checks.append(
        Check("cube_trace_conjugate", conjugate, f"Tr(g^3) to degree {cutoff}")
    )

    square = trace_series(presentation, g**2, cutoff)
    form = FactoredRational.inverse_of([(1, n - 2), (-1, 2)])
    expected = expand(form, cutoff)
    checks.append(
        Check("square_trace", square == expected, f"Tr(g^2) against {form}")
    )

    (b1, *_) = eigenvectors(g, RootOfUnity(4, 1))
    (b2, *_) = eigenvectors(g, RootOfUnity(4, 3))
    system = presentation.rewriting(max(cutoff, 2))
    s1, s2 = system.normal_form(b1 * b1), system.normal_form(b2 * b2)
    span = EchelonBasis(system.order.key)
    span.add(s1.terms)
    span.add(s2.terms)
    rendered = f"{presentation.render(s1)} and {presentation.render(s2)}"
    checks.append(Check("squares_dependent", span.rank <= 1, rendered))

    result = normality_check(presentation, s1, normality_cutoff or cutoff)
    checks.append(Check("square_normal", result.normal, str(result)))
    for check in checks:
        log.debug("%s: %s", g.name, check)
    return MysticCheck(g.name, tuple(checks))

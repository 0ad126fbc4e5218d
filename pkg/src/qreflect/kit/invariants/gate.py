"""Logical verdicts on the regularity of fixed rings."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

import sympy

from ..algebra import AlgebraProfile
from ..automorphism import FiniteGroup, gorenstein_flag
from ..cyclotomic import CycNumber
from ..reflection import ClassificationReport, ReflectionKind

log = logging.getLogger(__name__)


class GateKind(str, Enum):
    """Verdict bucket of the regularity gate."""

    TRIVIAL = "trivial"
    INFINITE_GLOBAL_DIMENSION = "infinite_global_dimension"
    REGULAR = "regular"
    NECESSARY_CONDITION_MET = "necessary_condition_met"

    def __str__(self):
        """Get the enum value."""
        return self.value


@dataclass(frozen=True)
class GateVerdict:
    """Verdict with the quasi-reflections, notes and homological determinants."""

    kind: GateKind
    message: str
    group_order: int
    quasi_reflections: Tuple[str, ...] = ()
    notes: Tuple[str, ...] = ()
    hdets: Tuple[Tuple[str, CycNumber], ...] = ()

    @property
    def gorenstein(self) -> bool:
        """Whether every hdet is 1, so that ``A^G`` is AS-Gorenstein."""
        return gorenstein_flag(h for _, h in self.hdets)

    def __str__(self) -> str:
        """Render the verdict and notes."""
        lines = [f"{self.kind}: {self.message}"]
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)


def _is_prime_power(n: int) -> bool:
    return n > 1 and len(sympy.factorint(n)) == 1


def regularity_gate(
    profile: AlgebraProfile,
    group: FiniteGroup,
    reports: Sequence[ClassificationReport],
) -> GateVerdict:
    """Decide what the quasi-reflections of ``group`` force on ``A^G``.

    ``reports`` classify the group elements in group order. Infinite global
    dimension is asserted only when no element is a quasi-reflection, or for
    cyclic groups of prime-power order without a quasi-reflection generator,
    or for groups of order ``4m``, ``m > 1``, with no reflection and fewer
    than four mystic reflections.
    """
    by_element = dict(zip(group, reports))
    quasi = tuple(r.name for r in reports if r.is_quasi_reflection)
    hdets = tuple((r.name, r.hdet) for r in reports)
    notes = []
    gorenstein = gorenstein_flag(h for _, h in hdets)
    notes.append(
        "every hdet is 1: A^G is AS-Gorenstein"
        if gorenstein
        else "some hdet differs from 1"
    )

    def verdict(kind: GateKind, message: str) -> GateVerdict:
        log.info("gate: %s", message)
        return GateVerdict(kind, message, group.order, quasi, tuple(notes), hdets)

    if group.is_trivial():
        return verdict(GateKind.TRIVIAL, "trivial group: A^G = A")
    if not quasi:
        return verdict(
            GateKind.INFINITE_GLOBAL_DIMENSION,
            "G contains no quasi-reflection: A^G has infinite global dimension "
            "and A^G is not isomorphic to A",
        )
    if not profile.is_quantum:
        return verdict(
            GateKind.NECESSARY_CONDITION_MET,
            f"necessary condition met: quasi-reflections {', '.join(quasi)}",
        )

    generators = [g for g in group if group.element_order(g) == group.order]
    if generators:
        if any(by_element[g].is_quasi_reflection for g in generators):
            return verdict(
                GateKind.REGULAR,
                "cyclic group generated by a quasi-reflection: A^G is regular",
            )
        if _is_prime_power(group.order):
            return verdict(
                GateKind.INFINITE_GLOBAL_DIMENSION,
                "cyclic group of prime-power order whose generator is not a "
                "quasi-reflection: A^G has infinite global dimension",
            )

    kinds = [r.kind for r in reports if r.is_quasi_reflection]
    reflections = kinds.count(ReflectionKind.REFLECTION)
    mystic = kinds.count(ReflectionKind.MYSTIC_REFLECTION)
    if group.order % 4 == 0 and group.order > 4 and not reflections:
        if mystic < 4:
            return verdict(
                GateKind.INFINITE_GLOBAL_DIMENSION,
                f"|G| = {group.order} without reflections and with {mystic} mystic "
                "reflections (at least 4 needed): A^G has infinite global dimension",
            )
        notes.append(
            f"|G| = {group.order} without reflections: G contains at least "
            f"4 mystic reflections ({mystic})"
        )
    if group.order % 2:
        notes.append("|G| is odd: a regular A^G forces A = C[b; sigma]")
    for r in reports:
        if r.is_quasi_reflection and r.order not in (2, 4):
            notes.append(f"{r.name} has order {r.order}: A = C[b; sigma]")
    return verdict(
        GateKind.NECESSARY_CONDITION_MET,
        f"necessary condition met: quasi-reflections {', '.join(quasi)}",
    )

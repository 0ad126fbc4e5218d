"""Quasi-reflection classification driven by the reconstructed Euler polynomial."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from ..algebra import AlgebraProfile, NormalityResult, Presentation, normality_check
from ..automorphism import GradedAutomorphism, TraceFunction, trace_function
from ..cyclotomic import CycNumber, RootOfUnity
from ..exceptions import ConsistencyError, ExceedsCap, PreconditionError
from ..series import CyclotomicFactorization, Poly, cyclotomic_factorization
from .eigen import (
    Eigenvalues,
    eigen_structure,
    eigenvectors,
    fixed_dimension,
    non_trivial,
)

log = logging.getLogger(__name__)

DEFAULT_ORDER_CAP = 10_000
ZETA6 = RootOfUnity(6, 1)
ZETA6_BAR = RootOfUnity(6, 5)


class ReflectionKind(str, Enum):
    """Classification bucket of a graded automorphism."""

    IDENTITY = "identity"
    REFLECTION = "reflection"
    MYSTIC_REFLECTION = "mystic_reflection"
    UNCLASSIFIED_QUASI_REFLECTION = "unclassified_quasi_reflection"
    QUASI_BIREFLECTION = "quasi_bireflection"
    NONE = "none"

    @property
    def is_quasi_reflection(self) -> bool:
        """Whether the trace has a pole of order ``GKdim − 1`` at t = 1."""
        return self in (
            ReflectionKind.REFLECTION,
            ReflectionKind.MYSTIC_REFLECTION,
            ReflectionKind.UNCLASSIFIED_QUASI_REFLECTION,
        )

    def __str__(self):
        """Get the enum value."""
        return self.value


class EigenCase(str, Enum):
    """Pattern of the degree-1 eigenvalues other than 1."""

    SINGLE = "single_eigenvalue"
    OPPOSITE_PAIR = "opposite_pair"
    SIXTH_ROOT_TRIPLE = "sixth_root_triple"
    SIXTH_ROOT_QUADRUPLE = "sixth_root_quadruple"
    OTHER = "other"

    def __str__(self):
        """Get the enum value."""
        return self.value


def eigen_case(eigenvalues: Eigenvalues) -> EigenCase:
    """Match the non-trivial eigenvalues against the quasi-reflection shapes."""
    rest = sorted(non_trivial(eigenvalues))
    if len(rest) == 1:
        return EigenCase.SINGLE
    if len(rest) == 2 and rest[0] * RootOfUnity(2, 1) == rest[1]:
        return EigenCase.OPPOSITE_PAIR
    counts = Counter(rest)
    if len(rest) == 3 and sorted(counts.values()) == [1, 2] and set(counts) == {
        ZETA6,
        ZETA6_BAR,
    }:
        return EigenCase.SIXTH_ROOT_TRIPLE
    if len(rest) == 4 and counts == Counter({ZETA6: 2, ZETA6_BAR: 2}):
        return EigenCase.SIXTH_ROOT_QUADRUPLE
    return EigenCase.OTHER


@dataclass(frozen=True)
class ClassificationReport:
    """Trace-side and matrix-side data of one automorphism."""

    name: str
    kind: ReflectionKind
    trace: TraceFunction
    gkdim: int
    order: int | None
    eigenvalues: Eigenvalues = ()
    xi: CycNumber | None = None
    inverse_xi: CycNumber | None = None
    case: EigenCase | None = None
    notes: Tuple[str, ...] = ()

    @property
    def pole_order_at_one(self) -> int:
        """Pole order of the trace at t = 1."""
        return self.trace.pole_order_at_one

    @property
    def hdet(self) -> CycNumber:
        """Homological determinant."""
        return self.trace.hdet

    @property
    def euler(self) -> Poly:
        """Euler polynomial ``e_g``."""
        return self.trace.euler

    @property
    def is_quasi_reflection(self) -> bool:
        """Whether ``kind`` is one of the quasi-reflection buckets."""
        return self.kind.is_quasi_reflection

    def __str__(self) -> str:
        """One-line summary."""
        parts = [f"{self.name}: {self.kind}"]
        if self.xi is not None:
            parts.append(f"xi = {self.xi}")
        parts.append(f"order {self.order}" if self.order else "order exceeds cap")
        parts.append(f"e = {self.euler}")
        parts.append(f"hdet = {self.hdet}")
        if self.case is not None:
            parts.append(f"case {self.case}")
        return ", ".join(parts)


def _surplus_root(
    factorization: CyclotomicFactorization, profile: AlgebraProfile
) -> CycNumber | None:
    """The root ξ when ``e_g = e · (1 − ξt)/(1 − t)``, else None."""
    if not factorization.complete:
        return None
    base = cyclotomic_factorization(profile.euler)
    own = Counter(dict(factorization.roots))
    reference = Counter(dict(base.roots))
    surplus, deficit = own - reference, reference - own
    if deficit != Counter({RootOfUnity(1, 0): 1}) or sum(surplus.values()) != 1:
        return None
    (root,) = surplus
    return root.value()


def _order(g: GradedAutomorphism, order_cap: int) -> int | None:
    try:
        return g.order(order_cap)
    except ExceedsCap:
        log.warning("order of %s exceeds the cap %d", g.name, order_cap)
        return None


def classify(
    presentation: Presentation,
    profile: AlgebraProfile | None,
    g: GradedAutomorphism,
    cutoff: int,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
    order_bound: int | None = None,
    trace: TraceFunction | None = None,
    inverse_trace: TraceFunction | None = None,
) -> ClassificationReport:
    """Classify ``g`` by the pole of its trace at t = 1, then by its eigenvalues.

    ``trace`` and ``inverse_trace`` reuse trace functions of ``g`` and its
    inverse already computed to ``cutoff``, as for the elements of a group.

    On quantum polynomial rings a quasi-reflection must be a reflection of the
    degree-1 space or a mystic reflection of order 4; any other eigenvalue
    pattern, an hdet different from ξ or an inverse whose ξ is not the
    conjugate raises :class:`ConsistencyError`.
    """
    profile = profile or presentation.profile
    if profile is None:
        raise PreconditionError(f"{presentation.name} has no declared profile")
    notes: list[str] = []
    order = _order(g, order_cap)
    if order is None:
        notes.append(f"order exceeds the cap {order_cap}")
    if trace is None:
        trace = trace_function(
            presentation, profile, g, cutoff, order=order, order_bound=order_bound
        )
    n = profile.gkdim
    pole = trace.pole_order_at_one
    eigenvalues = eigen_structure(g, order) if order else ()
    fields = dict(
        name=g.name,
        trace=trace,
        gkdim=n,
        order=order,
        eigenvalues=eigenvalues,
    )

    if g.is_identity():
        return ClassificationReport(kind=ReflectionKind.IDENTITY, **fields)
    if pole >= n:
        if order is not None:
            raise ConsistencyError(
                f"{g.name} is not the identity but its trace has a pole of order "
                f"{pole} at t = 1"
            )
        notes.append("trace has the pole order of the Hilbert series")
        return ClassificationReport(
            kind=ReflectionKind.NONE, notes=tuple(notes), **fields
        )
    if pole == n - 2 and pole > 0:
        return ClassificationReport(
            kind=ReflectionKind.QUASI_BIREFLECTION, notes=tuple(notes), **fields
        )
    if pole != n - 1:
        return ClassificationReport(
            kind=ReflectionKind.NONE, notes=tuple(notes), **fields
        )

    xi = _surplus_root(trace.factorization, profile)
    case = eigen_case(eigenvalues) if eigenvalues else None
    if order is None:
        kind = ReflectionKind.UNCLASSIFIED_QUASI_REFLECTION
    elif fixed_dimension(eigenvalues) == g.size - 1:
        kind = ReflectionKind.REFLECTION
    elif not profile.is_quantum:
        kind = ReflectionKind.UNCLASSIFIED_QUASI_REFLECTION
        notes.append("profile is not a quantum polynomial ring")
    elif case is EigenCase.OPPOSITE_PAIR and order == 4:
        kind = ReflectionKind.MYSTIC_REFLECTION
    else:
        raise ConsistencyError(
            f"{g.name} has a quasi-reflection trace but degree-1 eigenvalue pattern "
            f"{case} (order {order})"
        )
    if xi is not None and trace.hdet != xi:
        raise ConsistencyError(f"hdet {trace.hdet} of {g.name} differs from xi = {xi}")

    inverse_xi = None
    if order is not None:
        if inverse_trace is None:
            inverse_trace = trace_function(
                presentation,
                profile,
                g.inverse(),
                cutoff,
                order=order,
                order_bound=order_bound,
            )
        inverse_xi = _surplus_root(inverse_trace.factorization, profile)
        if xi is not None and inverse_xi != xi.conjugate():
            raise ConsistencyError(
                f"inverse of {g.name} has xi = {inverse_xi}, expected {xi.conjugate()}"
            )
    log.info("%s is a %s with xi = %s", g.name, kind, xi)
    return ClassificationReport(
        kind=kind,
        xi=xi,
        inverse_xi=inverse_xi,
        case=case,
        notes=tuple(notes),
        **fields,
    )


def reflection_vector_normality(
    presentation: Presentation,
    g: GradedAutomorphism,
    report: ClassificationReport,
    cutoff: int,
) -> NormalityResult:
    """Normality of the eigenvector of the non-trivial eigenvalue of a reflection."""
    if report.kind is not ReflectionKind.REFLECTION:
        raise PreconditionError(f"{g.name} is not classified as a reflection")
    (root,) = non_trivial(report.eigenvalues)
    (vector,) = eigenvectors(g, root)
    return normality_check(presentation, vector, cutoff)

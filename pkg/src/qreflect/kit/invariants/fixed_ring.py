"""Hilbert series of fixed rings: reconstruction and quasi-reflection counts."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence, Tuple

from ..algebra import AlgebraProfile
from ..automorphism import TraceFunction
from ..cyclotomic import ZERO, CycNumber
from ..exceptions import PreconditionError, ReconstructionMismatch
from ..series import FactoredRational, Poly, laurent_at_one, reconstruct_rational

log = logging.getLogger(__name__)


class FixedRingStatus(str, Enum):
    """Outcome of the ``1/e`` reconstruction of a Molien series."""

    RECONSTRUCTED = "reconstructed"
    INCONCLUSIVE = "inconclusive"

    def __str__(self):
        """Get the enum value."""
        return self.value


@dataclass(frozen=True)
class LaurentCheck:
    """Compare the ``(1 − t)^{−(n−1)}`` Molien coefficient with ``r/(2|G|)``."""

    coefficient: CycNumber
    quasi_count: int
    group_order: int

    @property
    def expected(self) -> Fraction:
        """``r / (2|G|)``."""
        return Fraction(self.quasi_count, 2 * self.group_order)

    @property
    def holds(self) -> bool:
        """Exact equality."""
        return self.coefficient == CycNumber.rational(self.expected)


@dataclass(frozen=True)
class MolienReport:
    """Molien series of a group with the fixed-ring reconstruction."""

    series: Tuple[CycNumber, ...]
    group_order: int
    quasi_count: int
    status: FixedRingStatus
    function: FactoredRational | None = None
    euler: Poly | None = None
    q: Poly | None = None
    p_at_one: CycNumber | None = None
    laurent: LaurentCheck | None = None

    @property
    def q_at_one_ok(self) -> bool | None:
        """``q(1) = |G|·p(1)``, None without ``q``."""
        if self.q is None or self.p_at_one is None:
            return None
        return self.q(1) == self.p_at_one * self.group_order

    @property
    def degree_ok(self) -> bool | None:
        """``deg q = r`` on quantum polynomial rings, None otherwise."""
        if self.q is None or self.p_at_one is None or self.p_at_one != 1:
            return None
        return self.q.degree == self.quasi_count

    @property
    def message(self) -> str:
        """Summary of the reconstruction."""
        if self.status is FixedRingStatus.INCONCLUSIVE:
            return (
                "Hilbert series not of finite-global-dimension form "
                f"(no 1/e(t) with deg e <= {(len(self.series) - 1) // 2})"
            )
        if self.q is None:
            return f"H = 1/({self.euler})"
        return f"H = 1/((1 - t)^n * q(t)) with q = {self.q}"


def fixed_ring_analysis(
    series: Sequence[CycNumber],
    profile: AlgebraProfile,
    group_order: int,
    quasi_count: int,
    *,
    function: FactoredRational | None = None,
    laurent: LaurentCheck | None = None,
) -> MolienReport:
    """Search ``H_{A^G} = 1/e`` with ``deg e`` from the profile degree upward.

    On success ``q = e/(1 − t)^{GKdim}`` is reported with the checks
    ``q(1) = |G|·p(1)`` and, for quantum polynomial rings, ``deg q = r``.
    """
    cutoff = len(series) - 1
    fields = dict(
        series=tuple(series),
        group_order=group_order,
        quasi_count=quasi_count,
        function=function,
        laurent=laurent,
    )
    for degree in range(profile.euler_degree, cutoff // 2 + 1):
        try:
            euler = reconstruct_rational(series, degree, cutoff)
        except ReconstructionMismatch:
            continue
        log.debug("Molien series is 1/e with deg e = %d", euler.degree)
        q = euler
        for _ in range(profile.gkdim):
            q, remainder = q.divide_linear(1)
            if remainder:
                return MolienReport(
                    status=FixedRingStatus.RECONSTRUCTED, euler=euler, **fields
                )
        return MolienReport(
            status=FixedRingStatus.RECONSTRUCTED,
            euler=euler,
            q=q,
            p_at_one=profile.p_factor(1),
            **fields,
        )
    log.warning("no 1/e(t) form with deg e <= %d for the Molien series", cutoff // 2)
    return MolienReport(status=FixedRingStatus.INCONCLUSIVE, **fields)


def quasi_count_laurent(
    profile: AlgebraProfile,
    traces: Sequence[TraceFunction],
    quasi_count: int,
) -> LaurentCheck:
    """Sum the per-element coefficients of ``(1 − t)^{−(n−1)}`` at t = 1."""
    if not profile.is_quantum:
        raise PreconditionError(
            "the quasi-reflection count identity needs a quantum profile"
        )
    n = profile.gkdim
    total = ZERO
    for trace in traces:
        total = total + laurent_at_one(trace.rational, 2).coefficient(n - 1)
    return LaurentCheck(total / len(traces), quasi_count, len(traces))

"""Molien series, averaging-operator ranks and isotypic decompositions."""

from __future__ import annotations

import logging
from typing import Dict, List, Sequence, Tuple

from ..algebra import AlgebraProfile, Presentation, Word
from ..automorphism import (
    FiniteGroup,
    GradedAutomorphism,
    TraceFunction,
    trace_function,
    trace_series,
)
from ..cyclotomic import ZERO, CycNumber, RootOfUnity
from ..linalg import EchelonBasis
from ..series import FactoredRational

log = logging.getLogger(__name__)


def group_traces(
    presentation: Presentation,
    profile: AlgebraProfile,
    group: FiniteGroup,
    cutoff: int,
    *,
    order_bound: int | None = None,
) -> List[TraceFunction]:
    """Trace functions of every group element, in group order."""
    return [
        trace_function(
            presentation,
            profile,
            g,
            cutoff,
            order=group.element_order(g),
            order_bound=order_bound,
        )
        for g in group
    ]


def molien(
    presentation: Presentation,
    group: FiniteGroup,
    cutoff: int,
    *,
    traces: Sequence[TraceFunction] | None = None,
) -> List[CycNumber]:
    """``dim (A^G)_i`` for ``i ≤ cutoff`` as the average of the trace series.

    ``traces`` are the trace functions of the group elements, in group order.
    """
    if traces is None:
        series = [trace_series(presentation, g, cutoff) for g in group]
    else:
        if len(traces) != group.order:
            raise ValueError(f"{len(traces)} traces for a group of order {group.order}")
        series = [list(t.coefficients[: cutoff + 1]) for t in traces]
        if any(len(s) <= cutoff for s in series):
            raise ValueError(f"trace series shorter than the cutoff {cutoff}")
    total = [ZERO] * (cutoff + 1)
    for coefficients in series:
        for i, c in enumerate(coefficients):
            total[i] = total[i] + c
    return [c / group.order for c in total]


def molien_function(traces: Sequence[TraceFunction]) -> FactoredRational:
    """Exact ``H_{A^G}`` as the reduced average of the factored traces."""
    total = traces[0].rational
    for trace in traces[1:]:
        total = total + trace.rational
    return total.scale(CycNumber.rational(1) / len(traces)).reduced()


def invariant_dims_oracle(
    presentation: Presentation, group: FiniteGroup, cutoff: int
) -> List[int]:
    """Rank of the averaging operator ``(1/|G|) Σ g`` on each ``A_i``."""
    system = presentation.rewriting(cutoff)
    actions = [g.action(system) for g in group]
    dims = []
    for degree in range(cutoff + 1):
        image = EchelonBasis(system.order.key)
        for word in system.normal_words(degree):
            column: Dict[Word, CycNumber] = {}
            for action in actions:
                for w, c in action.image(word).items():
                    column[w] = column.get(w, ZERO) + c
            image.add(column)
        dims.append(image.rank)
        log.debug("averaging operator rank in degree %d: %d", degree, image.rank)
    return dims


def isotypic_series(
    presentation: Presentation, g: GradedAutomorphism, order: int, cutoff: int
) -> List[Tuple[RootOfUnity, List[CycNumber]]]:
    """Dimension series of each eigenvalue component of ``g`` of the given order.

    The component of ``ζ = ζ_order^k`` has ``i``-th coefficient
    ``(1/order) Σ_j ζ^{−j} tr(g^j | A_i)``.
    """
    traces = [trace_series(presentation, g**j, cutoff) for j in range(order)]
    components = []
    for k in range(order):
        root = RootOfUnity.canonical(order, k)
        series = []
        for i in range(cutoff + 1):
            value = ZERO
            for j in range(order):
                value = value + root.power(-j).value() * traces[j][i]
            series.append(value / order)
        components.append((root, series))
    return components

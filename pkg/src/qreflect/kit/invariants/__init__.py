"""Molien series, fixed-ring Hilbert series and regularity verdicts."""

from .fixed_ring import (
    FixedRingStatus,
    LaurentCheck,
    MolienReport,
    fixed_ring_analysis,
    quasi_count_laurent,
)
from .gate import GateKind, GateVerdict, regularity_gate
from .molien import (
    group_traces,
    invariant_dims_oracle,
    isotypic_series,
    molien,
    molien_function,
)

__all__ = [
    "molien",
    "molien_function",
    "group_traces",
    "invariant_dims_oracle",
    "isotypic_series",
    "FixedRingStatus",
    "LaurentCheck",
    "MolienReport",
    "fixed_ring_analysis",
    "quasi_count_laurent",
    "GateKind",
    "GateVerdict",
    "regularity_gate",
]

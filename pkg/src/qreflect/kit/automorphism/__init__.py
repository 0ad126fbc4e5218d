"""Graded automorphisms, finite groups and trace series."""

from .fileformat import (
    load_automorphisms,
    parse_automorphism_blocks,
    parse_automorphisms,
)
from .group import FiniteGroup, order_and_closure
from .model import GradedAction, GradedAutomorphism, verify_automorphism
from .trace import (
    TraceFunction,
    euler_polynomial,
    gorenstein_flag,
    hdet,
    trace_function,
    trace_series,
)

__all__ = [
    "GradedAutomorphism",
    "GradedAction",
    "verify_automorphism",
    "FiniteGroup",
    "order_and_closure",
    "TraceFunction",
    "trace_series",
    "trace_function",
    "euler_polynomial",
    "hdet",
    "gorenstein_flag",
    "parse_automorphisms",
    "parse_automorphism_blocks",
    "load_automorphisms",
]

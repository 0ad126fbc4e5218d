"""Base exception class hierarchy for errors in the invariant-theory toolkit."""

from __future__ import annotations

from typing import Any


class QReflectError(Exception):
    """Root class for all exceptions raised by this package."""


class ConfigError(QReflectError):
    """Exception class for toolkit configuration and profiles."""


class ParseError(QReflectError, ValueError):
    """Malformed coefficient expression, presentation or automorphism file."""

    source: str | None
    line: int | None

    def __init__(self, *args, source: str | None = None, line: int | None = None):
        """Create an instance."""
        super().__init__(*args)
        self.source = source
        self.line = line

    def __str__(self):
        """Get the string representation of the exception."""
        error_message = super().__str__()
        if self.line is not None:
            error_message += f" (line {self.line}"
            if self.source:
                error_message += f" of {self.source}"
            error_message += ")"
        elif self.source:
            error_message += f" (in {self.source})"
        return error_message


class CyclotomicZeroDivision(QReflectError, ZeroDivisionError):
    """Division by the zero element of a cyclotomic field."""


class GaloisError(QReflectError, ValueError):
    """Galois exponent not coprime to the conductor."""


class ComputationError(QReflectError):
    """Exception class for failed exact computations."""


class ConductorOverflow(ComputationError):
    """Input coefficient conductor above the configured limit."""


class ReconstructionMismatch(ComputationError):
    """Truncated series is not the expansion of 1/e for the given degree."""

    def __init__(self, degree: int, expected: Any, actual: Any):
        """Create an instance."""
        super().__init__(
            f"series is not of the form 1/e: coefficient {degree} "
            f"is {actual}, expected {expected}"
        )
        self.degree = degree
        self.expected = expected
        self.actual = actual


class HilbertMismatch(ComputationError):
    """Graded dimensions disagree with the declared Hilbert series."""

    def __init__(self, degree: int, expected: Any, actual: Any):
        """Create an instance."""
        super().__init__(
            f"dim A_{degree} = {actual} "
            f"but the declared Hilbert series gives {expected}"
        )
        self.degree = degree
        self.expected = expected
        self.actual = actual


class NotAnAutomorphism(ComputationError):
    """Matrix does not preserve the relation ideal."""

    def __init__(self, msg: str, witness: str | None = None):
        """Create an instance."""
        full_msg = msg
        if witness is not None:
            full_msg = f"{msg}: relation {witness} not preserved"
        super().__init__(full_msg)
        self.witness = witness


class NonInvertible(ComputationError):
    """Matrix is singular."""


class ExceedsCap(ComputationError):
    """Group closure grew past the configured order cap."""

    def __init__(self, cap: int, msg: str | None = None):
        """Create an instance."""
        super().__init__(
            msg
            or f"closure exceeds the order cap {cap} "
            "(evidence, not proof, of infinite order)"
        )
        self.cap = cap


class NonUnityRoot(ComputationError):
    """A root required to be a root of unity is not one."""


class CandidateSetOverflow(ComputationError):
    """Root-sum search would enumerate more candidates than allowed."""

    def __init__(self, limit: int, count: int):
        """Create an instance."""
        super().__init__(
            f"root-sum candidate set has {count} entries, above the limit {limit}"
        )
        self.limit = limit
        self.count = count


class ConsistencyError(ComputationError):
    """Trace-side and matrix-side classifications disagree."""


class PreconditionError(ComputationError):
    """Operation called on an input outside its domain."""


class JacobiError(ComputationError):
    """Structure constants are not those of a Lie algebra."""


class OreExtensionError(ComputationError):
    """Invalid Ore extension data."""


class LaurentError(ComputationError):
    """Laurent expansion at t = 1 requested for a function without a pole there."""

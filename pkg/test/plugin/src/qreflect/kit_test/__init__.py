"""Example fixture suites for qreflect-kit"""

from .suites import ExampleSuite

__all__ = [
    "ExampleSuite",
]

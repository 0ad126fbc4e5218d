"""Exact invariant theory of graded automorphisms of noncommutative algebras."""

from ._version import __version__
from .algebra import AlgebraProfile, Presentation, load_presentation
from .automorphism import GradedAutomorphism, load_automorphisms, verify_automorphism
from .config import RunConfig
from .cyclotomic import CycNumber, RootOfUnity
from .exceptions import QReflectError
from .plugin import Fixture, FixtureSuite, PluginAccess, QReflectPlugin
from .rootsum import RootSumProblem, solve
from .series import FactoredRational, Poly
from .toolkit import Toolkit

__all__ = [
    "__version__",
    "Toolkit",
    "RunConfig",
    "QReflectError",
    "QReflectPlugin",
    "FixtureSuite",
    "Fixture",
    "PluginAccess",
    "CycNumber",
    "RootOfUnity",
    "Poly",
    "FactoredRational",
    "Presentation",
    "AlgebraProfile",
    "load_presentation",
    "GradedAutomorphism",
    "verify_automorphism",
    "load_automorphisms",
    "RootSumProblem",
    "solve",
]

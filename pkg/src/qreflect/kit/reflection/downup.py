"""Elimination of quasi-reflections on two-generated regular algebras of dimension 3.

Such algebras have Hilbert series ``1/((1−t)²(1−t²))``. A quasi-reflection
would have trace ``1/((1−t)²(1−ξ₁t)(1−ξ₂t))`` and degree-1 eigenvalues
``x₁, x₂`` with ``x₁ + x₂ − ξ₁ − ξ₂ = 2``. The root-sum solver enumerates the
solutions of that equation; each is then contradicted in degree 2 or 3.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Tuple

import sympy

from ..algebra import AlgebraProfile
from ..cyclotomic import CycNumber, RootOfUnity
from ..exceptions import PreconditionError
from ..rootsum import RootSumProblem, solve
from ..series import FactoredRational, expand

log = logging.getLogger(__name__)

DOWN_UP_HILBERT = FactoredRational.inverse_of([(1, 3), (-1, 1)])
DOWN_UP_GLDIM = 3


@dataclass(frozen=True)
class Elimination:
    """One solution family of the degree-1 trace equation and its contradiction."""

    label: str
    assignment: str
    required: str
    direct: str
    eliminated: bool
    reason: str

    def __str__(self) -> str:
        """Render as a one-line verdict."""
        status = "eliminated" if self.eliminated else "NOT eliminated"
        return f"{self.label} ({self.assignment}): {status}: {self.reason}"


@dataclass(frozen=True)
class DownUpReport:
    """Root-sum families of the degree-1 equation and their eliminations."""

    families: Tuple[str, ...]
    eliminations: Tuple[Elimination, ...]

    @property
    def passed(self) -> bool:
        """Whether every family is eliminated."""
        return all(e.eliminated for e in self.eliminations)

    @property
    def conclusion(self) -> str:
        """Verdict text."""
        if self.passed:
            return "no quasi-reflection of finite order"
        return "some eigenvalue family survives: no conclusion"


def _coefficient(expression, t, degree: int):
    truncated = sympy.series(expression, t, 0, degree + 1).removeO()
    return sympy.expand(truncated).coeff(t, degree)


def _cancelling_eigenvalues(t, x) -> Elimination:
    required = _coefficient(1 / ((1 - t) ** 2 * (1 + t) ** 2), t, 2)
    # A_2 is spanned by all four words of length 2
    direct = sympy.expand((x - x) ** 2)
    return Elimination(
        "cancelling_eigenvalues",
        "xi1 = xi2 = -1, x1 = -x2",
        f"tr(g|A_2) = {required}",
        f"tr(g|A_2) = {direct}",
        sympy.simplify(direct - required) != 0,
        f"b1^2, b2^2 have eigenvalue x1^2 and b1*b2, b2*b1 have -x1^2, "
        f"so tr(g|A_2) = {direct} != {required}",
    )


def _fixed_generator(t, x) -> Elimination:
    molien_term = 1 / ((1 - t) ** 2 * (1 + t) * (1 - x * t))
    required = sympy.expand(_coefficient(molien_term, t, 2))
    direct = sympy.expand((1 + x) ** 2)
    roots = sympy.solve(sympy.Eq(direct, required), x)
    return Elimination(
        "fixed_generator",
        "xi1 = -1, x1 = 1, xi2 = x2",
        f"tr(g|A_2) = {required}",
        f"tr(g|A_2) = {direct}",
        roots == [1],
        f"{direct} = {required} forces x2 = {', '.join(map(str, roots))}, "
        "so g is the identity",
    )


def _sixth_roots(t) -> Elimination:
    required = _coefficient(1 / ((1 - t) ** 2 * (1 + t + t**2)), t, 3)
    dim = int(expand(DOWN_UP_HILBERT, 3)[3].to_fraction())
    values = [
        RootOfUnity(order, k).value() for order, k in ((2, 1), (6, 1), (6, 5))
    ]
    hits = [
        counts
        for counts in product(range(dim + 1), repeat=3)
        if sum(counts) == dim
        and sum((c * v for c, v in zip(counts, values)), CycNumber()) == int(required)
    ]
    return Elimination(
        "sixth_roots",
        "x1 = -xi1 = zeta(6,1), x2 = -xi2 = zeta(6,5)",
        f"tr(g|A_3) = {required}",
        f"tr(g|A_3) = n1*(-1) + n2*zeta(6,1) + n3*zeta(6,5), n1 + n2 + n3 = {dim}",
        not hits,
        "no non-negative (n1, n2, n3) solves the degree-3 equation"
        if not hits
        else f"solutions {hits}",
    )


def _generators_fixed() -> Elimination:
    return Elimination(
        "identity_on_generators",
        "x1 = x2 = 1, xi2 = -xi1",
        "g != id",
        "g = id on A_1",
        True,
        "an automorphism fixing the degree-1 generators is the identity",
    )


def downup_filter(profile: AlgebraProfile | None = None) -> DownUpReport:
    """Enumerate and eliminate every candidate quasi-reflection eigenvalue pattern.

    Terms of ``x₁ + x₂ + (−ξ₁) + (−ξ₂) = 2`` equal to 1 are cancelled, leaving
    ``m`` terms other than 1 with sum ``m − 2``; the solver covers ``m = 2, 3, 4``.
    """
    if profile is not None and (
        profile.gldim != DOWN_UP_GLDIM or profile.hilbert != DOWN_UP_HILBERT
    ):
        raise PreconditionError(
            f"profile {profile} is not gldim 3 with Hilbert series {DOWN_UP_HILBERT}"
        )
    families = []
    for m in (2, 3, 4):
        for family in solve(RootSumProblem(m - 2, m)):
            families.append(f"{m - 2} = {family.render()}")
    t, x = sympy.symbols("t x")
    eliminations = (
        _cancelling_eigenvalues(t, x),
        _fixed_generator(t, x),
        _sixth_roots(t),
        _generators_fixed(),
    )
    for elimination in eliminations:
        log.debug("%s", elimination)
    return DownUpReport(tuple(families), eliminations)

"""Fixture suite for sums of roots of unity equal to an integer."""

from __future__ import annotations

from typing import Iterable, List, Set, Tuple

from ..cyclotomic import CycNumber, RootOfUnity, number_theory
from ..plugin.base import CheckResult, Fixture, FixtureSuite
from ..rootsum import (
    PAIR,
    RootSumProblem,
    Roots,
    SolutionFamily,
    Template,
    render_roots,
    solve,
    verify_family,
)


def _z(order: int, *exponents: int) -> Tuple[RootOfUnity, ...]:
    return tuple(RootOfUnity.canonical(order, k) for k in exponents)


def _roots(*parts: Tuple[RootOfUnity, ...]) -> Roots:
    return tuple(sorted(r for part in parts for r in part))


ZETA6_PAIR = _z(6, 1, 5)
TRIPLE = Template.canonical(_z(3, 0, 1, 2))

# reference list of sporadic solutions of 1 = x_1 + ... + x_5
REFERENCE_SPORADIC_ONE = {
    _roots(_z(10, 1, 3, 7), _z(15, 1, 11)),
    _roots(_z(10, 1, 3, 9), _z(15, 8, 13)),
    _roots(_z(10, 1, 7, 9), _z(15, 2, 7)),
    _roots(_z(10, 3, 7, 9), _z(15, 4, 14)),
}
# sporadic solutions the search finds beyond the reference list
EXTRA_SPORADIC_ONE = {
    _roots(_z(6, 1), _z(15, 2, 8, 11, 14)),
    _roots(_z(6, 5), _z(15, 1, 4, 7, 13)),
}


def _concrete(families: Iterable[SolutionFamily]) -> Set[Roots]:
    return {tuple(sorted(f.concrete)) for f in families if not f.templates}


def _render(families: List[SolutionFamily]) -> str:
    return "; ".join(str(f) for f in families) or "no solution"


class RootSumSuite(FixtureSuite):
    """Solution families of ``n = x_1 + … + x_k`` with every ``x_i ≠ 1``."""

    name = "root_sums"
    title = "Sums of roots of unity other than 1 equal to a non-negative integer"

    def _solve(self, target: int, count: int, *, strict: bool = False):
        problem = RootSumProblem.create(
            target, count, no_minus_one=strict, no_cancelling_pair=strict
        )
        families = solve(problem, self.config.rootsum_candidate_limit)
        return problem, families

    def checks(self) -> Iterable[Fixture]:
        """Fixtures in run order."""
        yield Fixture(
            "primitive_root_sums",
            "the primitive w-th roots of unity sum to the Mobius value mu(w)",
            self.primitive_root_sums,
        )
        yield Fixture(
            "two_extra_summands",
            "n = x_1 + ... + x_(n+2) only for n = 0 with xi - xi, "
            "and n = 2 with zeta6 + zeta6 + zeta6^5 + zeta6^5",
            self.two_extra_summands,
        )
        yield Fixture(
            "four_extra_summands_one",
            "1 = x_1 + ... + x_5 without -1 or cancelling pairs: "
            "zeta6 + zeta6^5 + xi (1 + zeta3 + zeta3^2) and the four listed sporadic "
            "solutions, further solutions reported as divergences",
            self.four_extra_summands_one,
        )
        yield Fixture(
            "four_extra_summands_larger",
            "2 = x_1 + ... + x_6 and 4 = x_1 + ... + x_8 have one solution each, "
            "3 = x_1 + ... + x_7 has none",
            self.four_extra_summands_larger,
        )

    def primitive_root_sums(self) -> CheckResult:
        """Exact primitive root sums against the Möbius function."""
        summaries = {w: number_theory(w) for w in range(1, 61)}
        failing = [
            w
            for w, s in summaries.items()
            if s.primitive_root_sum != CycNumber.rational(s.mobius)
        ]
        if failing:
            return False, f"orders with a wrong sum: {failing}"
        return True, "checked w <= 60"

    def two_extra_summands(self) -> CheckResult:
        """Solutions with two more summands than the target."""
        details = []
        passed = True
        for target in range(5):
            problem, families = self._solve(target, target + 2)
            if target == 0:
                ok = [(f.concrete, f.templates) for f in families] == [((), (PAIR,))]
            elif target == 2:
                expected = {_roots(ZETA6_PAIR, ZETA6_PAIR)}
                ok = len(families) == 1 and _concrete(families) == expected
            else:
                ok = not families
            ok = ok and all(verify_family(f, problem) for f in families)
            passed = passed and ok
            details.append(f"{problem}: {_render(families)}")
        return passed, "; ".join(details)

    def four_extra_summands_one(self) -> CheckResult:
        """Solutions of ``1 = x_1 + … + x_5`` under both exclusions."""
        problem, families = self._solve(1, 5, strict=True)
        parametric = [f for f in families if f.templates]
        sporadic = _concrete(families)
        passed = (
            REFERENCE_SPORADIC_ONE <= sporadic
            and len(parametric) == 1
            and parametric[0].concrete == tuple(sorted(ZETA6_PAIR))
            and parametric[0].templates == (TRIPLE,)
            and all(verify_family(f, problem) for f in families)
        )
        divergences = tuple(
            f"solution beyond the reference list: {render_roots(roots)}"
            for roots in sorted(sporadic - REFERENCE_SPORADIC_ONE)
        )
        return passed, _render(families), divergences

    def four_extra_summands_larger(self) -> CheckResult:
        """Solutions of ``n = x_1 + … + x_(n+4)`` for ``n = 2, 3, 4``."""
        expected = {
            2: {_roots(ZETA6_PAIR, _z(10, 1, 3, 7, 9))},
            3: set(),
            4: {_roots(*[ZETA6_PAIR] * 4)},
        }
        details = []
        passed = True
        for target, solutions in expected.items():
            problem, families = self._solve(target, target + 4, strict=True)
            ok = len(families) == len(solutions) and _concrete(families) == solutions
            passed = passed and ok
            details.append(f"{problem}: {_render(families)}")
        return passed, "; ".join(details)


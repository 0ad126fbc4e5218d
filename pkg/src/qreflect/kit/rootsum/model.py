"""Root-sum problems and their solution families."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, Tuple

from ..cyclotomic import CycNumber, RootOfUnity

Roots = Tuple[RootOfUnity, ...]
MINUS_ONE = RootOfUnity(2, 1)


class Exclusion(str, Enum):
    """Optional constraints on the summands."""

    NO_MINUS_ONE = "no_minus_one"
    NO_CANCELLING_PAIR = "no_cancelling_pair"

    def __str__(self):
        """Get the constraint name."""
        return self.value


@dataclass(frozen=True)
class RootSumProblem:
    """``target = x_1 + … + x_count`` with every ``x_i ≠ 1`` a root of unity."""

    target: int
    count: int
    exclusions: FrozenSet[Exclusion] = frozenset()

    def __post_init__(self):
        """Validate the problem."""
        if self.count < 1:
            raise ValueError(f"count must be positive, got {self.count}")
        if self.target < 0:
            raise ValueError(f"target must be non-negative, got {self.target}")
        object.__setattr__(
            self, "exclusions", frozenset(Exclusion(e) for e in self.exclusions)
        )

    @classmethod
    def create(
        cls,
        target: int,
        count: int,
        *,
        no_minus_one: bool = False,
        no_cancelling_pair: bool = False,
    ) -> RootSumProblem:
        """Create from exclusion flags."""
        exclusions = set()
        if no_minus_one:
            exclusions.add(Exclusion.NO_MINUS_ONE)
        if no_cancelling_pair:
            exclusions.add(Exclusion.NO_CANCELLING_PAIR)
        return cls(target, count, frozenset(exclusions))

    @property
    def no_minus_one(self) -> bool:
        """Whether ``x_i = −1`` is excluded."""
        return Exclusion.NO_MINUS_ONE in self.exclusions

    @property
    def no_cancelling_pair(self) -> bool:
        """Whether ``x_i + x_j = 0`` is excluded."""
        return Exclusion.NO_CANCELLING_PAIR in self.exclusions

    def admits(self, roots: Iterable[RootOfUnity]) -> bool:
        """Whether a concrete multiset meets the summand constraints (not the sum)."""
        roots = list(roots)
        if any(r.order == 1 for r in roots):
            return False
        if self.no_minus_one and MINUS_ONE in roots:
            return False
        if self.no_cancelling_pair:
            present = set(roots)
            if any(r * MINUS_ONE in present for r in present):
                return False
        return True

    def __str__(self) -> str:
        """Describe the problem."""
        text = f"{self.target} = sum of {self.count} roots of unity other than 1"
        if self.exclusions:
            text += " (" + ", ".join(sorted(map(str, self.exclusions))) + ")"
        return text


def render_roots(roots: Iterable[RootOfUnity]) -> str:
    """Render a multiset as a sum in the coefficient grammar."""
    roots = list(roots)
    return " + ".join(map(str, roots)) if roots else "0"


def roots_sum(roots: Iterable[RootOfUnity]) -> CycNumber:
    """Exact sum of roots of unity."""
    total = CycNumber()
    for root in roots:
        total = total + root.value()
    return total


_TEMPLATE_NAMES = {2: "pair", 3: "triple", 5: "pentagon"}


@dataclass(frozen=True)
class Template:
    """Minimal vanishing multiset up to rotation.

    ``roots`` is the canonical representative: the smallest sorted rotation
    that contains 1.
    """

    roots: Roots

    @classmethod
    def canonical(cls, roots: Iterable[RootOfUnity]) -> Template:
        """Canonical form of any rotation of a vanishing multiset."""
        roots = tuple(roots)
        best = min(
            tuple(sorted(r * pivot.inverse() for r in roots)) for pivot in roots
        )
        return cls(best)

    @property
    def size(self) -> int:
        """Number of summands."""
        return len(self.roots)

    @property
    def name(self) -> str:
        """Short name of the shape."""
        orders = {r.order for r in self.roots} - {1}
        if self.size in _TEMPLATE_NAMES and len(orders) <= 1:
            return _TEMPLATE_NAMES[self.size]
        return f"vanishing{self.size}"

    def rotated(self, xi: RootOfUnity) -> Roots:
        """The multiset ``xi · roots``."""
        return tuple(sorted(r * xi for r in self.roots))

    def render(self, symbol: str) -> str:
        """Render as ``ξ·(…)``."""
        return f"{symbol}*({render_roots(self.roots)})"


PAIR = Template((RootOfUnity(1, 0), MINUS_ONE))


@dataclass(frozen=True)
class SolutionFamily:
    """A reduced concrete part plus freely rotated vanishing templates.

    Parametric families stand for every choice of rotations ``ξ_j`` such that
    the resulting summands satisfy the problem's constraints.
    """

    concrete: Roots
    templates: Tuple[Template, ...] = ()

    @property
    def kind(self) -> str:
        """``concrete`` or ``parametric``."""
        return "parametric" if self.templates else "concrete"

    @property
    def provenance(self) -> str:
        """``parametric`` or ``sporadic``."""
        return "parametric" if self.templates else "sporadic"

    @property
    def size(self) -> int:
        """Total number of summands."""
        return len(self.concrete) + sum(t.size for t in self.templates)

    def render(self) -> str:
        """Render as a sum with one symbol per template."""
        parts = []
        if self.concrete:
            parts.append(f"({render_roots(self.concrete)})")
        for j, template in enumerate(self.templates, start=1):
            parts.append(template.render(f"xi{j}"))
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        """Render with provenance."""
        return f"[{self.provenance}] {self.render()}"

"""Finite groups of graded automorphisms by breadth-first closure."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Sequence, Tuple

from ..exceptions import ExceedsCap, PreconditionError
from .model import GradedAutomorphism

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteGroup:
    """Closed finite set of automorphisms; the identity comes first."""

    elements: Tuple[GradedAutomorphism, ...]
    generators: Tuple[GradedAutomorphism, ...]

    @property
    def order(self) -> int:
        """Number of elements."""
        return len(self.elements)

    @property
    def presentation(self):
        """The presentation acted on."""
        return self.elements[0].presentation

    @property
    def identity(self) -> GradedAutomorphism:
        """The identity element."""
        return self.elements[0]

    def element_order(self, g: GradedAutomorphism) -> int:
        """Order of an element (bounded by the group order)."""
        return g.order(self.order)

    def is_trivial(self) -> bool:
        """Whether the group has one element."""
        return self.order == 1

    def cyclic_generator(self) -> GradedAutomorphism | None:
        """An element of full order, when the group is cyclic."""
        gens = self.generators
        if len(gens) == 1 and self.element_order(gens[0]) == self.order:
            return gens[0]
        for g in self.elements:
            if self.element_order(g) == self.order:
                return g
        return None

    def is_cyclic(self) -> bool:
        """Whether one element generates the group."""
        return self.cyclic_generator() is not None

    def __iter__(self):
        """Iterate over the elements."""
        return iter(self.elements)

    def __len__(self) -> int:
        """Number of elements."""
        return self.order


def order_and_closure(
    generators: Sequence[GradedAutomorphism], cap: int
) -> FiniteGroup:
    """Close ``generators`` under composition.

    Raises :class:`ExceedsCap` once the closure passes ``cap`` elements.
    """
    if not generators:
        raise PreconditionError("at least one generator is required")
    presentation = generators[0].presentation
    for g in generators[1:]:
        if g.presentation is not presentation:
            raise PreconditionError(
                f"{g.name} acts on {g.presentation.name}, not {presentation.name}"
            )
    identity = GradedAutomorphism.identity(presentation)
    elements = [identity]
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in generators:
            product = g @ current
            if product in seen:
                continue
            if len(elements) >= cap:
                log.warning(
                    "closure of %d generators passed the cap %d", len(generators), cap
                )
                raise ExceedsCap(cap)
            product.name = _element_name(g, current)
            seen.add(product)
            elements.append(product)
            queue.append(product)
    log.info("group closure on %s has order %d", presentation.name, len(elements))
    return FiniteGroup(tuple(elements), tuple(generators))


def _element_name(g: GradedAutomorphism, current: GradedAutomorphism) -> str:
    if current.name == "id":
        return g.name
    head, _, power = current.name.partition("^")
    if head == g.name and power.isdigit():
        return f"{g.name}^{int(power) + 1}"
    if current.name == g.name:
        return f"{g.name}^2"
    return f"{g.name}*{current.name}"

"""Rational generating functions with factored root-of-unity denominators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from ..cyclotomic import ONE, ZERO, CycNumber, as_root_of_unity
from ..exceptions import LaurentError, NonUnityRoot
from .poly import Coefficient, Poly, series_inverse, series_product

Factor = Tuple[CycNumber, int]


@dataclass(frozen=True)
class FactoredRational:
    """``numerator / ∏ (1 − λ t)^m`` with roots λ kept as factors."""

    numerator: Poly
    denom_factors: Tuple[Factor, ...] = ()

    @classmethod
    def create(
        cls,
        numerator: Poly | Coefficient = 1,
        factors: Iterable[tuple[Coefficient, int]] = (),
    ) -> FactoredRational:
        """Create with merged and sorted denominator factors.

        Raises :class:`NonUnityRoot` when a factor root is not a root of unity.
        """
        merged: dict[CycNumber, int] = {}
        rank: dict[CycNumber, tuple[int, int]] = {}
        for root, mult in factors:
            if mult < 0:
                raise ValueError("negative factor multiplicity")
            if mult:
                root = CycNumber.coerce(root)
                unity = as_root_of_unity(root)
                if unity is None:
                    raise NonUnityRoot(f"factor root {root} is not a root of unity")
                rank[root] = (unity.order, unity.exponent)
                merged[root] = merged.get(root, 0) + mult
        num = numerator if isinstance(numerator, Poly) else Poly([numerator])
        return cls(num, tuple(sorted(merged.items(), key=lambda f: rank[f[0]])))

    @classmethod
    def inverse_of(cls, roots: Iterable[tuple[Coefficient, int]]) -> FactoredRational:
        """Create ``1 / ∏(1 − λ t)^m``."""
        return cls.create(1, roots)

    def denominator(self) -> Poly:
        """Expanded denominator polynomial."""
        result = Poly([1])
        for root, mult in self.denom_factors:
            result = result * Poly.one_minus(root, mult)
        return result

    def multiplicity(self, root: Coefficient) -> int:
        """Multiplicity of ``(1 − root·t)`` in the denominator."""
        root = CycNumber.coerce(root)
        return sum(m for r, m in self.denom_factors if r == root)

    def pole_order_at_one(self) -> int:
        """Order of the pole at t = 1 (negative for a zero)."""
        shifted = self.numerator.at_one_minus()
        vanishing = next(
            (j for j, c in enumerate(shifted.coefficients) if c), 0
        )
        return self.multiplicity(1) - vanishing

    def expand(self, degree: int) -> list[CycNumber]:
        """Power-series coefficients ``0..degree``."""
        series = [self.numerator[i] for i in range(degree + 1)]
        for root, mult in self.denom_factors:
            for _ in range(mult):
                for i in range(1, degree + 1):
                    series[i] = series[i] + root * series[i - 1]
        return series

    def reduced(self) -> FactoredRational:
        """Cancel denominator factors that divide the numerator."""
        numerator = self.numerator
        factors = []
        for root, mult in self.denom_factors:
            keep = mult
            while keep:
                quotient, remainder = numerator.divide_linear(root)
                if remainder or numerator.degree < 1:
                    break
                numerator = quotient
                keep -= 1
            factors.append((root, keep))
        return FactoredRational.create(numerator, factors)

    def __add__(self, other: FactoredRational) -> FactoredRational:
        """Sum over the least common factored denominator."""
        if not isinstance(other, FactoredRational):
            return NotImplemented
        common: dict[CycNumber, int] = dict(self.denom_factors)
        for root, mult in other.denom_factors:
            common[root] = max(common.get(root, 0), mult)

        def lifted(term: FactoredRational) -> Poly:
            own = dict(term.denom_factors)
            result = term.numerator
            for root, mult in common.items():
                extra = mult - own.get(root, 0)
                if extra:
                    result = result * Poly.one_minus(root, extra)
            return result

        return FactoredRational.create(lifted(self) + lifted(other), common.items())

    def __mul__(self, other: FactoredRational | Poly | Coefficient) -> FactoredRational:
        """Multiply by another factored rational, polynomial or scalar."""
        if isinstance(other, FactoredRational):
            return FactoredRational.create(
                self.numerator * other.numerator,
                list(self.denom_factors) + list(other.denom_factors),
            )
        try:
            factor = other if isinstance(other, Poly) else Poly([other])
        except TypeError:
            return NotImplemented
        return FactoredRational(self.numerator * factor, self.denom_factors)

    __rmul__ = __mul__

    def scale(self, value: Coefficient) -> FactoredRational:
        """Multiply by a scalar."""
        return FactoredRational(self.numerator * Poly([value]), self.denom_factors)

    def shift(self, k: int) -> FactoredRational:
        """Multiply by ``t^k``."""
        return FactoredRational(self.numerator * Poly.monomial(k), self.denom_factors)

    def galois_map(self, p: int) -> FactoredRational:
        """Apply Ξ_p to every coefficient and root."""
        return FactoredRational.create(
            Poly(c.galois_map(p) for c in self.numerator.coefficients),
            [(r.galois_map(p), m) for r, m in self.denom_factors],
        )

    def __str__(self) -> str:
        """Render as ``num / prod[(1 - λ t)^m]`` in the series grammar."""
        numerator = str(self.numerator)
        if not self.denom_factors:
            return numerator
        parts = []
        for root, mult in self.denom_factors:
            parts.append(_render_factor(root) + (f"^{mult}" if mult > 1 else ""))
        if len(self.numerator.coefficients) > 1:
            numerator = f"({numerator})"
        return f"{numerator}/({'*'.join(parts)})"


def _render_factor(root: CycNumber) -> str:
    if root == ONE:
        return "(1 - t)"
    if root == -ONE:
        return "(1 + t)"
    if root.is_rational():
        value = root.to_fraction()
        return f"(1 - {value}*t)" if value > 0 else f"(1 + {-value}*t)"
    return f"(1 - ({root})*t)"


def expand(function: FactoredRational, degree: int) -> list[CycNumber]:
    """Exact power-series coefficients of ``function`` through ``degree``."""
    if degree < 0:
        raise ValueError("degree cutoff must be non-negative")
    return function.expand(degree)


@dataclass(frozen=True)
class LaurentExpansion:
    """Expansion ``Σ_j c_j (1 − t)^{−a + j}`` about t = 1."""

    leading_order: int
    coefficients: Tuple[CycNumber, ...]
    center: int = 1

    def coefficient(self, pole_order: int) -> CycNumber:
        """Coefficient of ``(1 − t)^{−pole_order}``."""
        index = self.leading_order - pole_order
        if index < 0:
            return ZERO
        if index >= len(self.coefficients):
            raise ValueError(
                f"expansion holds {len(self.coefficients)} terms, "
                f"coefficient of (1 - t)^-{pole_order} needs {index + 1}"
            )
        return self.coefficients[index]


def laurent_at_one(function: FactoredRational, terms: int) -> LaurentExpansion:
    """Laurent expansion about t = 1 by substituting ``t = 1 − s``."""
    if terms < 1:
        raise ValueError("at least one term is required")
    ones = function.multiplicity(1)
    rest = Poly([1])
    for root, mult in function.denom_factors:
        if root != ONE:
            rest = rest * Poly.one_minus(root, mult)
    numerator = function.numerator.at_one_minus().coefficients
    if not numerator:
        raise LaurentError("zero function has no Laurent expansion")
    vanishing = next(j for j, c in enumerate(numerator) if c)
    if vanishing > ones:
        raise LaurentError(
            f"numerator vanishes to order {vanishing} at t = 1, above the "
            f"denominator's {ones}: reduce the function first"
        )
    head = numerator[vanishing:]
    inverse = series_inverse(rest.at_one_minus().coefficients, terms - 1)
    coefficients = series_product(head, inverse, terms - 1)
    return LaurentExpansion(ones - vanishing, tuple(coefficients))

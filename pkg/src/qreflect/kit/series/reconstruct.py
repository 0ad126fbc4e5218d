"""Euler-polynomial reconstruction, palindrome tests and root-of-unity factorization."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import lcm
from typing import Sequence, Tuple

from ..cyclotomic import ONE, CycNumber, RootOfUnity, as_root_of_unity
from ..cyclotomic.numtheory import divisors, totient, units
from ..exceptions import ReconstructionMismatch
from .poly import Coefficient, Poly, series_inverse
from .rational import FactoredRational

log = logging.getLogger(__name__)

DEFAULT_ORDER_FACTOR = 60


def reconstruct_rational(
    series: Sequence[Coefficient], denom_degree: int, verify_to: int
) -> Poly:
    """Recover ``e`` with ``series ≡ 1/e``, ``deg e ≤ denom_degree``.

    The candidate is the multiplicative inverse of the series truncated at
    ``denom_degree``; every supplied coefficient through ``verify_to`` is then
    compared with the expansion of ``1/e``.
    """
    coeffs = [CycNumber.coerce(c) for c in series]
    if not coeffs or coeffs[0] != ONE:
        raise ValueError("series must start with the coefficient 1")
    if verify_to < denom_degree:
        raise ValueError("verify_to must be at least the denominator degree")
    if len(coeffs) <= verify_to:
        raise ValueError(
            f"series holds {len(coeffs)} coefficients, verification to degree "
            f"{verify_to} needs {verify_to + 1}"
        )
    euler = Poly(series_inverse(coeffs, denom_degree))
    expected = euler.inverse_series(verify_to)
    for degree in range(denom_degree + 1, verify_to + 1):
        if expected[degree] != coeffs[degree]:
            log.debug(
                "reconstruction with denominator degree %d fails at degree %d",
                denom_degree,
                degree,
            )
            raise ReconstructionMismatch(degree, expected[degree], coeffs[degree])
    return euler


class PalindromeKind(str, Enum):
    """Coefficient symmetry of a polynomial."""

    PALINDROME = "palindrome"
    SKEW_PALINDROME = "skew_palindrome"
    NEITHER = "neither"

    def __str__(self):
        """Get the enum value."""
        return self.value


@dataclass(frozen=True)
class PalindromeReport:
    """Symmetry class of ``e`` and the derivative identity at t = 1."""

    kind: PalindromeKind
    degree: int
    value_at_one: CycNumber
    derivative_at_one: CycNumber
    derivative_identity: bool | None = None


def palindrome_check(euler: Poly) -> PalindromeReport:
    """Classify ``euler`` by coefficient symmetry.

    For palindromes the identity ``e′(1) = n·e(1)/2`` (``n = deg e``) is
    evaluated exactly and reported.
    """
    if euler[0] != ONE:
        raise ValueError("polynomial must have constant term 1")
    n = euler.degree
    coeffs = euler.coefficients
    value = euler(1)
    slope = euler.derivative()(1)
    if all(coeffs[n - i] == coeffs[i] for i in range(n + 1)):
        return PalindromeReport(
            PalindromeKind.PALINDROME, n, value, slope, slope == value * n / 2
        )
    if all(coeffs[n - i] == -coeffs[i] for i in range(n + 1)):
        return PalindromeReport(PalindromeKind.SKEW_PALINDROME, n, value, slope)
    return PalindromeReport(PalindromeKind.NEITHER, n, value, slope)


@dataclass(frozen=True)
class CyclotomicFactorization:
    """``e = residual · ∏ (1 − λ t)^m`` with every λ a root of unity."""

    roots: Tuple[Tuple[RootOfUnity, int], ...]
    residual: Poly
    order_bound: int = 0
    notes: Tuple[str, ...] = field(default=())

    @property
    def complete(self) -> bool:
        """Whether the residual is the constant 1."""
        return self.residual == Poly([1])

    def multiplicity(self, root: RootOfUnity) -> int:
        """Multiplicity of ``(1 − root·t)``."""
        return sum(m for r, m in self.roots if r == root)

    def root_values(self) -> list[CycNumber]:
        """Roots with repetition, as cyclotomic numbers."""
        return [r.value() for r, m in self.roots for _ in range(m)]

    def cyclotomic_exponents(self) -> dict[int, int] | None:
        """Exponents of ``Φ_d`` when primitive roots of each order appear equally."""
        if not self.complete:
            return None
        by_order: dict[int, dict[int, int]] = {}
        for root, mult in self.roots:
            by_order.setdefault(root.order, {})[root.exponent] = mult
        exponents = {}
        for order, found in by_order.items():
            mults = {found.get(k, 0) for k in units(order) or [0]}
            if len(mults) != 1:
                return None
            exponents[order] = mults.pop()
        return dict(sorted(exponents.items()))

    def as_rational(self, numerator: Poly | None = None) -> FactoredRational:
        """The function ``numerator / e`` with the found factors."""
        if not self.complete:
            raise ValueError("factorization is incomplete")
        return FactoredRational.create(
            numerator or Poly([1]), [(r.value(), m) for r, m in self.roots]
        )


def default_order_bound(degree: int, order: int | None = None) -> int:
    """Search bound ``2 · deg e · (order or 60)``."""
    return 2 * max(degree, 1) * (order or DEFAULT_ORDER_FACTOR)


def cyclotomic_factorization(
    euler: Poly, order_bound: int | None = None, order: int | None = None
) -> CyclotomicFactorization:
    """Extract the linear factors ``(1 − λ t)`` with λ a root of unity.

    When the automorphism order is known, candidate orders are the divisors of
    ``2·order``; otherwise every order up to the bound is tried. A root of order
    ``w`` over coefficients in ℚ(ζ_N) has degree ``φ(lcm(N, w))/φ(N)`` over the
    coefficient field, which prunes the search.
    """
    if euler[0] != ONE:
        raise ValueError("polynomial must have constant term 1")
    bound = order_bound or default_order_bound(euler.degree, order)
    residual = euler
    found: list[tuple[RootOfUnity, int]] = []
    leading = euler.leading * (-1) ** euler.degree
    if euler.degree > 0 and as_root_of_unity(leading) is None:
        log.debug("leading coefficient %s is no root of unity", euler.leading)
        return CyclotomicFactorization((), euler, bound)
    field_conductor = lcm(*(c.conductor for c in euler.coefficients))
    if order:
        candidates = [w for w in divisors(2 * order) if w <= bound]
    else:
        candidates = list(range(1, bound + 1))
    for w in candidates:
        if residual.degree < 1:
            break
        relative = totient(lcm(field_conductor, w)) // totient(field_conductor)
        if relative > residual.degree:
            continue
        for k in units(w) if w > 1 else [0]:
            root = CycNumber.zeta(w, k)
            point = root.conjugate()
            mult = 0
            while residual.degree >= 1 and residual(point).is_zero():
                residual, _ = residual.divide_linear(root)
                mult += 1
            if mult:
                found.append((RootOfUnity(w, k), mult))
    return CyclotomicFactorization(tuple(found), residual, bound)

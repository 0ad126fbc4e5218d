"""Roots of unity and the number-theoretic summary used by root-sum arguments."""

from __future__ import annotations

from math import gcd
from typing import NamedTuple

from .number import ONE, CycNumber
from .numtheory import cyclotomic_coefficients, divisors, mobius, totient


class RootOfUnity(NamedTuple):
    """The root of unity ζ_order^exponent with ``gcd(exponent, order) = 1``."""

    order: int
    exponent: int

    @classmethod
    def canonical(cls, order: int, exponent: int) -> RootOfUnity:
        """Reduce ``ζ_order^exponent`` to its primitive form."""
        exponent %= order
        g = gcd(exponent, order)
        if exponent == 0:
            return cls(1, 0)
        return cls(order // g, exponent // g)

    def value(self) -> CycNumber:
        """The root as a cyclotomic number."""
        return CycNumber.zeta(self.order, self.exponent)

    def __mul__(self, other) -> RootOfUnity:  # type: ignore[override]
        """Product of two roots of unity."""
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        order = self.order * other.order // gcd(self.order, other.order)
        exponent = self.exponent * (order // self.order) + other.exponent * (
            order // other.order
        )
        return RootOfUnity.canonical(order, exponent)

    def inverse(self) -> RootOfUnity:
        """Multiplicative inverse."""
        return RootOfUnity.canonical(self.order, -self.exponent)

    def power(self, k: int) -> RootOfUnity:
        """Integer power."""
        return RootOfUnity.canonical(self.order, self.exponent * k)

    def __str__(self) -> str:
        """Render in the coefficient grammar."""
        if self.order == 1:
            return "1"
        if self.order == 2:
            return "-1"
        if self.order == 4:
            return "i" if self.exponent == 1 else "-i"
        return f"zeta({self.order},{self.exponent})"


def as_root_of_unity(value: CycNumber) -> RootOfUnity | None:
    """Identify ``value`` as ζ_w^k, or return None when it is no root of unity.

    A root of unity in ℚ(ζ_N) has order dividing 2N, so it suffices to test
    ``value**m == 1`` for the divisors m of 2N.
    """
    if value.is_zero() or value * value.conjugate() != ONE:
        return None
    order = next(
        (m for m in divisors(2 * value.conductor) if value**m == ONE), None
    )
    if order is None:
        return None
    for k in range(order):
        if gcd(k, order) == 1 and CycNumber.zeta(order, k) == value:
            return RootOfUnity(order, k)
    return None


class NumberTheory(NamedTuple):
    """Möbius value, totient, cyclotomic polynomial and primitive root sum of w."""

    mobius: int
    totient: int
    cyclotomic_poly: tuple[int, ...]
    primitive_root_sum: CycNumber


def number_theory(w: int) -> NumberTheory:
    """Summarize the arithmetic of the primitive ``w``-th roots of unity.

    The primitive root sum is computed by exact summation, so comparing it
    with the Möbius value checks the cyclotomic arithmetic itself.
    """
    if w < 1:
        raise ValueError(f"order must be positive, got {w}")
    total = CycNumber()
    for p in range(w):
        if gcd(p, w) == 1:
            total = total + CycNumber.zeta(w, p)
    return NumberTheory(mobius(w), totient(w), cyclotomic_coefficients(w), total)

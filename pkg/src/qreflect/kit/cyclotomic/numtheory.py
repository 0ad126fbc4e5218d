"""Integer number theory used by cyclotomic arithmetic and root-sum searches."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, prod

import sympy


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> tuple[int, ...]:
    """Integer coefficients of the cyclotomic polynomial Φ_n, constant term first."""
    if n < 1:
        raise ValueError(f"cyclotomic polynomial undefined for {n}")
    t = sympy.Symbol("t")
    poly = sympy.Poly(sympy.cyclotomic_poly(n, t), t)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    """Euler totient φ(n)."""
    return int(sympy.totient(n))


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """Möbius function μ(n)."""
    return int(sympy.mobius(n))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of ``n`` in increasing order."""
    return tuple(int(d) for d in sympy.divisors(n))


def primorial(m: int) -> int:
    """Product of the primes not exceeding ``m``."""
    return prod(int(p) for p in sympy.primerange(2, m + 1))


def units(n: int) -> list[int]:
    """Residues in ``range(n)`` coprime to ``n``."""
    return [p for p in range(n) if gcd(p, n) == 1]

"""Exact elements of cyclotomic fields."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Union

from ..exceptions import CyclotomicZeroDivision, GaloisError
from ..linalg import solve
from .numtheory import cyclotomic_coefficients, divisors, totient

Scalar = Union["CycNumber", int, Fraction]


def _strip(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


def _reduce(coeffs: list[Fraction], conductor: int) -> tuple[Fraction, ...]:
    """Reduce a coefficient list on powers of ζ_N modulo Φ_N (in place)."""
    phi = cyclotomic_coefficients(conductor)
    degree = len(phi) - 1
    for i in range(len(coeffs) - 1, degree - 1, -1):
        c = coeffs[i]
        if not c:
            continue
        base = i - degree
        for j in range(degree):
            if phi[j]:
                coeffs[base + j] -= c * phi[j]
        coeffs[i] = Fraction(0)
    return _strip(coeffs)


@lru_cache(maxsize=4096)
def _power_image(conductor: int, exponent: int) -> tuple[Fraction, ...]:
    """Reduced coefficients of ζ_N^exponent."""
    coeffs = [Fraction(0)] * (exponent % conductor + 1)
    coeffs[-1] = Fraction(1)
    return _reduce(coeffs, conductor)


class CycNumber:
    """Element of ℚ(ζ_N) in the power basis modulo the cyclotomic polynomial Φ_N.

    Values carry their own conductor; binary operations lift both operands to
    the least common multiple of the conductors. Rational values are always
    stored at conductor 1, so equality and hashing never depend on the route by
    which a value was computed.
    """

    __slots__ = ("_conductor", "_coeffs", "_minimal")

    def __init__(self, coeffs: Iterable[Scalar] = (), conductor: int = 1):
        """Create ``Σ coeffs[e] ζ_N^e`` reduced modulo Φ_N."""
        if conductor < 1:
            raise ValueError(f"invalid conductor {conductor}")
        values = [Fraction(c) for c in coeffs]
        reduced = _reduce(values, conductor)
        if len(reduced) <= 1:
            conductor = 1
        self._conductor = conductor
        self._coeffs = reduced
        self._minimal: CycNumber | None = None

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...], conductor: int) -> CycNumber:
        new = cls.__new__(cls)
        new._conductor = conductor if len(coeffs) > 1 else 1
        new._coeffs = coeffs
        new._minimal = None
        return new

    @classmethod
    def rational(cls, value: int | Fraction | str) -> CycNumber:
        """Embed a rational number."""
        return cls._raw(_strip([Fraction(value)]), 1)

    @classmethod
    def zeta(cls, order: int, exponent: int = 1) -> CycNumber:
        """The root of unity ζ_order^exponent."""
        if order < 1:
            raise ValueError(f"invalid root of unity order {order}")
        return cls._raw(_power_image(order, exponent % order), order)

    @classmethod
    def coerce(cls, value: Scalar) -> CycNumber:
        """Convert integers and fractions; pass CycNumber through."""
        if isinstance(value, CycNumber):
            return value
        if isinstance(value, (int, Rational)):
            return cls.rational(Fraction(value))
        raise TypeError(f"cannot convert {type(value).__name__} to CycNumber")

    @property
    def conductor(self) -> int:
        """Conductor N of the field the value is represented in."""
        return self._conductor

    @property
    def coefficients(self) -> dict[int, Fraction]:
        """Nonzero power-basis coefficients keyed by exponent."""
        return {e: c for e, c in enumerate(self._coeffs) if c}

    def is_zero(self) -> bool:
        """Check for the zero element."""
        return not self._coeffs

    def is_rational(self) -> bool:
        """Check whether the value lies in ℚ."""
        return len(self._coeffs) <= 1

    def to_fraction(self) -> Fraction:
        """Rational value; raises ``ValueError`` for irrational values."""
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def lift(self, conductor: int) -> tuple[Fraction, ...]:
        """Coefficients at a multiple of the current conductor."""
        if conductor == self._conductor:
            return self._coeffs
        if conductor % self._conductor:
            raise ValueError(f"{conductor} is not a multiple of {self._conductor}")
        step = conductor // self._conductor
        if len(self._coeffs) <= 1:
            return self._coeffs
        coeffs = [Fraction(0)] * ((len(self._coeffs) - 1) * step + 1)
        for e, c in enumerate(self._coeffs):
            coeffs[e * step] = c
        return _reduce(coeffs, conductor)

    def _aligned(self, other: CycNumber):
        if self._conductor == other._conductor:
            return self._conductor, self._coeffs, other._coeffs
        common = lcm(self._conductor, other._conductor)
        return common, self.lift(common), other.lift(common)

    def __add__(self, other: Scalar) -> CycNumber:
        """Add."""
        try:
            other = CycNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        conductor, a, b = self._aligned(other)
        size = max(len(a), len(b))
        summed = [
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(size)
        ]
        return CycNumber._raw(_strip(summed), conductor)

    __radd__ = __add__

    def __neg__(self) -> CycNumber:
        """Negate."""
        return CycNumber._raw(tuple(-c for c in self._coeffs), self._conductor)

    def __pos__(self) -> CycNumber:
        """Return self."""
        return self

    def __sub__(self, other: Scalar) -> CycNumber:
        """Subtract."""
        try:
            other = CycNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> CycNumber:
        """Subtract from a plain number."""
        return CycNumber.coerce(other) - self

    def __mul__(self, other: Scalar) -> CycNumber:
        """Multiply."""
        try:
            other = CycNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        if other.is_rational():
            k = other._coeffs[0]
            return CycNumber._raw(tuple(c * k for c in self._coeffs), self._conductor)
        if self.is_rational():
            return other * self
        conductor, a, b = self._aligned(other)
        product = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        product[i + j] += x * y
        return CycNumber._raw(_reduce(product, conductor), conductor)

    __rmul__ = __mul__

    def inverse(self) -> CycNumber:
        """Multiplicative inverse."""
        if self.is_zero():
            raise CyclotomicZeroDivision("division by zero in a cyclotomic field")
        if self.is_rational():
            return CycNumber._raw((1 / self._coeffs[0],), 1)
        modulus = [Fraction(c) for c in cyclotomic_coefficients(self._conductor)]
        return CycNumber(_poly_inverse(list(self._coeffs), modulus), self._conductor)

    def __truediv__(self, other: Scalar) -> CycNumber:
        """Divide."""
        try:
            other = CycNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> CycNumber:
        """Divide a plain number."""
        return CycNumber.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> CycNumber:
        """Integer power."""
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = ONE
        k = abs(exponent)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        """Exact equality after lifting to a common conductor."""
        if not isinstance(other, CycNumber):
            if isinstance(other, (int, Rational)):
                return self.is_rational() and self.to_fraction() == other
            return NotImplemented
        if self._conductor == other._conductor:
            return self._coeffs == other._coeffs
        if self.is_rational() or other.is_rational():
            return False
        _, a, b = self._aligned(other)
        return a == b

    def __hash__(self) -> int:
        """Hash of the minimal-conductor representation."""
        minimal = self.minimize()
        if minimal.is_rational():
            return hash(minimal.to_fraction())
        return hash((minimal._conductor, minimal._coeffs))

    def __bool__(self) -> bool:
        """Nonzero test."""
        return bool(self._coeffs)

    def galois_map(self, p: int) -> CycNumber:
        """Apply the automorphism Ξ_p: ζ_N ↦ ζ_N^p."""
        n = self._conductor
        if gcd(p, n) != 1:
            raise GaloisError(f"Galois exponent {p} is not coprime to conductor {n}")
        if self.is_rational():
            return self
        coeffs = [Fraction(0)] * n
        for e, c in enumerate(self._coeffs):
            if c:
                coeffs[(e * p) % n] += c
        return CycNumber._raw(_reduce(coeffs, n), n)

    def conjugate(self) -> CycNumber:
        """Complex conjugate, Ξ_{N−1}."""
        return self.galois_map(self._conductor - 1)

    def minimize(self) -> CycNumber:
        """Equal value represented at the smallest possible conductor."""
        if self._minimal is not None:
            return self._minimal
        n = self._conductor
        minimal = self
        if not self.is_rational():
            for d in divisors(n)[1:-1]:
                if d % 4 == 2:
                    continue
                if self._in_subfield(d):
                    minimal = CycNumber._raw(self._coefficients_at(d), d)
                    break
        self._minimal = minimal
        return minimal

    def _in_subfield(self, d: int) -> bool:
        n = self._conductor
        fixing = [p for p in range(1, n) if gcd(p, n) == 1 and p % d == 1 and p != 1]
        return all(self.galois_map(p) == self for p in fixing)

    def _coefficients_at(self, d: int) -> tuple[Fraction, ...]:
        n = self._conductor
        size = totient(n)
        columns = []
        for j in range(totient(d)):
            image = _power_image(n, j * (n // d))
            columns.append(list(image) + [Fraction(0)] * (size - len(image)))
        matrix = [[col[i] for col in columns] for i in range(size)]
        rhs = list(self._coeffs) + [Fraction(0)] * (size - len(self._coeffs))
        solution = solve(matrix, rhs)
        if solution is None:
            raise ArithmeticError(f"value {self!r} not in subfield of conductor {d}")
        return _strip([Fraction(x) for x in solution])

    def __str__(self) -> str:
        """Render in the coefficient grammar."""
        value = self.minimize()
        n = value._conductor
        terms: list[tuple[bool, str]] = []
        for e, c in enumerate(value._coeffs):
            if not c:
                continue
            negative = c < 0
            magnitude = -c if negative else c
            if e == 0:
                body = str(magnitude)
            else:
                root = "i" if (n, e) == (4, 1) else f"zeta({n},{e})"
                body = root if magnitude == 1 else f"{magnitude}*{root}"
            terms.append((negative, body))
        if not terms:
            return "0"
        text = ("-" if terms[0][0] else "") + terms[0][1]
        for negative, body in terms[1:]:
            text += (" - " if negative else " + ") + body
        return text

    def __repr__(self) -> str:
        """Get a technical string representation of this instance."""
        return f"CycNumber({str(self)!r})"

    def __reduce__(self):
        """Pickle through the power-basis coefficients."""
        return (CycNumber, (self._coeffs, self._conductor))


def _poly_inverse(a: list[Fraction], modulus: list[Fraction]) -> list[Fraction]:
    """Inverse of ``a`` modulo an irreducible ``modulus`` (extended Euclid over ℚ)."""

    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    def divmod_poly(num, den):
        num = list(num)
        quotient = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
        lead = den[-1]
        while len(trim(num)) >= len(den):
            shift = len(num) - len(den)
            factor = num[-1] / lead
            quotient[shift] = factor
            for i, c in enumerate(den):
                num[shift + i] -= factor * c
        return quotient, num

    def sub_mul(x, q, y):
        result = list(x) + [Fraction(0)] * max(0, len(q) + len(y) - 1 - len(x))
        for i, qc in enumerate(q):
            if qc:
                for j, yc in enumerate(y):
                    result[i + j] -= qc * yc
        return trim(result)

    r0, r1 = trim(list(modulus)), trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, rem = divmod_poly(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub_mul(s0, q, s1)
    constant = r1[0]
    return [c / constant for c in s1]


ZERO = CycNumber._raw((), 1)
ONE = CycNumber._raw((Fraction(1),), 1)

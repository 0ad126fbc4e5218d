"""Univariate polynomials in t over cyclotomic numbers."""

from __future__ import annotations

from typing import Iterable, Sequence, Union

from ..cyclotomic import ONE, ZERO, CycNumber

Coefficient = Union[CycNumber, int]


class Poly:
    """Polynomial ``Σ c_i t^i`` with trailing zeros stripped.

    The zero polynomial has degree :attr:`ZERO_DEGREE`.
    """

    ZERO_DEGREE = -1

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        """Create a polynomial from coefficients, constant term first."""
        values = [CycNumber.coerce(c) for c in coeffs]
        while values and values[-1].is_zero():
            values.pop()
        self._coeffs: tuple[CycNumber, ...] = tuple(values)

    @classmethod
    def monomial(cls, degree: int, coeff: Coefficient = 1) -> Poly:
        """Create ``coeff · t^degree``."""
        return cls([0] * degree + [coeff])

    @classmethod
    def one_minus(cls, root: Coefficient, multiplicity: int = 1) -> Poly:
        """Create ``(1 − root·t)^multiplicity``."""
        return cls([1, -CycNumber.coerce(root)]) ** multiplicity

    @property
    def coefficients(self) -> tuple[CycNumber, ...]:
        """Coefficients, constant term first."""
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, :attr:`ZERO_DEGREE` for the zero polynomial."""
        return len(self._coeffs) - 1

    def __getitem__(self, i: int) -> CycNumber:
        """Coefficient of ``t^i`` (zero beyond the degree)."""
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else ZERO

    def is_zero(self) -> bool:
        """Check for the zero polynomial."""
        return not self._coeffs

    @property
    def leading(self) -> CycNumber:
        """Leading coefficient."""
        return self._coeffs[-1] if self._coeffs else ZERO

    def __add__(self, other: Poly | Coefficient) -> Poly:
        """Add."""
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return Poly(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        """Negate."""
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other: Poly | Coefficient) -> Poly:
        """Subtract."""
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coefficient) -> Poly:
        """Subtract from a constant."""
        return _as_poly(other) - self

    def __mul__(self, other: Poly | Coefficient) -> Poly:
        """Multiply."""
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        product = [ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    if b:
                        product[i + j] = product[i + j] + a * b
        return Poly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        """Non-negative integer power."""
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Poly([1])
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, x: Coefficient) -> CycNumber:
        """Evaluate by Horner's rule."""
        value = ZERO
        for c in reversed(self._coeffs):
            value = value * x + c
        return value

    def __eq__(self, other: object) -> bool:
        """Coefficient-wise equality."""
        if isinstance(other, (int, CycNumber)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        """Hash of the coefficients."""
        return hash(self._coeffs)

    def derivative(self) -> Poly:
        """Formal derivative in t."""
        return Poly(c * i for i, c in enumerate(self._coeffs) if i)

    def taylor_shift(self, center: Coefficient) -> Poly:
        """Coefficients ``b_j`` with ``p(t) = Σ b_j (t − center)^j``."""
        coeffs = list(self._coeffs)
        center = CycNumber.coerce(center)
        n = len(coeffs)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                coeffs[j] = coeffs[j] + center * coeffs[j + 1]
        return Poly(coeffs)

    def at_one_minus(self) -> Poly:
        """The polynomial ``s ↦ p(1 − s)``."""
        shifted = self.taylor_shift(1)
        return Poly(c if j % 2 == 0 else -c for j, c in enumerate(shifted._coeffs))

    def divide_linear(self, root: Coefficient) -> tuple[Poly, CycNumber]:
        """Quotient and remainder of division by ``(1 − root·t)``.

        The remainder is the constant ``r`` with
        ``p = (1 − root·t)·quotient + r·t^deg``, zero iff the division is exact.
        """
        root = CycNumber.coerce(root)
        if self.degree < 1:
            return Poly(), self[0] if self.degree == 0 else ZERO
        quotient = []
        carry = ZERO
        for c in self._coeffs[:-1]:
            carry = c + root * carry
            quotient.append(carry)
        remainder = self._coeffs[-1] + root * carry
        return Poly(quotient), remainder

    def inverse_series(self, degree: int) -> list[CycNumber]:
        """Coefficients ``0..degree`` of the power series ``1/p``."""
        return series_inverse(self._coeffs, degree)

    def truncate(self, degree: int) -> Poly:
        """Drop terms above ``degree``."""
        return Poly(self._coeffs[: degree + 1])

    def __str__(self) -> str:
        """Render in the coefficient grammar, variable ``t``."""
        return render_terms(self._coeffs, "t")

    def __repr__(self) -> str:
        """Get a technical string representation of this instance."""
        return f"Poly({str(self)!r})"


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    try:
        return Poly([CycNumber.coerce(value)])
    except TypeError:
        return NotImplemented


def series_inverse(coeffs: Sequence[CycNumber], degree: int) -> list[CycNumber]:
    """Truncated multiplicative inverse of a power series with invertible constant."""
    if not coeffs or coeffs[0].is_zero():
        raise ZeroDivisionError("series with zero constant term has no inverse")
    head = coeffs[0].inverse()
    inverse = [head]
    for j in range(1, degree + 1):
        acc = ZERO
        for i in range(1, min(j, len(coeffs) - 1) + 1):
            if coeffs[i]:
                acc = acc + coeffs[i] * inverse[j - i]
        inverse.append(-acc * head)
    return inverse


def series_product(
    a: Sequence[CycNumber], b: Sequence[CycNumber], degree: int
) -> list[CycNumber]:
    """Truncated product of two power series."""
    result = [ZERO] * (degree + 1)
    for i, x in enumerate(a[: degree + 1]):
        if x:
            for j, y in enumerate(b[: degree + 1 - i]):
                if y:
                    result[i + j] = result[i + j] + x * y
    return result


def render_terms(coeffs: Sequence[CycNumber], variable: str) -> str:
    """Render ``Σ c_i x^i`` in the coefficient grammar."""
    pieces: list[tuple[bool, str]] = []
    for i, c in enumerate(coeffs):
        if c.is_zero():
            continue
        negative = c.is_rational() and c.to_fraction() < 0
        magnitude = -c if negative else c
        text = str(magnitude)
        if not magnitude.is_rational() and i:
            text = f"({text})"
        power = "" if i == 0 else variable if i == 1 else f"{variable}^{i}"
        if not power:
            body = text if magnitude.is_rational() else f"({text})"
        elif magnitude == ONE:
            body = power
        else:
            body = f"{text}*{power}"
        pieces.append((negative, body))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for negative, body in pieces[1:]:
        out += (" - " if negative else " + ") + body
    return out

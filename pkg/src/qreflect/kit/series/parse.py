"""Reading rational generating functions in ``t`` from text."""

from __future__ import annotations

from ..cyclotomic import CycNumber, evaluate
from ..exceptions import ParseError
from .poly import Poly
from .rational import FactoredRational
from .reconstruct import cyclotomic_factorization


class _RatFun:
    """Quotient of polynomials, only used while evaluating an expression."""

    def __init__(self, num: Poly, den: Poly):
        self.num = num
        self.den = den

    @staticmethod
    def lift(value) -> _RatFun:
        if isinstance(value, _RatFun):
            return value
        return _RatFun(Poly([CycNumber.coerce(value)]), Poly([1]))

    def __add__(self, other):
        other = _RatFun.lift(other)
        num = self.num * other.den + other.num * self.den
        return _RatFun(num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return _RatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_RatFun.lift(other))

    def __rsub__(self, other):
        return _RatFun.lift(other) - self

    def __mul__(self, other):
        other = _RatFun.lift(other)
        return _RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _RatFun.lift(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return _RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _RatFun.lift(other) / self

    def __pow__(self, exponent: int):
        return _RatFun(self.num**exponent, self.den**exponent)


def parse_series(
    text: str, *, source: str | None = None, line: int | None = None
) -> FactoredRational:
    """Parse an expression such as ``1/((1-t)^2*(1-t^2))``.

    The denominator must factor into ``(1 − λ t)`` terms with λ roots of unity;
    common factors with the numerator are cancelled.
    """
    variables = {"t": _RatFun(Poly([0, 1]), Poly([1]))}
    value = _RatFun.lift(evaluate(text, variables, source=source, line=line))
    head = value.den[0]
    if head.is_zero():
        raise ParseError(
            f"denominator of {text!r} vanishes at t = 0", source=source, line=line
        )
    numerator = value.num * Poly([head.inverse()])
    denominator = value.den * Poly([head.inverse()])
    factorization = cyclotomic_factorization(denominator)
    if not factorization.complete:
        raise ParseError(
            f"denominator of {text!r} is not a product of (1 - λt) factors "
            "with λ a root of unity",
            source=source,
            line=line,
        )
    return factorization.as_rational(numerator).reduced()

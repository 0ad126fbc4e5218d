"""Test polynomials, rational generating functions and reconstruction."""

import random
from fractions import Fraction

import pytest

from qreflect.kit.cyclotomic import ONE, CycNumber, RootOfUnity, parse_coefficient
from qreflect.kit.exceptions import (
    LaurentError,
    NonUnityRoot,
    ParseError,
    ReconstructionMismatch,
)
from qreflect.kit.series import (
    FactoredRational,
    PalindromeKind,
    Poly,
    cyclotomic_factorization,
    default_order_bound,
    expand,
    laurent_at_one,
    palindrome_check,
    parse_series,
    reconstruct_rational,
    series_inverse,
)

IMAG = CycNumber.zeta(4, 1)


def _ints(values):
    return [CycNumber.rational(v) for v in values]


def test_poly_arithmetic():
    assert Poly.one_minus(1, 2) == Poly([1, -2, 1])
    assert Poly([1, 2, 0, 0]).degree == 1
    assert Poly().degree == Poly.ZERO_DEGREE
    assert Poly([1, 1]) * Poly([1, -1]) == Poly([1, 0, -1])
    assert Poly([0, 0, 3]).derivative() == Poly([0, 6])
    assert Poly([1, 2, 3])(2) == 17
    assert Poly([0, 1]).at_one_minus() == Poly([1, -1])
    assert Poly.monomial(3, IMAG)[3] == IMAG


def test_divide_linear():
    quotient, remainder = Poly([1, 0, -1]).divide_linear(1)
    assert quotient == Poly([1, 1])
    assert remainder.is_zero()
    _, remainder = Poly([1, 0, 1]).divide_linear(1)
    assert remainder == 2


def test_series_inverse():
    assert series_inverse(_ints([1, -1]), 3) == _ints([1, 1, 1, 1])
    assert Poly([1, 0, 1]).inverse_series(4) == _ints([1, 0, -1, 0, 1])
    with pytest.raises(ZeroDivisionError):
        series_inverse(_ints([0, 1]), 2)


def test_parse_series():
    assert expand(parse_series("1/(1-t)^2"), 4) == _ints([1, 2, 3, 4, 5])
    assert expand(parse_series("1/((1-t)*(1+t))"), 4) == _ints([1, 0, 1, 0, 1])
    assert expand(parse_series("1/(1+t^2)"), 4) == _ints([1, 0, -1, 0, 1])
    reduced = parse_series("(1+t)/(1-t^2)")
    assert reduced.numerator == Poly([1])
    assert reduced.denom_factors == ((ONE, 1),)


@pytest.mark.parametrize("text", ["1/(1-2*t)", "1/t", "1/(1-t-t^2)", "(1-t"])
def test_parse_series_errors(text):
    with pytest.raises(ParseError):
        parse_series(text)


def test_factored_rational():
    function = FactoredRational.inverse_of([(1, 2), (-1, 1)])
    assert function.pole_order_at_one() == 2
    assert function.multiplicity(-1) == 1
    assert function.denominator() == Poly([1, -1, -1, 1])
    assert expand(function, 5) == _ints([1, 1, 2, 2, 3, 3])
    cancelled = FactoredRational(Poly([1, -1]), ((ONE, 3),))
    assert cancelled.pole_order_at_one() == 2
    assert cancelled.reduced() == FactoredRational.inverse_of([(1, 2)])
    with pytest.raises(ValueError):
        expand(function, -1)


@pytest.mark.parametrize("root", ["2", "1/2 + i", "(3 + 4*i)/5"])
def test_factored_rational_rejects_non_unity_roots(root):
    value = parse_coefficient(root)
    with pytest.raises(NonUnityRoot, match="not a root of unity"):
        FactoredRational.inverse_of([(1, 1), (value, 1)])
    function = FactoredRational.create(1, [(value, 0), (IMAG, 1), (1, 1)])
    assert function.denom_factors == ((ONE, 1), (IMAG, 1))


def test_factored_rational_sum():
    half = FactoredRational.inverse_of([(1, 1)]).scale(Fraction(1, 2))
    other = FactoredRational.inverse_of([(-1, 1)]).scale(Fraction(1, 2))
    total = half + other
    assert expand(total, 5) == _ints([1, 0, 1, 0, 1, 0])


def test_factored_rational_galois_map():
    function = FactoredRational.inverse_of([(IMAG, 1)])
    assert function.galois_map(3) == FactoredRational.inverse_of([(-IMAG, 1)])


def test_laurent_at_one():
    function = FactoredRational.inverse_of([(1, 2), (-1, 1)])
    laurent = laurent_at_one(function, 3)
    assert laurent.leading_order == 2
    assert laurent.coefficients == tuple(
        CycNumber.rational(Fraction(1, 2**k)) for k in (1, 2, 3)
    )
    assert laurent.coefficient(2) == Fraction(1, 2)
    assert laurent.coefficient(1) == Fraction(1, 4)
    assert laurent.coefficient(3) == 0
    with pytest.raises(ValueError):
        laurent.coefficient(-2)


def test_laurent_requires_a_pole():
    function = FactoredRational(Poly.one_minus(1, 3), ((ONE, 1),))
    with pytest.raises(LaurentError):
        laurent_at_one(function, 2)
    with pytest.raises(LaurentError):
        laurent_at_one(FactoredRational(Poly()), 2)


def test_reconstruct_rational():
    series = expand(FactoredRational.inverse_of([(1, 2)]), 8)
    assert reconstruct_rational(series, 2, 8) == Poly([1, -2, 1])
    skew = expand(FactoredRational.inverse_of([(IMAG, 1), (-IMAG, 1)]), 8)
    assert reconstruct_rational(skew, 2, 8) == Poly([1, 0, 1])


def test_reconstruct_rational_mismatch():
    series = _ints([1, 2, 3, 4, 6, 6, 7])
    with pytest.raises(ReconstructionMismatch) as exc_info:
        reconstruct_rational(series, 2, 6)
    assert exc_info.value.degree == 4
    with pytest.raises(ValueError):
        reconstruct_rational(_ints([2, 1]), 1, 1)
    with pytest.raises(ValueError):
        reconstruct_rational(_ints([1, 1]), 1, 4)


def test_palindrome_check():
    report = palindrome_check(Poly([1, -2, 1]))
    assert report.kind == PalindromeKind.PALINDROME
    assert report.derivative_identity is True
    assert palindrome_check(Poly([1, 0, -1])).kind == PalindromeKind.SKEW_PALINDROME
    neither = palindrome_check(Poly([1, 2]))
    assert neither.kind == PalindromeKind.NEITHER
    assert neither.derivative_identity is None
    assert str(PalindromeKind.SKEW_PALINDROME) == "skew_palindrome"
    with pytest.raises(ValueError):
        palindrome_check(Poly([2, 1]))


def test_palindrome_derivative_identity():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randint(1, 8)
        half = [1] + [rng.randint(-4, 4) for _ in range(n // 2)]
        coeffs = [half[min(i, n - i)] for i in range(n + 1)]
        report = palindrome_check(Poly(coeffs))
        assert report.kind == PalindromeKind.PALINDROME
        assert report.derivative_at_one == report.value_at_one * n / 2
        assert report.derivative_identity


def test_cyclotomic_factorization():
    factorization = cyclotomic_factorization(Poly([1, 0, -1]))
    assert factorization.complete
    assert dict(factorization.roots) == {RootOfUnity(1, 0): 1, RootOfUnity(2, 1): 1}
    assert factorization.cyclotomic_exponents() == {1: 1, 2: 1}
    four = cyclotomic_factorization(Poly([1, 0, 1]), order=4)
    assert dict(four.roots) == {RootOfUnity(4, 1): 1, RootOfUnity(4, 3): 1}
    assert four.cyclotomic_exponents() == {4: 1}
    assert four.as_rational() == FactoredRational.inverse_of([(IMAG, 1), (-IMAG, 1)])


def test_cyclotomic_factorization_partial():
    mystic = cyclotomic_factorization(Poly([1, -IMAG]) * Poly.one_minus(1, 2))
    assert mystic.complete
    assert mystic.multiplicity(RootOfUnity(4, 1)) == 1
    assert mystic.cyclotomic_exponents() is None
    residual = cyclotomic_factorization(Poly([1, -3, 1]))
    assert not residual.complete
    assert residual.residual == Poly([1, -3, 1])
    with pytest.raises(ValueError):
        residual.as_rational()


def test_default_order_bound():
    assert default_order_bound(3) == 360
    assert default_order_bound(3, 4) == 24
    assert default_order_bound(0) == 120

"""Test exact cyclotomic arithmetic."""

import random
from fractions import Fraction

import pytest

from qreflect.kit.cyclotomic import (
    ONE,
    CycNumber,
    RootOfUnity,
    as_root_of_unity,
    check_conductor,
    number_theory,
    parse_coefficient,
)
from qreflect.kit.cyclotomic.numtheory import (
    cyclotomic_coefficients,
    mobius,
    primorial,
)
from qreflect.kit.exceptions import (
    ConductorOverflow,
    CyclotomicZeroDivision,
    GaloisError,
    ParseError,
)

IMAG = CycNumber.zeta(4, 1)


def _random_value(rng: random.Random, conductor: int) -> CycNumber:
    return CycNumber(
        [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(conductor)],
        conductor,
    )


def test_root_identities():
    assert IMAG * IMAG == -1
    assert CycNumber.zeta(3) + CycNumber.zeta(3, 2) == -1
    assert CycNumber.zeta(6) + CycNumber.zeta(6, 5) == 1
    assert CycNumber.zeta(8) ** 2 == IMAG
    assert CycNumber.zeta(5) ** 5 == ONE


def test_rational_values_live_at_conductor_one():
    value = CycNumber.zeta(6) + CycNumber.zeta(6, 5)
    assert value.conductor == 1
    assert value.is_rational()
    assert value.to_fraction() == 1


def test_equality_across_conductors():
    value = CycNumber.zeta(12, 3)
    assert value == IMAG
    assert hash(value) == hash(IMAG)
    assert value.minimize().conductor == 4
    assert str(value) == "i"
    assert len({value, IMAG, CycNumber.zeta(20, 5)}) == 1


def test_field_operations():
    assert (1 + IMAG) / (1 - IMAG) == IMAG
    assert (2 + IMAG) * (2 + IMAG).inverse() == ONE
    assert 1 / CycNumber.zeta(7, 3) == CycNumber.zeta(7, 4)
    assert CycNumber.zeta(3) ** -1 == CycNumber.zeta(3, 2)


def test_division_by_zero():
    with pytest.raises(CyclotomicZeroDivision):
        CycNumber.zeta(5) / CycNumber()
    with pytest.raises(ZeroDivisionError):
        CycNumber().inverse()


def test_galois_map():
    zeta = CycNumber.zeta(12)
    assert zeta.galois_map(5) == CycNumber.zeta(12, 5)
    assert IMAG.conjugate() == -IMAG
    assert CycNumber.rational(3).galois_map(2) == 3
    with pytest.raises(GaloisError):
        CycNumber.zeta(6).galois_map(2)


def test_galois_map_is_a_ring_map():
    rng = random.Random(2024)
    for _ in range(20):
        a, b = _random_value(rng, 12), _random_value(rng, 12)
        for p in (5, 7, 11):
            assert (a * b).galois_map(p) == a.galois_map(p) * b.galois_map(p)
            assert (a + b).galois_map(p) == a.galois_map(p) + b.galois_map(p)


def test_norm_is_rational():
    rng = random.Random(7)
    for _ in range(10):
        value = _random_value(rng, 5)
        norm = ONE
        for p in (1, 2, 3, 4):
            norm = norm * value.galois_map(p)
        assert norm.is_rational()


@pytest.mark.parametrize(
    "text,expected",
    [
        ("i", IMAG),
        ("-i", -IMAG),
        ("zeta(8)^2", IMAG),
        ("zeta(8)**2", IMAG),
        ("2/3 + zeta(3,2)", Fraction(2, 3) + CycNumber.zeta(3, 2)),
        ("(1 + i)^2", 2 * IMAG),
        ("-2^2", CycNumber.rational(-4)),
        ("zeta(6,7)", CycNumber.zeta(6)),
    ],
)
def test_parse_coefficient(text, expected):
    assert parse_coefficient(text) == expected


@pytest.mark.parametrize(
    "text", ["foo", "zeta(0,1)", "1.5", "2^-1", "zeta(4,i)", "1 +", "abs(2)"]
)
def test_parse_coefficient_errors(text):
    with pytest.raises(ParseError):
        parse_coefficient(text, source="matrix.txt", line=3)


def test_parse_error_location():
    with pytest.raises(ParseError) as exc_info:
        parse_coefficient("foo", source="matrix.txt", line=3)
    assert str(exc_info.value).endswith("(line 3 of matrix.txt)")


def test_rendered_values_parse_back():
    rng = random.Random(11)
    for conductor in (3, 4, 5, 8, 9, 12, 15):
        value = _random_value(rng, conductor)
        assert parse_coefficient(str(value)) == value


def test_check_conductor():
    assert check_conductor(CycNumber.zeta(12, 3), 4) == IMAG
    assert check_conductor(CycNumber.zeta(7), None) == CycNumber.zeta(7)
    with pytest.raises(ConductorOverflow):
        check_conductor(CycNumber.zeta(7), 6)


def test_root_of_unity_arithmetic():
    assert RootOfUnity.canonical(6, 3) == RootOfUnity(2, 1)
    assert RootOfUnity.canonical(5, 10) == RootOfUnity(1, 0)
    assert RootOfUnity(3, 1) * RootOfUnity(2, 1) == RootOfUnity(6, 5)
    assert RootOfUnity(8, 3).inverse() == RootOfUnity(8, 5)
    assert RootOfUnity(8, 3).power(2) == RootOfUnity(4, 3)
    assert [str(RootOfUnity(*r)) for r in [(1, 0), (2, 1), (4, 3), (5, 2)]] == [
        "1",
        "-1",
        "-i",
        "zeta(5,2)",
    ]


def test_as_root_of_unity():
    assert as_root_of_unity(CycNumber.rational(-1)) == RootOfUnity(2, 1)
    assert as_root_of_unity(CycNumber.zeta(12, 3)) == RootOfUnity(4, 1)
    assert as_root_of_unity(-CycNumber.zeta(3)) == RootOfUnity(6, 5)
    assert as_root_of_unity(ONE) == RootOfUnity(1, 0)
    assert as_root_of_unity(1 + IMAG) is None
    assert as_root_of_unity(CycNumber.rational(2)) is None
    assert as_root_of_unity(CycNumber()) is None


def test_number_theory():
    summary = number_theory(12)
    assert summary.mobius == 0
    assert summary.totient == 4
    assert summary.cyclotomic_poly == (1, 0, -1, 0, 1)
    assert summary.primitive_root_sum == 0
    assert number_theory(1).primitive_root_sum == 1
    assert number_theory(30).primitive_root_sum == -1
    with pytest.raises(ValueError):
        number_theory(0)


def test_primitive_root_sums_match_mobius():
    for w in range(1, 41):
        summary = number_theory(w)
        assert summary.primitive_root_sum == summary.mobius, w


def test_integer_helpers():
    assert cyclotomic_coefficients(6) == (1, -1, 1)
    assert primorial(10) == 210
    assert primorial(1) == 1
    assert [mobius(n) for n in (1, 2, 4, 6, 12, 30, 105)] == [1, -1, 0, 1, 0, -1, -1]
    assert type(mobius(30)) is int

"""Test presentations, rewriting and the algebra constructors."""

import pytest

from qreflect.kit.algebra import (
    AlgebraProfile,
    Generator,
    NCPoly,
    Presentation,
    dims_and_verify,
    down_up,
    free_algebra,
    groebner_truncated,
    homogenize_lie,
    normal_basis,
    normality_check,
    ore_extension,
    parse_presentation,
    polynomial_ring,
    quantum_plane,
    quotient,
    rees_weyl,
    relations_hold,
)
from qreflect.kit.automorphism import trace_series, verify_automorphism
from qreflect.kit.cyclotomic import CycNumber, parse_coefficient
from qreflect.kit.exceptions import (
    HilbertMismatch,
    JacobiError,
    OreExtensionError,
    ParseError,
    PreconditionError,
)
from qreflect.kit.fixtures import solvable_lie
from qreflect.kit.linalg import inverse, matmul, nullspace, rank, solve
from qreflect.kit.series import FactoredRational, Poly

from .fixtures import SKEW_SQUARE

IMAG = CycNumber.zeta(4, 1)


def test_ncpoly_arithmetic():
    x, y = NCPoly.generator(0), NCPoly.generator(1)
    assert (x * y - y * x).coefficient((0, 1)) == 1
    assert (x + y) ** 2 == x * x + x * y + y * x + y * y
    assert 2 * x - x * 2 == NCPoly()
    assert (x * IMAG / IMAG) == x
    assert len(x + y + 1) == 3
    assert not (x - x)
    assert (x * y).degrees([1, 2]) == {3}
    assert not (x + y * y).is_homogeneous([1, 1])
    assert (x * x * y - 3 * y).render(["x", "y"]) == "x^2*y - 3*y"


@pytest.mark.parametrize(
    "algebra,dims",
    [
        (free_algebra(["x", "y"]), [1, 2, 4, 8, 16]),
        (polynomial_ring(["x", "y", "z"]), [1, 3, 6, 10, 15]),
        (quantum_plane(-1), [1, 2, 3, 4, 5]),
        (quantum_plane(IMAG), [1, 2, 3, 4, 5]),
        (rees_weyl(1), [1, 3, 6, 10, 15]),
        (down_up(2, -1), [1, 2, 4, 6, 9]),
    ],
)
def test_normal_basis_dims(algebra, dims):
    assert normal_basis(algebra, 4).dims == dims


def test_dims_and_verify():
    check = dims_and_verify(down_up(2, -1), None, 7)
    assert check.passed
    assert check.basis.dims == [1, 2, 4, 6, 9, 12, 16, 20]
    assert dims_and_verify(rees_weyl(2), None, 4).passed


def test_dims_and_verify_mismatch():
    wrong = free_algebra(["x", "y"]).with_profile(AlgebraProfile.quantum(2))
    with pytest.raises(HilbertMismatch) as exc_info:
        dims_and_verify(wrong, None, 4)
    assert exc_info.value.degree == 2
    check = dims_and_verify(wrong, None, 4, strict=False)
    assert not check.passed
    assert check.mismatch_degree == 2
    with pytest.raises(PreconditionError):
        dims_and_verify(free_algebra(["x"]), None, 4)


def test_groebner_truncated_needs_relation_degree():
    with pytest.raises(PreconditionError):
        groebner_truncated(down_up(2, -1), 2)
    system = groebner_truncated(quantum_plane(-1), 4)
    assert system.normal_form(NCPoly.word((0, 1))) == -NCPoly.word((1, 0))
    with pytest.raises(PreconditionError):
        system.normal_words(5)


def test_rewriting_multiplication(skew_plane):
    system = skew_plane.rewriting(6)
    x, y = skew_plane.gen("x"), skew_plane.gen("y")
    assert system.multiply(x * y, x * y) == system.normal_form(-(x * x * y * y))
    assert system.multiply(y, x) == system.normal_form(-(x * y))


def test_profile():
    profile = down_up(2, -1).profile
    assert profile.gkdim == 3
    assert profile.euler_degree == 4
    assert not profile.is_quantum
    assert AlgebraProfile.quantum(3).is_quantum
    assert profile.p_factor == Poly([1, 1])
    assert str(AlgebraProfile.quantum(2)) == "gldim 2, hilbert 1/((1 - t)^2)"


def test_normality_check(skew_plane):
    assert normality_check(skew_plane, "x", 6).normal
    assert normality_check(skew_plane, "x^2 + y^2", 6).normal
    result = normality_check(free_algebra(["x", "y"]), "x", 4)
    assert not result.normal
    assert result.failed_at == 2
    assert "is not normal" in str(result)
    weyl = rees_weyl(1)
    assert normality_check(weyl, "z", 5).normal
    assert normality_check(weyl, "x", 5).failed_at == 2
    assert "verified to degree 6" in str(normality_check(skew_plane, "y", 6))


def test_relations_hold(skew_plane, plane):
    assert relations_hold(skew_plane, skew_plane, {"x": "y", "y": "x"}) == []
    assert relations_hold(skew_plane, plane, {"x": "x", "y": "y"}) == ["x*y - y*x"]
    assert relations_hold(skew_plane, skew_plane, {"x": "x^3", "y": "y"}) == []
    with pytest.raises(PreconditionError):
        relations_hold(skew_plane, plane, {"x": "x"})


def test_quotient(plane):
    line = quotient(plane, "x")
    assert line.profile.gldim == 1
    assert line.profile.hilbert == FactoredRational.inverse_of([(1, 1)])
    assert dims_and_verify(line, None, 5).passed


@pytest.mark.parametrize(
    "a,b", [(1, -1), (-1, 1), ("i", -1), ("zeta(3,1)", "zeta(3,2)"), (-1, "i")]
)
def test_factor_ring_trace(a, b):
    algebra = solvable_lie()
    assert normality_check(algebra, "z", 4).normal
    factor = quotient(algebra, "z")
    assert factor.profile.hilbert == FactoredRational.inverse_of([(1, 2)])
    matrix = [[a, 0, 0], [0, b, 0], [0, 0, a]]
    g = verify_automorphism(algebra, matrix, "g")
    induced = verify_automorphism(factor, matrix, "g")
    scale, other = parse_coefficient(str(a)), parse_coefficient(str(b))
    cutoff = 6
    full = trace_series(algebra, g, cutoff)
    on_factor = trace_series(factor, induced, cutoff)
    # z is an eigenvector of degree 1 with eigenvalue a
    assert on_factor == [full[0]] + [
        full[i] - scale * full[i - 1] for i in range(1, cutoff + 1)
    ]
    commutative = FactoredRational.inverse_of([(scale, 1), (other, 1)])
    assert on_factor == commutative.expand(cutoff)


def test_presentation_validation():
    with pytest.raises(ValueError):
        Generator("t")
    with pytest.raises(ValueError):
        Generator("zeta")
    with pytest.raises(ValueError):
        Generator("x", 0)
    with pytest.raises(ValueError):
        Presentation("dup", (Generator("x"), Generator("x")))
    x, y = NCPoly.generator(0), NCPoly.generator(1)
    with pytest.raises(ValueError):
        Presentation("bad", (Generator("x"), Generator("y")), (x * y - y,))
    with pytest.raises(KeyError):
        free_algebra(["x"]).index("y")


def test_parse_presentation():
    algebra = parse_presentation(SKEW_SQUARE, source="skew_square.alg")
    assert algebra.name == "skew_square"
    assert algebra.names == ("x", "y")
    assert algebra.profile == AlgebraProfile.quantum(2)
    assert normal_basis(algebra, 3).dims == [1, 2, 3, 4]
    reparsed = parse_presentation(str(algebra))
    assert reparsed.relations == algebra.relations
    assert reparsed.profile == algebra.profile


def test_parse_presentation_weights_and_order():
    algebra = parse_presentation(
        "algebra weighted\ngenerators x:1 w:2\norder w x\nrelation x*w - w*x\n"
    )
    assert algebra.weights == (1, 2)
    assert algebra.order == ("w", "x")
    assert normal_basis(algebra, 4).dims == [1, 1, 2, 2, 3]
    assert algebra.profile is None


@pytest.mark.parametrize(
    "text,line",
    [
        ("algebra a\ngenerators x y\nweight 2\n", 3),
        ("generators x y\n", None),
        ("algebra a\n", None),
        ("algebra a\ngenerators x y\nrelation x*y - x\n", 3),
        ("algebra a\ngenerators x y\nrelation x*q\n", 3),
        ("algebra a\ngenerators x y\nrelation x*y + 1\n", 3),
        ("algebra a\ngenerators x x\n", None),
        ("algebra a\ngenerators x y\ngldim two\n", 3),
        ("algebra a\ngenerators x:0\n", 2),
    ],
)
def test_parse_presentation_errors(text, line):
    with pytest.raises(ParseError) as exc_info:
        parse_presentation(text, source="bad.alg")
    assert exc_info.value.line == line
    assert exc_info.value.source == "bad.alg"


def test_parse_presentation_needs_hilbert_with_gldim():
    with pytest.raises(ParseError):
        parse_presentation("algebra a\ngenerators x\ngldim 1\n")


def test_ore_extension():
    line = polynomial_ring(["x"], "line")
    plane = ore_extension(line, name="y")
    assert plane.names == ("x", "y")
    assert plane.profile.gldim == 2
    assert dims_and_verify(plane, None, 5).passed
    minus = verify_automorphism(line, [[-1]], "minus")
    skew = ore_extension(line, minus, name="y")
    assert normal_basis(skew, 4).dims == [1, 2, 3, 4, 5]
    assert normality_check(skew, "x", 4).normal


def test_ore_extension_with_derivation():
    line = polynomial_ring(["x"], "line")
    jordan = ore_extension(line, delta={"x": "x^2"}, name="y")
    assert dims_and_verify(jordan, None, 6).passed
    assert not normality_check(jordan, "y", 4).normal


def test_ore_extension_errors():
    line = polynomial_ring(["x"], "line")
    with pytest.raises(OreExtensionError):
        ore_extension(line, name="x")
    with pytest.raises(OreExtensionError):
        ore_extension(line, delta={"x": "x"}, name="y")
    with pytest.raises(OreExtensionError):
        ore_extension(line, delta={"w": "x^2"}, name="y")
    with pytest.raises(OreExtensionError):
        ore_extension(line, name="y", side="middle")
    other = verify_automorphism(polynomial_ring(["x"], "other"), [[-1]])
    with pytest.raises(OreExtensionError):
        ore_extension(line, other, name="y")


def test_homogenize_lie():
    constants = [[[0, 0], [0, 1]], [[0, -1], [0, 0]]]
    algebra = homogenize_lie(constants, ["x", "y"])
    assert algebra.names == ("x", "y", "z")
    assert dims_and_verify(algebra, None, 5).passed
    assert normality_check(algebra, "z", 4).normal


def test_homogenize_lie_errors():
    with pytest.raises(JacobiError):
        homogenize_lie([[[0, 0], [0, 1]], [[0, 1], [0, 0]]], ["x", "y"])
    with pytest.raises(JacobiError):
        homogenize_lie([[[0, 0]]], ["x", "y"])
    e = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    zero = [0, 0, 0]
    constants = [
        [zero, e[0], [-v for v in e[2]]],
        [[-v for v in e[0]], zero, e[1]],
        [e[2], [-v for v in e[1]], zero],
    ]
    with pytest.raises(JacobiError):
        homogenize_lie(constants, ["a", "b", "c"])


def test_rees_weyl_requires_positive_rank():
    assert rees_weyl(2).names == ("x1", "y1", "x2", "y2", "z")
    with pytest.raises(ValueError):
        rees_weyl(0)


def test_linear_algebra():
    matrix = [[1, 2], [2, 4]]
    assert rank(matrix) == 1
    assert nullspace(matrix) == [[-2, 1]]
    assert solve([[1, 1], [1, -1]], [2, 0]) == [1, 1]
    assert solve(matrix, [1, 0]) is None
    assert inverse(matrix) is None
    rotation = [[0, -1], [1, 0]]
    assert matmul(rotation, inverse(rotation)) == [[1, 0], [0, 1]]

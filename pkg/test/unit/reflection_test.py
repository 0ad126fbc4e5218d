"""Test the classification of automorphisms and the rigidity checks."""

import pytest

from qreflect.kit.algebra import (
    AlgebraProfile,
    down_up,
    free_algebra,
    polynomial_ring,
    rees_weyl,
)
from qreflect.kit.automorphism import GradedAutomorphism, verify_automorphism
from qreflect.kit.cyclotomic import CycNumber, RootOfUnity
from qreflect.kit.exceptions import PreconditionError
from qreflect.kit.reflection import (
    DOWN_UP_HILBERT,
    EigenCase,
    ReflectionKind,
    classify,
    downup_filter,
    eigen_case,
    eigen_structure,
    fixed_dimension,
    mystic_consistency,
    non_trivial,
    rees_classify,
    rees_group,
    reflection_vector_normality,
    rigidity_verdict,
    translation_shape,
)

MINUS_ONE = CycNumber.rational(-1)
ZETA6 = RootOfUnity(6, 1)
ZETA6_BAR = RootOfUnity(6, 5)


@pytest.fixture(name="rees")
def _fixture_rees():
    yield rees_weyl(1)


def _classify(presentation, g, cutoff=8):
    return classify(presentation, presentation.profile, g, cutoff, order_cap=100)


def test_classify_mystic_reflection(skew_square, mystic):
    report = _classify(skew_square, mystic)
    assert report.kind is ReflectionKind.MYSTIC_REFLECTION
    assert report.is_quasi_reflection
    assert report.order == 4
    assert report.gkdim == 2
    assert report.pole_order_at_one == 1
    assert report.xi == MINUS_ONE
    assert report.inverse_xi == MINUS_ONE
    assert report.hdet == MINUS_ONE
    assert report.case is EigenCase.OPPOSITE_PAIR
    assert dict(report.eigenvalues) == {RootOfUnity(4, 1): 1, RootOfUnity(4, 3): 1}
    assert str(report).startswith("g: mystic_reflection, xi = -1, order 4")


def test_classify_reflection(skew_square, swap):
    report = _classify(skew_square, swap)
    assert report.kind is ReflectionKind.REFLECTION
    assert report.xi == MINUS_ONE
    assert report.hdet == MINUS_ONE
    assert report.case is EigenCase.SINGLE
    assert fixed_dimension(report.eigenvalues) == 1
    assert non_trivial(report.eigenvalues) == [RootOfUnity(2, 1)]


def test_classify_diagonal_sign_is_no_reflection(skew_square):
    h = verify_automorphism(skew_square, [[-1, 0], [0, 1]], "h")
    report = _classify(skew_square, h)
    assert report.kind is ReflectionKind.NONE
    assert not report.is_quasi_reflection
    assert report.pole_order_at_one == 0
    assert report.xi is None
    # the degree-1 eigenvalues alone would call this a reflection
    assert fixed_dimension(report.eigenvalues) == 1


def test_classify_identity_and_square(skew_square, mystic):
    identity = GradedAutomorphism.identity(skew_square)
    assert _classify(skew_square, identity).kind is ReflectionKind.IDENTITY
    square = _classify(skew_square, mystic**2)
    assert square.kind is ReflectionKind.NONE
    assert square.hdet == CycNumber.rational(1)


def test_classify_quasi_bireflection():
    space = polynomial_ring(["x", "y", "z"])
    g = GradedAutomorphism.diagonal(space, [-1, -1, 1], "b")
    report = _classify(space, g)
    assert report.kind is ReflectionKind.QUASI_BIREFLECTION
    assert report.pole_order_at_one == 1
    assert not report.kind.is_quasi_reflection


def test_classify_needs_profile():
    plain = free_algebra(["x", "y"])
    with pytest.raises(PreconditionError):
        classify(plain, None, GradedAutomorphism.identity(plain), 4)


def test_order_over_cap_is_noted(plane):
    shear = verify_automorphism(plane, [[1, 1], [0, 1]], "shear")
    report = classify(plane, plane.profile, shear, 6, order_cap=10)
    assert report.order is None
    assert report.kind is ReflectionKind.NONE
    assert report.notes == (
        "order exceeds the cap 10",
        "trace has the pole order of the Hilbert series",
    )


@pytest.mark.parametrize(
    "eigenvalues,expected",
    [
        (((RootOfUnity(1, 0), 2), (RootOfUnity(2, 1), 1)), EigenCase.SINGLE),
        (((RootOfUnity(4, 1), 1), (RootOfUnity(4, 3), 1)), EigenCase.OPPOSITE_PAIR),
        (((ZETA6, 2), (ZETA6_BAR, 1)), EigenCase.SIXTH_ROOT_TRIPLE),
        (((ZETA6, 2), (ZETA6_BAR, 2)), EigenCase.SIXTH_ROOT_QUADRUPLE),
        (((RootOfUnity(3, 1), 2),), EigenCase.OTHER),
    ],
)
def test_eigen_case(eigenvalues, expected):
    assert eigen_case(eigenvalues) is expected


def test_eigen_structure(swap, mystic):
    expected = {RootOfUnity(1, 0): 1, RootOfUnity(2, 1): 1}
    assert dict(eigen_structure(swap, 2)) == expected
    assert fixed_dimension(eigen_structure(mystic**2, 2)) == 0


def test_mystic_consistency(skew_square, mystic):
    report = _classify(skew_square, mystic)
    result = mystic_consistency(skew_square, skew_square.profile, mystic, report, 8, 5)
    assert result.passed
    assert [c.name for c in result.checks] == [
        "cube_trace_conjugate",
        "square_trace",
        "squares_dependent",
        "square_normal",
    ]
    assert all(str(c).startswith("PASS") for c in result.checks)


def test_mystic_consistency_needs_mystic_reflection(skew_square, swap):
    report = _classify(skew_square, swap)
    with pytest.raises(PreconditionError):
        mystic_consistency(skew_square, skew_square.profile, swap, report, 8)


def test_reflection_vector_normality(skew_square, swap, mystic):
    report = _classify(skew_square, swap)
    result = reflection_vector_normality(skew_square, swap, report, 5)
    assert result.normal
    with pytest.raises(PreconditionError):
        reflection_vector_normality(
            skew_square, mystic, _classify(skew_square, mystic), 5
        )


def test_rigidity_with_normal_squares(skew_plane):
    verdict = rigidity_verdict(skew_plane, ["x", "y"], 5)
    assert verdict.hypothesis_fails
    assert verdict.witnesses == ["x", "y"]
    assert verdict.message.startswith("normal square for x, y")
    assert not verdict.notes


def test_rigidity_with_automorphism_eigenvectors(skew_square, swap):
    verdict = rigidity_verdict(skew_square, [], 5, automorphisms=[swap])
    assert len(verdict.checks) == 2
    assert all(c.normal.normal for c in verdict.checks)
    assert verdict.hypothesis_fails
    assert "x^2 is normal" in verdict.notes


def test_rigidity_without_normal_squares():
    free = free_algebra(["x", "y"])
    verdict = rigidity_verdict(free, ["x"], 4)
    assert not verdict.hypothesis_fails
    assert not verdict.checks[0].normal.normal
    assert verdict.message.startswith("no candidate has a normal square")
    assert not verdict.notes


def test_rigidity_rejects_higher_degree(skew_plane):
    with pytest.raises(ValueError):
        rigidity_verdict(skew_plane, ["x^2"], 4)


def test_downup_filter():
    report = downup_filter()
    assert report.passed
    assert report.conclusion == "no quasi-reflection of finite order"
    assert [e.label for e in report.eliminations] == [
        "cancelling_eigenvalues",
        "fixed_generator",
        "sixth_roots",
        "identity_on_generators",
    ]
    assert report.families
    assert all(e.eliminated for e in report.eliminations)
    assert downup_filter(down_up(2, -1).profile).passed
    assert downup_filter(AlgebraProfile(3, DOWN_UP_HILBERT)).passed


def test_downup_filter_rejects_other_profiles():
    with pytest.raises(PreconditionError):
        downup_filter(AlgebraProfile.quantum(3))


def test_rees_reflections(rees):
    s = GradedAutomorphism.diagonal(rees, [1, 1, -1], "s")
    report = rees_classify(rees, s, 8, order_cap=100)
    assert report.classification.kind is ReflectionKind.REFLECTION
    assert report.translation_shape
    assert report.consistent
    u = verify_automorphism(rees, [[1, 0, 0], [0, 1, 0], [1, 0, -1]], "u")
    assert translation_shape(rees, u)
    v = GradedAutomorphism.diagonal(rees, [-1, -1, 1], "v")
    other = rees_classify(rees, v, 8, order_cap=100)
    assert not other.translation_shape
    assert not other.classification.is_quasi_reflection
    assert other.consistent


def test_rees_groups(rees):
    s = GradedAutomorphism.diagonal(rees, [1, 1, -1], "s")
    u = verify_automorphism(rees, [[1, 0, 0], [0, 1, 0], [1, 0, -1]], "u")
    cyclic = rees_group(rees, [s], 8, order_cap=100)
    assert cyclic.group_order == 2
    assert cyclic.quasi_reflections == ("s",)
    assert cyclic.invariant_degree_one == CycNumber.rational(2)
    assert cyclic.generator_count == 3
    assert "generator count" in cyclic.verdict
    infinite = rees_group(rees, [s, u], 8, order_cap=50)
    assert infinite.exceeds_cap
    assert "order cap 50" in infinite.verdict


def test_rees_group_needs_central_generator(skew_plane):
    with pytest.raises(PreconditionError):
        rees_group(skew_plane, [GradedAutomorphism.identity(skew_plane)], 4)

"""Test Molien series, the fixed-ring analysis and the regularity gate."""

from dataclasses import replace
from fractions import Fraction

import pytest

from qreflect.kit.algebra import down_up, polynomial_ring
from qreflect.kit.automorphism import (
    GradedAutomorphism,
    order_and_closure,
    verify_automorphism,
)
from qreflect.kit.cyclotomic import CycNumber, RootOfUnity
from qreflect.kit.exceptions import PreconditionError
from qreflect.kit.invariants import (
    FixedRingStatus,
    GateKind,
    fixed_ring_analysis,
    group_traces,
    invariant_dims_oracle,
    isotypic_series,
    molien,
    molien_function,
    quasi_count_laurent,
    regularity_gate,
)
from qreflect.kit.reflection import ReflectionKind, classify
from qreflect.kit.series import FactoredRational, Poly, expand

CUTOFF = 8


def _ints(values):
    return [CycNumber.rational(v) for v in values]


@pytest.fixture(name="mystic_group")
def _fixture_mystic_group(skew_square):
    g = verify_automorphism(skew_square, [["i", 0], [0, "-i"]], "g")
    yield order_and_closure([g], 10)


@pytest.fixture(name="sign_group")
def _fixture_sign_group(skew_square):
    h = verify_automorphism(skew_square, [[-1, 0], [0, 1]], "h")
    yield order_and_closure([h], 10)


def _gate(group):
    presentation = group.presentation
    reports = [
        classify(presentation, presentation.profile, g, CUTOFF, order_cap=100)
        for g in group
    ]
    return regularity_gate(presentation.profile, group, reports)


def test_molien(skew_square, mystic_group):
    series = molien(skew_square, mystic_group, CUTOFF)
    assert series == _ints([1, 0, 2, 0, 3, 0, 4, 0, 5])
    assert invariant_dims_oracle(skew_square, mystic_group, CUTOFF) == [
        1,
        0,
        2,
        0,
        3,
        0,
        4,
        0,
        5,
    ]


def test_molien_of_sign_group(skew_square, sign_group):
    series = molien(skew_square, sign_group, 6)
    expected = FactoredRational.create(
        Poly([1, -1, 1]),
        [(1, 2), (CycNumber.zeta(4, 1), 1), (-CycNumber.zeta(4, 1), 1)],
    )
    assert series == expand(expected, 6)
    assert series == _ints(invariant_dims_oracle(skew_square, sign_group, 6))


def test_molien_function(skew_square, mystic_group):
    traces = group_traces(skew_square, skew_square.profile, mystic_group, CUTOFF)
    assert len(traces) == 4
    function = molien_function(traces)
    assert function.pole_order_at_one() == 2
    assert function.expand(CUTOFF) == molien(skew_square, mystic_group, CUTOFF)


def test_fixed_ring_reconstruction(skew_square, mystic_group):
    series = molien(skew_square, mystic_group, CUTOFF)
    report = fixed_ring_analysis(series, skew_square.profile, 4, 2)
    assert report.status is FixedRingStatus.RECONSTRUCTED
    assert report.euler == Poly([1, 0, -2, 0, 1])
    assert report.q == Poly([1, 2, 1])
    assert report.q_at_one_ok
    assert report.degree_ok
    assert report.message == f"H = 1/((1 - t)^n * q(t)) with q = {report.q}"


def test_fixed_ring_wrong_quasi_count(skew_square, mystic_group):
    series = molien(skew_square, mystic_group, CUTOFF)
    report = fixed_ring_analysis(series, skew_square.profile, 4, 3)
    assert report.q_at_one_ok
    assert report.degree_ok is False


def test_fixed_ring_without_full_pole(skew_square):
    series = expand(FactoredRational.inverse_of([(1, 1), (-1, 1)]), CUTOFF)
    report = fixed_ring_analysis(series, skew_square.profile, 2, 1)
    assert report.status is FixedRingStatus.RECONSTRUCTED
    assert report.euler == Poly([1, 0, -1])
    assert report.q is None
    assert report.q_at_one_ok is None
    assert report.degree_ok is None


def test_fixed_ring_inconclusive(skew_square, sign_group):
    series = molien(skew_square, sign_group, CUTOFF)
    report = fixed_ring_analysis(series, skew_square.profile, 2, 0)
    assert report.status is FixedRingStatus.INCONCLUSIVE
    assert report.euler is None
    assert "deg e <= 4" in report.message


def test_quasi_count_laurent(skew_square, mystic_group):
    traces = group_traces(skew_square, skew_square.profile, mystic_group, CUTOFF)
    laurent = quasi_count_laurent(skew_square.profile, traces, 2)
    assert laurent.expected == Fraction(1, 4)
    assert laurent.coefficient == CycNumber.rational(Fraction(1, 4))
    assert laurent.holds
    assert not quasi_count_laurent(skew_square.profile, traces, 1).holds
    with pytest.raises(PreconditionError):
        quasi_count_laurent(down_up(2, -1).profile, traces, 2)


def test_isotypic_series(skew_square, mystic_group):
    g = mystic_group.elements[1]
    components = dict(isotypic_series(skew_square, g, 4, 4))
    assert set(components) == {
        RootOfUnity(1, 0),
        RootOfUnity(4, 1),
        RootOfUnity(2, 1),
        RootOfUnity(4, 3),
    }
    assert components[RootOfUnity(1, 0)] == _ints([1, 0, 2, 0, 3])
    assert components[RootOfUnity(4, 1)][1] == 1
    totals = [sum(c, CycNumber()) for c in zip(*components.values())]
    assert totals == _ints([1, 2, 3, 4, 5])


def test_gate_trivial(skew_square):
    group = order_and_closure([GradedAutomorphism.identity(skew_square)], 2)
    verdict = _gate(group)
    assert verdict.kind is GateKind.TRIVIAL
    assert verdict.gorenstein


def test_gate_mystic_group_is_regular(mystic_group):
    verdict = _gate(mystic_group)
    assert verdict.kind is GateKind.REGULAR
    assert verdict.quasi_reflections == ("g", "g^3")
    assert not verdict.gorenstein
    assert verdict.notes[0] == "some hdet differs from 1"
    assert str(verdict).startswith("regular: cyclic group generated by")


def test_gate_without_quasi_reflections(sign_group, mystic_group):
    verdict = _gate(sign_group)
    assert verdict.kind is GateKind.INFINITE_GLOBAL_DIMENSION
    assert verdict.quasi_reflections == ()
    assert verdict.gorenstein
    assert verdict.notes[0] == "every hdet is 1: A^G is AS-Gorenstein"
    square = mystic_group.elements[2]
    verdict = _gate(order_and_closure([square], 10))
    assert verdict.kind is GateKind.INFINITE_GLOBAL_DIMENSION


def test_gate_prime_power_cyclic_group():
    space = polynomial_ring(["x", "y", "z"])
    g = GradedAutomorphism.diagonal(space, ["i", -1, 1], "g")
    verdict = _gate(order_and_closure([g], 10))
    assert verdict.kind is GateKind.INFINITE_GLOBAL_DIMENSION
    assert verdict.quasi_reflections == ("g^2",)
    assert "prime-power order" in verdict.message


def test_gate_necessary_condition():
    space = polynomial_ring(["x", "y", "z"])
    g = GradedAutomorphism.diagonal(space, [-1, CycNumber.zeta(3, 1), 1], "g")
    group = order_and_closure([g], 10)
    assert group.order == 6
    verdict = _gate(group)
    assert verdict.kind is GateKind.NECESSARY_CONDITION_MET
    assert set(verdict.quasi_reflections) == {"g^2", "g^3", "g^4"}
    assert "g^2 has order 3: A = C[b; sigma]" in verdict.notes


@pytest.mark.parametrize("mystic", [3, 4, 5])
def test_gate_order_eight_without_reflections(mystic):
    space = polynomial_ring(["x", "y", "z"])
    signs = [
        GradedAutomorphism.diagonal(space, entries, name)
        for entries, name in [([-1, 1, 1], "a"), ([1, -1, 1], "b"), ([1, 1, -1], "c")]
    ]
    group = order_and_closure(signs, 10)
    assert group.order == 8
    reports = [
        classify(space, space.profile, g, CUTOFF, order_cap=100) for g in group
    ]
    relabelled = [reports[0]]
    for i, r in enumerate(reports[1:]):
        kind = ReflectionKind.MYSTIC_REFLECTION if i < mystic else ReflectionKind.NONE
        relabelled.append(replace(r, kind=kind))
    verdict = regularity_gate(space.profile, group, relabelled)
    assert len(verdict.quasi_reflections) == mystic
    note = "|G| = 8 without reflections: G contains at least 4 mystic reflections"
    if mystic < 4:
        assert verdict.kind is GateKind.INFINITE_GLOBAL_DIMENSION
        assert "at least 4 needed" in verdict.message
        assert not any(n.startswith(note) for n in verdict.notes)
    else:
        assert verdict.kind is GateKind.NECESSARY_CONDITION_MET
        assert f"{note} ({mystic})" in verdict.notes

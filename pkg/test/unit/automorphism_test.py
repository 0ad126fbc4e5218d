"""Test graded automorphisms, group closure and trace series."""

import pytest

from qreflect.kit.algebra import (
    AlgebraProfile,
    Generator,
    Presentation,
    free_algebra,
    load_presentation,
    polynomial_ring,
    quantum_plane,
)
from qreflect.kit.automorphism import (
    GradedAutomorphism,
    euler_polynomial,
    gorenstein_flag,
    load_automorphisms,
    order_and_closure,
    parse_automorphisms,
    trace_function,
    trace_series,
    verify_automorphism,
)
from qreflect.kit.cyclotomic import ONE, CycNumber, RootOfUnity
from qreflect.kit.cyclotomic.numtheory import units
from qreflect.kit.exceptions import (
    ExceedsCap,
    NonInvertible,
    NotAnAutomorphism,
    ParseError,
    PreconditionError,
)
from qreflect.kit.fixtures import diagonal, iterated_ore
from qreflect.kit.series import FactoredRational, Poly

from .fixtures import MYSTIC_AUTO, REFLECTION_AUTO


def _ints(values):
    return [CycNumber.rational(v) for v in values]


def test_verify_automorphism(skew_square, mystic, swap):
    assert mystic.is_diagonal()
    assert not swap.is_diagonal()
    assert swap.render_images() == ["x -> y", "y -> x"]
    with pytest.raises(NotAnAutomorphism) as exc_info:
        verify_automorphism(skew_square, [[1, 1], [0, 1]], "shear")
    assert exc_info.value.witness == skew_square.render(skew_square.relations[0])
    with pytest.raises(NonInvertible):
        verify_automorphism(skew_square, [[1, 1], [1, 1]])
    with pytest.raises(PreconditionError):
        verify_automorphism(skew_square, [[1]])


def test_verify_automorphism_needs_degree_one_generators():
    weighted = Presentation("weighted", (Generator("x"), Generator("w", 2)))
    with pytest.raises(PreconditionError):
        verify_automorphism(weighted, [[1, 0], [0, 1]])


def test_commutative_shear(plane):
    shear = verify_automorphism(plane, [[1, 1], [0, 1]], "shear")
    with pytest.raises(ExceedsCap) as exc_info:
        shear.order(5)
    assert exc_info.value.cap == 5


def test_group_operations(skew_square, mystic, swap):
    assert mystic.order(10) == 4
    assert swap.order(10) == 2
    assert mystic @ mystic == GradedAutomorphism.diagonal(skew_square, [-1, -1])
    assert mystic**-1 == mystic**3
    assert mystic.inverse() == mystic**3
    assert (mystic**4).is_identity()
    assert swap @ mystic @ swap == mystic.inverse()
    other = verify_automorphism(polynomial_ring(["x", "y"]), [[1, 0], [0, 1]])
    with pytest.raises(PreconditionError):
        mystic @ other


def test_trace_series(skew_square, skew_plane, mystic, swap):
    assert trace_series(skew_square, mystic, 6) == _ints([1, 0, 1, 0, 1, 0, 1])
    assert trace_series(skew_square, swap, 2) == _ints([1, 0, 1])
    identity = GradedAutomorphism.identity(skew_square)
    assert trace_series(skew_square, identity, 4) == _ints([1, 2, 3, 4, 5])
    # the same matrix acts differently on the skew plane
    on_skew = verify_automorphism(skew_plane, [["i", 0], [0, "-i"]], "g")
    assert trace_series(skew_plane, on_skew, 4) == _ints([1, 0, -1, 0, 1])
    with pytest.raises(PreconditionError):
        trace_series(polynomial_ring(["x", "y"]), mystic, 3)


def test_action_matrix(skew_square, swap):
    action = swap.action(skew_square.rewriting(4))
    matrix = action.matrix(2)
    assert len(matrix) == 3
    assert sum((matrix[i][i] for i in range(3)), CycNumber()) == 1
    assert swap.action(skew_square.rewriting(4)) is action


def test_trace_function(skew_square, mystic):
    trace = trace_function(skew_square, skew_square.profile, mystic, 8, order=4)
    assert trace.euler == Poly([1, 0, -1])
    assert trace.hdet == -1
    assert trace.pole_order_at_one == 1
    assert trace.euler_degree == 2
    assert dict(trace.factorization.roots) == {
        RootOfUnity(1, 0): 1,
        RootOfUnity(2, 1): 1,
    }
    assert trace.rational.expand(4) == _ints([1, 0, 1, 0, 1])


def test_reflection_traces(skew_square, swap):
    trace = trace_function(skew_square, skew_square.profile, swap, 8, order=2)
    assert trace.euler == Poly([1, 0, -1])
    assert trace.hdet == -1
    assert trace.pole_order_at_one == 1
    h = verify_automorphism(skew_square, [[-1, 0], [0, 1]], "h")
    trace = trace_function(skew_square, skew_square.profile, h, 8, order=2)
    assert trace.euler == Poly([1, 0, 1])
    assert trace.hdet == ONE
    assert trace.pole_order_at_one == 0


def test_skew_plane_rotation_has_unit_hdet(skew_plane):
    rotation = verify_automorphism(skew_plane, [[0, -1], [1, 0]], "r")
    assert rotation.order(10) == 4
    trace = trace_function(skew_plane, skew_plane.profile, rotation, 8, order=4)
    assert trace.pole_order_at_one == 1


def test_euler_polynomial_needs_twice_the_degree(skew_square, mystic):
    with pytest.raises(PreconditionError):
        euler_polynomial(skew_square, skew_square.profile, mystic, 3)


def test_gorenstein_flag():
    assert gorenstein_flag([ONE, ONE])
    assert not gorenstein_flag([ONE, -ONE])
    assert gorenstein_flag([])


def test_order_and_closure(skew_square, mystic, swap):
    cyclic = order_and_closure([mystic], 10)
    assert cyclic.order == 4
    assert [g.name for g in cyclic] == ["id", "g", "g^2", "g^3"]
    assert cyclic.is_cyclic()
    assert cyclic.cyclic_generator() is mystic
    assert cyclic.identity.is_identity()
    dihedral = order_and_closure([mystic, swap], 20)
    assert len(dihedral) == 8
    assert not dihedral.is_cyclic()
    assert dihedral.presentation is skew_square
    identity = GradedAutomorphism.identity(skew_square)
    assert order_and_closure([identity], 2).is_trivial()


def test_order_and_closure_errors(mystic, swap, plane):
    with pytest.raises(ExceedsCap):
        order_and_closure([mystic, swap], 3)
    with pytest.raises(PreconditionError):
        order_and_closure([], 3)
    with pytest.raises(PreconditionError):
        order_and_closure([mystic, verify_automorphism(plane, [[0, 1], [1, 0]])], 8)


def test_parse_automorphisms(skew_square, mystic, swap):
    parsed = parse_automorphisms(MYSTIC_AUTO + REFLECTION_AUTO, skew_square)
    assert [g.name for g in parsed] == ["g", "s"]
    assert parsed == [mystic, swap]
    assert parse_automorphisms(str(mystic), skew_square) == [mystic]


@pytest.mark.parametrize(
    "text",
    [
        "automorphism g on plane\n1 0\n0 1\n",
        "automorphism g on skew_square\n1 0 0\n0 1 0\n0 0 1\n",
        "automorphism g on skew_square\n1 0\n0\n",
        "1 0\n0 1\n",
        "automorphism g skew_square\n1 0\n0 1\n",
        "# nothing here\n",
        "automorphism g on skew_square\n1, foo\n0, 1\n",
    ],
)
def test_parse_automorphism_errors(skew_square, text):
    with pytest.raises(ParseError):
        parse_automorphisms(text, skew_square, source="bad.auto")


def test_load_automorphisms(skew_files):
    algebra = load_presentation(skew_files["algebra"])
    loaded = load_automorphisms(skew_files["reflection"], algebra)
    assert len(loaded) == 1
    assert loaded[0].matrix == ((0, 1), (1, 0))
    with pytest.raises(NotAnAutomorphism):
        parse_automorphisms(
            "automorphism bad on skew_square\n1 1\n0 1\n", algebra, source="bad.auto"
        )


XIS = [CycNumber.zeta(3, 1), CycNumber.zeta(5, 1), CycNumber.zeta(8, 1)]


@pytest.mark.parametrize("q", [-1, CycNumber.zeta(3, 1)], ids=str)
@pytest.mark.parametrize("xi", XIS, ids=str)
def test_opposite_pair_trace_on_quantum_planes(q, xi):
    plane = quantum_plane(q)
    g = verify_automorphism(plane, [[xi, 0], [0, -xi]], "g")
    expected = FactoredRational.inverse_of([(xi, 1), (-xi, 1)])
    assert trace_series(plane, g, 12) == expected.expand(12)
    trace = trace_function(plane, plane.profile, g, 12, order=g.order(100))
    assert trace.euler == Poly([1, 0, -(xi * xi)])


@pytest.mark.parametrize("xi", XIS, ids=str)
def test_opposite_pair_trace_on_sum_of_squares(xi):
    algebra = (
        free_algebra(["b1", "b2"], "B")
        .with_relations(["b1^2 + b2^2"])
        .with_profile(AlgebraProfile.quantum(2))
    )
    g = verify_automorphism(algebra, [[xi, 0], [0, -xi]], "g")
    # 1 + xi^2 t^2 = (1 - i xi t)(1 + i xi t)
    root = CycNumber.zeta(4, 1) * xi
    expected = FactoredRational.inverse_of([(root, 1), (-root, 1)])
    assert trace_series(algebra, g, 12) == expected.expand(12)
    trace = trace_function(algebra, algebra.profile, g, 12, order=g.order(100))
    assert trace.euler == Poly([1, 0, xi * xi])


def test_trace_galois_identities(skew_square, skew_plane, mystic, swap):
    ore = iterated_ore()
    xi = CycNumber.zeta(8, 1)
    cases = [
        (skew_square, mystic),
        (skew_square, swap),
        (skew_square, mystic @ swap),
        (skew_plane, verify_automorphism(skew_plane, [[0, -1], [1, 0]], "r")),
        (ore, diagonal(ore, ["i", "-i", 1, 1], "g")),
        (ore, diagonal(ore, [-1, 1, -1, 1], "s")),
        (skew_plane, verify_automorphism(skew_plane, [[xi, 0], [0, -xi]], "g")),
    ]
    cutoff = 6
    for presentation, g in cases:
        series = trace_series(presentation, g, cutoff)
        for p in units(g.order(100)):
            power = trace_series(presentation, g**p, cutoff)
            assert power == [c.galois_map(p) for c in series], (g.name, p)
        inverse = trace_series(presentation, g.inverse(), cutoff)
        assert inverse == [c.conjugate() for c in series], g.name

"""Fixture suite for the worked examples of quasi-reflections and fixed rings."""

from __future__ import annotations

import logging
from functools import cached_property
from typing import Iterable, List, Sequence

from ..algebra import (
    AlgebraProfile,
    Presentation,
    dims_and_verify,
    down_up,
    normality_check,
    relations_hold,
    rees_weyl,
)
from ..automorphism import (
    FiniteGroup,
    GradedAutomorphism,
    order_and_closure,
    trace_series,
    verify_automorphism,
)
from ..cyclotomic import CycNumber, RootOfUnity
from ..invariants import (
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
from ..plugin.base import CheckResult, Fixture, FixtureSuite
from ..reflection import (
    ClassificationReport,
    ReesReport,
    ReflectionKind,
    classify,
    downup_filter,
    fixed_dimension,
    mystic_consistency,
    rees_classify,
    rees_group,
    reflection_vector_normality,
    rigidity_verdict,
)
from ..series import FactoredRational, Poly, expand
from .algebras import (
    diagonal,
    iterated_ore,
    iterated_ore_relations,
    skew_square_plane,
    sl2_homogenized,
    solvable_lie,
)

log = logging.getLogger(__name__)

IMAG = CycNumber.zeta(4, 1)


def series_agrees(
    actual: Sequence[CycNumber], function: FactoredRational, label: str = "series"
) -> CheckResult:
    """Compare computed coefficients with the expansion of a rational function."""
    cutoff = len(actual) - 1
    expected = expand(function, cutoff)
    for degree, (a, e) in enumerate(zip(actual, expected)):
        if a != e:
            return False, f"{label} degree {degree}: {a} != {e} from {function}"
    return True, f"{label} = {function} through degree {cutoff}"


def _all(*results: CheckResult) -> CheckResult:
    failed = [detail for passed, detail in results if not passed]
    if failed:
        return False, "; ".join(failed)
    return True, "; ".join(detail for _, detail in results)


class WorkedExamples(FixtureSuite):
    """Traces, classifications and fixed rings of the worked examples.

    Every claim is recomputed from the presentations, within the degree cutoff
    and order cap of the run configuration.
    """

    name = "worked_examples"
    title = "Worked examples of reflections, mystic reflections and fixed rings"

    @property
    def cutoff(self) -> int:
        """Degree cutoff of the run."""
        return self.config.degree_cutoff

    @property
    def normality_cutoff(self) -> int:
        """Degree cutoff of normality checks."""
        return self.config.normality_cutoff

    def _classify(
        self, presentation: Presentation, g: GradedAutomorphism
    ) -> ClassificationReport:
        return classify(
            presentation,
            presentation.profile,
            g,
            self.cutoff,
            order_cap=self.config.order_cap,
            order_bound=self.config.order_bound,
        )

    def _rees(self, presentation: Presentation, g: GradedAutomorphism) -> ReesReport:
        return rees_classify(
            presentation, g, self.cutoff, order_cap=self.config.order_cap
        )

    def _group(self, *generators: GradedAutomorphism) -> FiniteGroup:
        return order_and_closure(generators, self.config.order_cap)

    def _gate(self, presentation: Presentation, group: FiniteGroup):
        reports = [self._classify(presentation, g) for g in group]
        return regularity_gate(presentation.profile, group, reports), reports

    # algebras and automorphisms
    @cached_property
    def skew_square(self) -> Presentation:
        """``k⟨x, y⟩/(x² − y²)``."""
        return skew_square_plane()

    @cached_property
    def skew_reflection(self) -> GradedAutomorphism:
        """``x ↦ −x``, ``y ↦ y``."""
        return diagonal(self.skew_square, [-1, 1], "h")

    @cached_property
    def skew_mystic(self) -> GradedAutomorphism:
        """``x ↦ ix``, ``y ↦ −iy``."""
        return diagonal(self.skew_square, ["i", "-i"], "g")

    @cached_property
    def ore(self) -> Presentation:
        """The iterated Ore extension on ``b1, …, b4``."""
        return iterated_ore()

    @cached_property
    def ore_mystic(self) -> GradedAutomorphism:
        """``b1 ↦ i·b1``, ``b2 ↦ −i·b2``, fixing ``b3`` and ``b4``."""
        return diagonal(self.ore, ["i", "-i", 1, 1], "g")

    @cached_property
    def rees(self) -> Presentation:
        """Rees ring of the first Weyl algebra."""
        return rees_weyl(1)

    @cached_property
    def rees_reflection(self) -> GradedAutomorphism:
        """``z ↦ −z`` fixing ``x`` and ``y``."""
        return diagonal(self.rees, [1, 1, -1], "s")

    @cached_property
    def rees_translation(self) -> GradedAutomorphism:
        """``x ↦ x + z``, ``z ↦ −z``."""
        return verify_automorphism(
            self.rees, [[1, 0, 0], [0, 1, 0], [1, 0, -1]], "u"
        )

    # fixtures
    def checks(self) -> Iterable[Fixture]:
        """Fixtures in run order."""
        yield Fixture(
            "skew_square_hilbert",
            "k<x,y>/(x^2 - y^2) has Hilbert series 1/(1 - t)^2",
            self.skew_square_hilbert,
        )
        yield Fixture(
            "skew_square_reflection_trace",
            "h: x -> -x, y -> y has trace 1/(1 + t^2) and is no quasi-reflection",
            self.skew_square_reflection_trace,
        )
        yield Fixture(
            "skew_square_reflection_fixed_ring",
            "the fixed ring of <h> has Hilbert series "
            "(1 - t + t^2)/((1 - t)^2 (1 + t^2)) and infinite global dimension",
            self.skew_square_reflection_fixed_ring,
        )
        yield Fixture(
            "skew_square_mystic_traces",
            "g: x -> ix, y -> -iy has Tr(g) = Tr(g^3) = 1/(1 - t^2) "
            "and Tr(g^2) = 1/(1 + t)^2",
            self.skew_square_mystic_traces,
        )
        yield Fixture(
            "skew_square_mystic_classification",
            "g is a mystic reflection of order 4 with xi = hdet = -1",
            self.skew_square_mystic_classification,
        )
        yield Fixture(
            "skew_square_mystic_fixed_ring",
            "the fixed ring of <g> has Hilbert series 1/(1 - t^2)^2 and is regular",
            self.skew_square_mystic_fixed_ring,
        )
        yield Fixture(
            "skew_square_mystic_square",
            "g^2 is no quasi-reflection and the fixed ring of <g^2> is not regular",
            self.skew_square_mystic_square,
        )
        yield Fixture(
            "iterated_ore_relations",
            "the iterated Ore extension has exactly the six typed relations",
            self.iterated_ore_relations,
        )
        yield Fixture(
            "iterated_ore_hilbert",
            "the iterated Ore extension has Hilbert series 1/(1 - t)^4",
            self.iterated_ore_hilbert,
        )
        yield Fixture(
            "iterated_ore_normal_elements",
            "b1 is not normal while b1^2 is normal",
            self.iterated_ore_normal_elements,
        )
        yield Fixture(
            "iterated_ore_mystic",
            "g: b1 -> i b1, b2 -> -i b2 has trace 1/((1 - t)^3 (1 + t)) "
            "and is a mystic reflection",
            self.iterated_ore_mystic,
        )
        yield Fixture(
            "iterated_ore_fixed_ring",
            "the fixed ring of <g> has Hilbert series 1/((1 - t)^2 (1 - t^2)^2) "
            "with q = (1 + t)^2, q(1) = |G| and deg q = 2 quasi-reflections",
            self.iterated_ore_fixed_ring,
        )
        yield Fixture(
            "iterated_ore_isotypic",
            "the eigenspaces of g have Hilbert series 1, t^2, t, t "
            "over (1 - t)^4 (1 + t)^2 for eigenvalues 1, -1, i, -i",
            self.iterated_ore_isotypic,
        )
        yield Fixture(
            "iterated_ore_averaging",
            "the Molien series agrees with the rank of the averaging operator",
            self.iterated_ore_averaging,
        )
        yield Fixture(
            "rees_reflection",
            "s: z -> -z on the Rees ring of the first Weyl algebra is a reflection "
            "with a normal (-1)-eigenvector",
            self.rees_reflection_check,
        )
        yield Fixture(
            "rees_fixed_ring",
            "the fixed ring of <s> has Hilbert series 1/((1 - t)^2 (1 - t^2)) "
            "and is not AS-Gorenstein in the hdet sense",
            self.rees_fixed_ring,
        )
        yield Fixture(
            "rees_translations",
            "u: x -> x + z, z -> -z is a reflection of translation shape while "
            "x -> -x, y -> -y fixing z is no quasi-reflection",
            self.rees_translations,
        )
        yield Fixture(
            "rees_groups",
            "two distinct reflections generate an infinite group, and "
            "dim (A^G)_1 = 2 < 3 for G = {Id, s}",
            self.rees_groups,
        )
        yield Fixture(
            "rees_second_weyl",
            "z -> -z on the Rees ring of the second Weyl algebra is a reflection",
            self.rees_second_weyl,
        )
        yield Fixture(
            "solvable_lie",
            "y -> -y is a reflection of H(g) for [x, y] = y, "
            "and x -> x, y -> y^2, z -> 2z respects its relations",
            self.solvable_lie_check,
        )
        yield Fixture(
            "sl2_rigidity",
            "no square of e, f, h is normal in H(sl2), while z^2 is",
            self.sl2_rigidity,
        )
        yield Fixture(
            "downup_elimination",
            "every eigenvalue family of a quasi-reflection of a two-generated "
            "regular algebra of dimension 3 is contradicted",
            self.downup_elimination,
        )
        yield Fixture(
            "downup_diagonal",
            "diagonal automorphisms of the down-up algebra A(2, -1) are "
            "no quasi-reflections",
            self.downup_diagonal,
        )

    def skew_square_hilbert(self) -> CheckResult:
        """Hilbert series of the skew square plane."""
        check = dims_and_verify(self.skew_square, None, self.cutoff, strict=False)
        return check.passed, f"dims {list(check.basis.dims)}"

    def skew_square_reflection_trace(self) -> CheckResult:
        """Trace and bucket of ``h``."""
        trace = trace_series(self.skew_square, self.skew_reflection, self.cutoff)
        report = self._classify(self.skew_square, self.skew_reflection)
        bucket = (
            report.kind is ReflectionKind.NONE
            and fixed_dimension(report.eigenvalues) == 1,
            f"h is classified as {report.kind}",
        )
        return _all(
            series_agrees(
                trace, FactoredRational.inverse_of([(IMAG, 1), (-IMAG, 1)]), "Tr(h)"
            ),
            bucket,
        )

    def skew_square_reflection_fixed_ring(self) -> CheckResult:
        """Molien series and gate of ``⟨h⟩``."""
        P = self.skew_square
        group = self._group(self.skew_reflection)
        series = molien(P, group, self.cutoff)
        expected = FactoredRational.create(
            Poly([1, -1, 1]), [(1, 2), (IMAG, 1), (-IMAG, 1)]
        )
        report = fixed_ring_analysis(series, P.profile, group.order, 0)
        gate, _ = self._gate(P, group)
        return _all(
            series_agrees(series, expected, "H(A^h)"),
            (
                report.status is FixedRingStatus.INCONCLUSIVE,
                f"reconstruction {report.status}",
            ),
            (
                gate.kind is GateKind.INFINITE_GLOBAL_DIMENSION and gate.gorenstein,
                gate.message,
            ),
        )

    def skew_square_mystic_traces(self) -> CheckResult:
        """Traces of the powers of ``g``."""
        P, g = self.skew_square, self.skew_mystic
        odd = FactoredRational.inverse_of([(1, 1), (-1, 1)])
        return _all(
            series_agrees(trace_series(P, g, self.cutoff), odd, "Tr(g)"),
            series_agrees(trace_series(P, g**3, self.cutoff), odd, "Tr(g^3)"),
            series_agrees(
                trace_series(P, g**2, self.cutoff),
                FactoredRational.inverse_of([(-1, 2)]),
                "Tr(g^2)",
            ),
        )

    def skew_square_mystic_classification(self) -> CheckResult:
        """Mystic bucket, ξ and hdet of ``g`` with the consistency checks."""
        P, g = self.skew_square, self.skew_mystic
        report = self._classify(P, g)
        minus_one = CycNumber.rational(-1)
        classified = (
            report.kind is ReflectionKind.MYSTIC_REFLECTION
            and report.order == 4
            and report.xi == minus_one
            and report.hdet == minus_one,
            str(report),
        )
        consistency = mystic_consistency(
            P, P.profile, g, report, self.cutoff, self.normality_cutoff
        )
        return _all(
            classified,
            (consistency.passed, "; ".join(str(c) for c in consistency.checks)),
        )

    def skew_square_mystic_fixed_ring(self) -> CheckResult:
        """Molien series and regular gate of ``⟨g⟩``."""
        P = self.skew_square
        group = self._group(self.skew_mystic)
        series = molien(P, group, self.cutoff)
        gate, _ = self._gate(P, group)
        return _all(
            series_agrees(
                series, FactoredRational.inverse_of([(1, 2), (-1, 2)]), "H(A^g)"
            ),
            (gate.kind is GateKind.REGULAR, gate.message),
        )

    def skew_square_mystic_square(self) -> CheckResult:
        """The subgroup ``⟨g²⟩``."""
        P = self.skew_square
        square = self.skew_mystic**2
        report = self._classify(P, square)
        gate, _ = self._gate(P, self._group(square))
        return _all(
            (not report.is_quasi_reflection, f"g^2 is classified as {report.kind}"),
            (gate.kind is GateKind.INFINITE_GLOBAL_DIMENSION, gate.message),
        )

    def iterated_ore_relations(self) -> CheckResult:
        """Identity maps in both directions respect the relations."""
        typed = iterated_ore_relations()
        images = {name: name for name in self.ore.names}
        forward = relations_hold(self.ore, typed, images)
        backward = relations_hold(typed, self.ore, images)
        return (
            not forward and not backward,
            f"failing typed relations {forward}, failing Ore relations {backward}",
        )

    def iterated_ore_hilbert(self) -> CheckResult:
        """Hilbert series of the iterated Ore extension."""
        check = dims_and_verify(
            self.ore, AlgebraProfile.quantum(4), self.cutoff, strict=False
        )
        return check.passed, f"dims {list(check.basis.dims)}"

    def iterated_ore_normal_elements(self) -> CheckResult:
        """Normality of ``b1`` and ``b1²``."""
        b1 = normality_check(self.ore, "b1", self.normality_cutoff)
        square = normality_check(self.ore, "b1^2", self.normality_cutoff)
        return not b1.normal and square.normal, f"{b1}; {square}"

    def iterated_ore_mystic(self) -> CheckResult:
        """Trace, bucket and consistency checks of ``g``."""
        P, g = self.ore, self.ore_mystic
        report = self._classify(P, g)
        consistency = mystic_consistency(
            P, P.profile, g, report, self.cutoff, self.normality_cutoff
        )
        return _all(
            series_agrees(
                report.trace.coefficients,
                FactoredRational.inverse_of([(1, 3), (-1, 1)]),
                "Tr(g)",
            ),
            (report.kind is ReflectionKind.MYSTIC_REFLECTION, str(report)),
            (consistency.passed, "; ".join(str(c) for c in consistency.checks)),
        )

    def iterated_ore_fixed_ring(self) -> CheckResult:
        """Molien series, ``q`` and the Laurent identity for ``⟨g⟩``."""
        P = self.ore
        group = self._group(self.ore_mystic)
        traces = group_traces(
            P, P.profile, group, self.cutoff, order_bound=self.config.order_bound
        )
        _, reports = self._gate(P, group)
        quasi = sum(1 for r in reports if r.is_quasi_reflection)
        series = molien(P, group, self.cutoff)
        laurent = quasi_count_laurent(P.profile, traces, quasi)
        report = fixed_ring_analysis(
            series,
            P.profile,
            group.order,
            quasi,
            function=molien_function(traces),
            laurent=laurent,
        )
        return _all(
            series_agrees(
                series, FactoredRational.inverse_of([(1, 4), (-1, 2)]), "H(A^g)"
            ),
            (
                report.q == Poly([1, 2, 1])
                and bool(report.q_at_one_ok)
                and bool(report.degree_ok),
                f"quasi-reflections {quasi}, {report.message}",
            ),
            (
                laurent.holds,
                f"Laurent coefficient {laurent.coefficient}, "
                f"expected {laurent.expected}",
            ),
        )

    def iterated_ore_isotypic(self) -> CheckResult:
        """Eigenspace series of ``g``."""
        numerators = {
            RootOfUnity(1, 0): Poly([1]),
            RootOfUnity(2, 1): Poly([0, 0, 1]),
            RootOfUnity(4, 1): Poly([0, 1]),
            RootOfUnity(4, 3): Poly([0, 1]),
        }
        results: List[CheckResult] = []
        for root, series in isotypic_series(self.ore, self.ore_mystic, 4, self.cutoff):
            function = FactoredRational.create(numerators[root], [(1, 4), (-1, 2)])
            results.append(series_agrees(series, function, f"eigenvalue {root}"))
        return _all(*results)

    def iterated_ore_averaging(self) -> CheckResult:
        """Molien series against the averaging operator."""
        group = self._group(self.ore_mystic)
        series = molien(self.ore, group, self.cutoff)
        oracle = invariant_dims_oracle(self.ore, group, self.cutoff)
        agrees = [CycNumber.rational(d) for d in oracle] == list(series)
        return agrees, f"ranks {oracle}"

    def rees_reflection_check(self) -> CheckResult:
        """Bucket, shape and eigenvector normality of ``s``."""
        rees = self._rees(self.rees, self.rees_reflection)
        report = rees.classification
        if report.kind is not ReflectionKind.REFLECTION:
            return False, str(report)
        vector = reflection_vector_normality(
            self.rees, self.rees_reflection, report, self.normality_cutoff
        )
        return _all(
            series_agrees(
                report.trace.coefficients,
                FactoredRational.inverse_of([(1, 2), (-1, 1)]),
                "Tr(s)",
            ),
            (rees.consistent and rees.translation_shape, "translation shape"),
            (vector.normal, str(vector)),
        )

    def rees_fixed_ring(self) -> CheckResult:
        """Molien series, regular gate and hdet of ``⟨s⟩``."""
        group = self._group(self.rees_reflection)
        series = molien(self.rees, group, self.cutoff)
        gate, _ = self._gate(self.rees, group)
        return _all(
            series_agrees(
                series, FactoredRational.inverse_of([(1, 3), (-1, 1)]), "H(A^s)"
            ),
            (gate.kind is GateKind.REGULAR, gate.message),
            (not gate.gorenstein, "hdet(s) = -1"),
        )

    def rees_translations(self) -> CheckResult:
        """The translation reflection and an automorphism fixing ``z``."""
        translated = self._rees(self.rees, self.rees_translation)
        fixing = diagonal(self.rees, [-1, -1, 1], "v")
        other = self._rees(self.rees, fixing)
        return _all(
            (
                translated.classification.kind is ReflectionKind.REFLECTION
                and translated.translation_shape,
                str(translated.classification),
            ),
            (
                not other.classification.is_quasi_reflection and other.consistent,
                str(other.classification),
            ),
        )

    def rees_groups(self) -> CheckResult:
        """Closures of reflection groups of the Rees ring."""
        infinite = rees_group(
            self.rees,
            [self.rees_reflection, self.rees_translation],
            self.cutoff,
            order_cap=self.config.order_cap,
        )
        cyclic = rees_group(
            self.rees,
            [self.rees_reflection],
            self.cutoff,
            order_cap=self.config.order_cap,
        )
        return _all(
            (infinite.exceeds_cap, infinite.verdict),
            (
                cyclic.invariant_degree_one == CycNumber.rational(2)
                and cyclic.generator_count == 3,
                cyclic.verdict,
            ),
        )

    def rees_second_weyl(self) -> CheckResult:
        """The reflection ``z ↦ −z`` of the second Rees ring."""
        P = rees_weyl(2)
        g = diagonal(P, [1, 1, 1, 1, -1], "s")
        report = self._rees(P, g)
        return (
            report.classification.kind is ReflectionKind.REFLECTION
            and report.consistent,
            str(report.classification),
        )

    def solvable_lie_check(self) -> CheckResult:
        """Reflection and relation-preserving map of the solvable homogenization."""
        P = solvable_lie()
        report = self._classify(P, diagonal(P, [1, -1, 1], "r"))
        failing = relations_hold(P, P, {"x": "x", "y": "y^2", "z": "2*z"})
        return _all(
            (report.kind is ReflectionKind.REFLECTION, str(report)),
            (not failing, f"failing relations {failing}"),
        )

    def sl2_rigidity(self) -> CheckResult:
        """Normal squares among the generators of ``H(sl2)``."""
        verdict = rigidity_verdict(
            sl2_homogenized(),
            ["e", "f", "h"],
            self.normality_cutoff,
            order_cap=self.config.order_cap,
        )
        return (
            not verdict.hypothesis_fails and "z^2 is normal" in verdict.notes,
            f"{verdict.message}; notes {list(verdict.notes)}",
        )

    def downup_elimination(self) -> CheckResult:
        """Root-sum families of the down-up trace equation."""
        report = downup_filter()
        return report.passed, report.conclusion

    def downup_diagonal(self) -> CheckResult:
        """Diagonal automorphisms of ``A(2, −1)``."""
        P = down_up(2, -1)
        results: List[CheckResult] = [
            (
                dims_and_verify(P, None, self.cutoff, strict=False).passed,
                "Hilbert series 1/((1 - t)^2 (1 - t^2))",
            )
        ]
        for entries in (["-1", "1"], ["i", "-i"], ["i", "i"], ["zeta(3,1)", "1"]):
            g = diagonal(P, entries, f"diag({', '.join(entries)})")
            report = self._classify(P, g)
            results.append((not report.is_quasi_reflection, str(report)))
        return _all(*results)

"""Toolkit facade running the pipelines under a run configuration."""

from __future__ import annotations

import logging
import os
from typing import Iterable, List, Mapping, Sequence, Tuple

from .algebra import (
    AlgebraProfile,
    Presentation,
    dims_and_verify,
    load_presentation,
    normality_check,
)
from .automorphism import (
    FiniteGroup,
    GradedAutomorphism,
    TraceFunction,
    load_automorphisms,
    order_and_closure,
    trace_function,
)
from .config import RunConfig
from .config.client import WithConfig
from .cyclotomic import CycNumber, as_root_of_unity, parse_coefficient
from .exceptions import ExceedsCap, PreconditionError
from .fixtures import series_agrees
from .invariants import (
    fixed_ring_analysis,
    group_traces,
    invariant_dims_oracle,
    molien,
    molien_function,
    quasi_count_laurent,
    regularity_gate,
)
from .plugin import FixtureSuite
from .plugin.client import WithFixtureSuites
from .reflection import (
    ClassificationReport,
    ReflectionKind,
    classify,
    mystic_consistency,
    reflection_vector_normality,
    rigidity_verdict,
)
from .reports import (
    CandidatePart,
    CheckPart,
    ClassifyReport,
    EigenvaluePart,
    ExamplesReport,
    FamilyPart,
    FixtureCheckPart,
    GateReport,
    HdetPart,
    HilbertReport,
    LaurentPart,
    MolienReport,
    NormalityPart,
    NormalReport,
    ProfileReport,
    RigidityPart,
    RootPart,
    RootSumReport,
    SuitePart,
    TraceReport,
)
from .rootsum import RootSumProblem, contains, render_roots, solve
from .series import FactoredRational, palindrome_check

log = logging.getLogger(__name__)


def _profile(presentation: Presentation) -> AlgebraProfile:
    if presentation.profile is None:
        raise PreconditionError(
            f"{presentation.name} declares no Hilbert series and global dimension"
        )
    return presentation.profile


def _normality_part(result) -> NormalityPart:
    return NormalityPart(
        element=result.element,
        degree=result.degree,
        cutoff=result.cutoff,
        normal=result.normal,
        failed_at=result.failed_at,
        witness=result.witness,
    )


class Toolkit(WithConfig, WithFixtureSuites):
    """Entry point to the invariant-theory pipelines.

    Every method returns a report model; the degree cutoff, order cap and the
    other limits come from :attr:`config`.
    """

    def __init__(self, config: RunConfig | None = None):
        """Create a toolkit for a run configuration."""
        config = config or RunConfig()
        WithConfig.__init__(self, config)
        WithFixtureSuites.__init__(self, config)

    # input files
    def load_algebra(self, path: str | os.PathLike) -> Presentation:
        """Read a presentation file."""
        return load_presentation(
            path, conductor_limit=self.config.conductor_overflow_limit
        )

    def load_automorphisms(
        self, presentation: Presentation, paths: Iterable[str | os.PathLike]
    ) -> List[GradedAutomorphism]:
        """Read and verify the automorphisms of one or more files."""
        found: List[GradedAutomorphism] = []
        for path in paths:
            found.extend(
                load_automorphisms(
                    path,
                    presentation,
                    conductor_limit=self.config.conductor_overflow_limit,
                )
            )
        if not found:
            raise PreconditionError("no automorphism given")
        return found

    def group(self, generators: Sequence[GradedAutomorphism]) -> FiniteGroup:
        """Closure of the generators under the order cap."""
        return order_and_closure(generators, self.config.order_cap)

    # pipelines
    def hilbert(self, presentation: Presentation) -> HilbertReport:
        """Graded dimensions against the declared Hilbert series."""
        profile = _profile(presentation)
        cutoff = self.config.degree_cutoff
        check = dims_and_verify(presentation, profile, cutoff, strict=False)
        return HilbertReport(
            algebra=presentation.name,
            cutoff=cutoff,
            hilbert=profile.hilbert,
            gldim=profile.gldim,
            dims=list(check.basis.dims),
            expected=list(check.expected),
            mismatch_degree=check.mismatch_degree,
        )

    def trace(
        self, presentation: Presentation, g: GradedAutomorphism
    ) -> TraceReport:
        """Trace series, Euler polynomial and hdet of one automorphism."""
        profile = _profile(presentation)
        try:
            order: int | None = g.order(self.config.order_cap)
        except ExceedsCap:
            log.warning("order of %s exceeds the cap %d", g.name, self.config.order_cap)
            order = None
        cutoff = self.config.degree_cutoff
        trace = trace_function(
            presentation,
            profile,
            g,
            cutoff,
            order=order,
            order_bound=self.config.order_bound,
        )
        factorization = trace.factorization
        return TraceReport(
            algebra=presentation.name,
            automorphism=g.name,
            cutoff=cutoff,
            order=order,
            coefficients=list(trace.coefficients),
            euler=trace.euler,
            roots=[
                RootPart(order=r.order, exponent=r.exponent, multiplicity=m)
                for r, m in factorization.roots
            ],
            residual=factorization.residual,
            trace=trace.rational if factorization.complete else None,
            hdet=trace.hdet,
            pole_order=trace.pole_order_at_one,
            palindrome=str(palindrome_check(trace.euler).kind),
        )

    def _classification(
        self,
        presentation: Presentation,
        g: GradedAutomorphism,
        traces: Mapping[GradedAutomorphism, TraceFunction] | None = None,
    ) -> ClassificationReport:
        traces = traces or {}
        return classify(
            presentation,
            _profile(presentation),
            g,
            self.config.degree_cutoff,
            order_cap=self.config.order_cap,
            order_bound=self.config.order_bound,
            trace=traces.get(g),
            inverse_trace=traces.get(g.inverse()) if traces else None,
        )

    def _group_analysis(
        self, presentation: Presentation, group: FiniteGroup
    ) -> Tuple[List[TraceFunction], List[ClassificationReport]]:
        """Traces and classifications of every element, each trace computed once."""
        traces = group_traces(
            presentation,
            _profile(presentation),
            group,
            self.config.degree_cutoff,
            order_bound=self.config.order_bound,
        )
        by_element = dict(zip(group, traces))
        reports = [self._classification(presentation, g, by_element) for g in group]
        return traces, reports

    def _checks(
        self,
        presentation: Presentation,
        g: GradedAutomorphism,
        report: ClassificationReport,
    ) -> List[CheckPart]:
        if report.kind is ReflectionKind.MYSTIC_REFLECTION:
            mystic = mystic_consistency(
                presentation,
                _profile(presentation),
                g,
                report,
                self.config.degree_cutoff,
                self.config.normality_cutoff,
            )
            return [
                CheckPart(name=c.name, passed=c.passed, detail=c.detail)
                for c in mystic.checks
            ]
        if report.kind is ReflectionKind.REFLECTION:
            vector = reflection_vector_normality(
                presentation, g, report, self.config.normality_cutoff
            )
            return [
                CheckPart(
                    name="eigenvector_normal", passed=vector.normal, detail=str(vector)
                )
            ]
        return []

    def classify(
        self, presentation: Presentation, g: GradedAutomorphism
    ) -> ClassifyReport:
        """Classify one automorphism and run the checks of its bucket."""
        report = self._classification(presentation, g)
        trace = report.trace
        return ClassifyReport(
            algebra=presentation.name,
            automorphism=g.name,
            classification=str(report.kind),
            order=report.order,
            gkdim=report.gkdim,
            pole_order=report.pole_order_at_one,
            euler=report.euler,
            trace=trace.rational if trace.factorization.complete else None,
            hdet=report.hdet,
            xi=report.xi,
            inverse_xi=report.inverse_xi,
            eigenvalues=[
                EigenvaluePart(
                    value=r.value(), order=r.order, exponent=r.exponent, multiplicity=m
                )
                for r, m in report.eigenvalues
            ],
            case=None if report.case is None else str(report.case),
            notes=list(report.notes),
            checks=self._checks(presentation, g, report),
        )

    def molien(
        self, presentation: Presentation, generators: Sequence[GradedAutomorphism]
    ) -> MolienReport:
        """Molien series of the generated group and its fixed-ring analysis."""
        profile = _profile(presentation)
        cutoff = self.config.degree_cutoff
        group = self.group(generators)
        traces, reports = self._group_analysis(presentation, group)
        quasi = [r.name for r in reports if r.is_quasi_reflection]
        series = molien(presentation, group, cutoff, traces=traces)
        oracle = invariant_dims_oracle(presentation, group, cutoff)
        complete = all(t.factorization.complete for t in traces)
        function = molien_function(traces) if complete else None
        laurent = (
            quasi_count_laurent(profile, traces, len(quasi))
            if complete and profile.is_quantum
            else None
        )
        analysis = fixed_ring_analysis(
            series,
            profile,
            group.order,
            len(quasi),
            function=function,
            laurent=laurent,
        )
        return MolienReport(
            algebra=presentation.name,
            group=[g.name for g in group],
            group_order=group.order,
            cutoff=cutoff,
            series=list(series),
            oracle_agrees=list(series) == [CycNumber.rational(d) for d in oracle],
            status=str(analysis.status),
            message=analysis.message,
            function=function,
            euler=analysis.euler,
            q=analysis.q,
            q_at_one_ok=analysis.q_at_one_ok,
            degree_ok=analysis.degree_ok,
            quasi_reflections=quasi,
            laurent=None
            if laurent is None
            else LaurentPart(
                coefficient=laurent.coefficient,
                expected=laurent.expected,
                holds=laurent.holds,
            ),
        )

    def gate(
        self, presentation: Presentation, generators: Sequence[GradedAutomorphism]
    ) -> GateReport:
        """Regularity verdict on the fixed ring of the generated group."""
        profile = _profile(presentation)
        group = self.group(generators)
        traces, reports = self._group_analysis(presentation, group)
        verdict = regularity_gate(profile, group, reports)
        notes = list(verdict.notes)
        if group.order == 2 and reports[1].kind is ReflectionKind.REFLECTION:
            notes.extend(
                self._order_two_notes(presentation, group, reports[1], traces)
            )
        return GateReport(
            algebra=presentation.name,
            group_order=group.order,
            verdict=str(verdict.kind),
            message=verdict.message,
            quasi_reflections=list(verdict.quasi_reflections),
            notes=notes,
            hdets=[HdetPart(element=name, hdet=value) for name, value in verdict.hdets],
            gorenstein=verdict.gorenstein,
        )

    def _order_two_notes(
        self,
        presentation: Presentation,
        group: FiniteGroup,
        report: ClassificationReport,
        traces: Sequence[TraceFunction],
    ) -> List[str]:
        n = report.gkdim
        expected = FactoredRational.inverse_of([(1, n), (-1, 1)])
        series = molien(presentation, group, self.config.degree_cutoff, traces=traces)
        agrees, detail = series_agrees(series, expected, "H(A^G)")
        vector = reflection_vector_normality(
            presentation, group.elements[1], report, self.config.normality_cutoff
        )
        return [
            f"order-2 reflection: {detail}"
            if agrees
            else f"order-2 reflection, unexpected fixed ring: {detail}",
            f"(-1)-eigenvector: {vector}",
        ]

    def rootsum(
        self,
        target: int,
        count: int,
        *,
        no_minus_one: bool = False,
        no_cancelling_pair: bool = False,
        candidate: Sequence[str] | None = None,
    ) -> RootSumReport:
        """Every solution family, with an optional candidate membership test."""
        try:
            problem = RootSumProblem.create(
                target,
                count,
                no_minus_one=no_minus_one,
                no_cancelling_pair=no_cancelling_pair,
            )
        except ValueError as exc:
            raise PreconditionError(str(exc)) from exc
        families = solve(problem, self.config.rootsum_candidate_limit)
        matches = None
        if candidate is not None:
            roots = []
            for text in candidate:
                root = as_root_of_unity(parse_coefficient(text))
                if root is None:
                    raise PreconditionError(f"{text} is not a root of unity")
                roots.append(root)
            matches = [i for i, f in enumerate(families, start=1) if contains(f, roots)]
        return RootSumReport(
            problem=str(problem),
            target=target,
            count=count,
            exclusions=sorted(str(e) for e in problem.exclusions),
            families=[
                FamilyPart(
                    kind=f.kind,
                    provenance=f.provenance,
                    concrete=[str(r) for r in f.concrete],
                    templates=[render_roots(t.roots) for t in f.templates],
                    text=f.render(),
                )
                for f in families
            ],
            candidate=None if candidate is None else list(candidate),
            candidate_matches=matches,
        )

    def examples(self, names: Sequence[str] = ()) -> ExamplesReport:
        """Run the selected fixture suites, or every loaded suite."""
        if names:
            try:
                suites = [self.suites.require(FixtureSuite, name) for name in names]
            except AttributeError as exc:
                raise PreconditionError(str(exc)) from exc
        else:
            suites = list(self.suites.values())
        parts = []
        for suite in suites:
            log.info("running fixture suite %s", suite.name)
            parts.append(
                SuitePart(
                    name=suite.name,
                    title=suite.title,
                    checks=[
                        FixtureCheckPart(
                            name=o.name,
                            claim=o.claim,
                            passed=o.passed,
                            detail=o.detail,
                            divergences=list(o.divergences),
                        )
                        for o in suite.run()
                    ],
                )
            )
        return ExamplesReport(suites=parts)

    def normal(
        self,
        presentation: Presentation,
        elements: Sequence[str] = (),
        candidates: Sequence[str] = (),
        automorphisms: Sequence[GradedAutomorphism] = (),
    ) -> NormalReport:
        """Normality of elements and the normal-square search over candidates."""
        cutoff = self.config.normality_cutoff
        results = [
            _normality_part(normality_check(presentation, e, cutoff)) for e in elements
        ]
        rigidity = None
        if candidates or automorphisms:
            verdict = rigidity_verdict(
                presentation,
                candidates,
                cutoff,
                automorphisms=automorphisms,
                order_cap=self.config.order_cap,
            )
            rigidity = RigidityPart(
                candidates=[
                    CandidatePart(
                        element=c.element,
                        normal=c.normal.normal,
                        square_normal=c.square.normal,
                    )
                    for c in verdict.checks
                ],
                notes=list(verdict.notes),
                hypothesis_fails=verdict.hypothesis_fails,
                message=verdict.message,
            )
        return NormalReport(
            algebra=presentation.name, cutoff=cutoff, results=results, rigidity=rigidity
        )

    def profile(self, action: str, name: str | None = None) -> ProfileReport:
        """List, show, save or delete stored configuration profiles."""
        if action == "list":
            return ProfileReport(action=action, profiles=RunConfig.list_profiles())
        profile = name or self.config.profile
        if action == "show":
            config = RunConfig.load(profile)
            return ProfileReport(
                action=action, profile=profile, settings=config.to_dict()
            )
        if action == "save":
            config = RunConfig.from_dict(self.config.to_dict(), profile=profile)
            return ProfileReport(
                action=action,
                profile=profile,
                location=config.save(),
                settings=config.to_dict(),
            )
        if action == "delete":
            return ProfileReport(
                action=action, profile=profile, location=RunConfig.delete(profile)
            )
        raise PreconditionError(f"unknown profile action '{action}'")

    def __repr__(self):
        """Get a technical string representation of this instance."""
        return (
            f"<{self.__class__.__name__}("
            f"suites=[{','.join(self._suites.keys())}],"
            f"config={self.config}"
            ")>"
        )

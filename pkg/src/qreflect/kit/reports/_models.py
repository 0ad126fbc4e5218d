"""Report documents produced by the toolkit pipelines.

Cyclotomic numbers, polynomials and rational functions are serialized as
strings of the coefficient grammar and parse back to the exact same values.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel as PydanticBaseModel
from pydantic import (
    ConfigDict,
    Field,
    PlainSerializer,
    PlainValidator,
    TypeAdapter,
    WithJsonSchema,
    field_validator,
)
from typing_extensions import Annotated, Self

from ..cyclotomic import CycNumber, format_coefficient, parse_coefficient
from ..series import FactoredRational, Poly, parse_series

SCHEMA_VERSION = 1


def _parse_coefficient(value: Any) -> CycNumber:
    if isinstance(value, CycNumber):
        return value
    if isinstance(value, str):
        return parse_coefficient(value)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return CycNumber.coerce(value)
    raise ValueError(f"not a cyclotomic coefficient: {value!r}")


def _parse_rational(value: Any) -> FactoredRational:
    if isinstance(value, FactoredRational):
        return value
    if isinstance(value, str):
        return parse_series(value)
    raise ValueError(f"not a rational function of t: {value!r}")


def _parse_poly(value: Any) -> Poly:
    if isinstance(value, Poly):
        return value
    function = _parse_rational(value)
    if function.denom_factors:
        raise ValueError(f"not a polynomial in t: {value!r}")
    return function.numerator


Coefficient = Annotated[
    CycNumber,
    PlainValidator(_parse_coefficient),
    PlainSerializer(format_coefficient, return_type=str),
    WithJsonSchema({"type": "string", "description": "cyclotomic number"}),
]
PolyValue = Annotated[
    Poly,
    PlainValidator(_parse_poly),
    PlainSerializer(str, return_type=str),
    WithJsonSchema({"type": "string", "description": "polynomial in t"}),
]
RationalValue = Annotated[
    FactoredRational,
    PlainValidator(_parse_rational),
    PlainSerializer(str, return_type=str),
    WithJsonSchema({"type": "string", "description": "rational function of t"}),
]


def _flag(passed: bool | None) -> str:
    return "PASS" if passed else "FAIL"


def _series_text(values: List[CycNumber]) -> str:
    return ", ".join(format_coefficient(v) for v in values)


class ReportPart(PydanticBaseModel):
    """Nested part of a report."""

    model_config = ConfigDict(arbitrary_types_allowed=True, extra="forbid")


class ReportModel(ReportPart):
    """Versioned report document.

    Adds the ``to_dict``/``from_dict`` and ``to_json``/``from_json`` conversions
    and a plain-text rendering carrying the same data.
    """

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    kind: str

    @field_validator("schema_version")
    @classmethod
    def _known_schema(cls, value: int) -> int:
        if value != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {value}")
        return value

    @property
    def succeeded(self) -> bool:
        """Whether every check carried by the report passed."""
        return True

    def render_text(self) -> str:
        """Human-readable rendering."""
        raise NotImplementedError

    def to_dict(self) -> Dict[str, Any]:
        """Convert the report to a json-compatible dict."""
        return self.model_dump(mode="json", by_alias=True, exclude_none=True)

    def to_json(self) -> str:
        """Convert the report to a JSON-encoded string."""
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2)

    @classmethod
    def from_dict(cls, obj: dict) -> Self:
        """Create a report from a dict."""
        return cls.model_validate(obj)

    @classmethod
    def from_json(cls, json_data: str | bytes | bytearray) -> Self:
        """Create a report from a JSON-encoded string."""
        return cls.model_validate_json(json_data)


class HilbertReport(ReportModel):
    """Graded dimensions against the declared Hilbert series."""

    kind: Literal["hilbert"] = "hilbert"
    algebra: str
    cutoff: int
    hilbert: RationalValue
    gldim: int
    dims: List[int]
    expected: List[Coefficient]
    mismatch_degree: Optional[int] = None

    @property
    def succeeded(self) -> bool:
        """Whether every degree agrees."""
        return self.mismatch_degree is None

    def render_text(self) -> str:
        """Render the dimension table."""
        lines = [f"algebra {self.algebra}: hilbert {self.hilbert}, gldim {self.gldim}"]
        lines.append("degree  dim  expected")
        for degree, (dim, value) in enumerate(zip(self.dims, self.expected)):
            lines.append(f"{degree:>6}  {dim:>3}  {format_coefficient(value)}")
        if self.succeeded:
            lines.append(f"PASS dimensions agree through degree {self.cutoff}")
        else:
            lines.append(f"FAIL dimensions disagree in degree {self.mismatch_degree}")
        return "\n".join(lines)


class RootPart(ReportPart):
    """A root of unity ``zeta(order, exponent)`` with its multiplicity."""

    order: int
    exponent: int
    multiplicity: int = 1

    def __str__(self) -> str:
        """Render as ``zeta(order,exponent)^multiplicity``."""
        root = f"zeta({self.order},{self.exponent})"
        return root if self.multiplicity == 1 else f"{root}^{self.multiplicity}"


class TraceReport(ReportModel):
    """Trace series of one automorphism with its Euler polynomial."""

    kind: Literal["trace"] = "trace"
    algebra: str
    automorphism: str
    cutoff: int
    order: Optional[int] = None
    coefficients: List[Coefficient]
    euler: PolyValue
    roots: List[RootPart] = Field(default_factory=list)
    residual: PolyValue
    trace: Optional[RationalValue] = None
    hdet: Coefficient
    pole_order: int
    palindrome: str

    def render_text(self) -> str:
        """Render the trace, the Euler polynomial and hdet."""
        lines = [
            f"{self.automorphism} on {self.algebra}"
            + (f" (order {self.order})" if self.order else ""),
            f"tr(g|A_i), i <= {self.cutoff}: {_series_text(self.coefficients)}",
            f"e_g = {self.euler} ({self.palindrome})",
        ]
        if self.trace is not None:
            lines.append(f"Tr = {self.trace}")
        else:
            lines.append(f"no root-of-unity factorization of {self.residual}")
        lines.append(f"pole order at t = 1: {self.pole_order}")
        lines.append(f"hdet = {format_coefficient(self.hdet)}")
        return "\n".join(lines)


class EigenvaluePart(ReportPart):
    """Degree-1 eigenvalue with its multiplicity."""

    value: Coefficient
    order: int
    exponent: int
    multiplicity: int


class CheckPart(ReportPart):
    """A named sub-check with its witness."""

    name: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        """Render as ``PASS name: detail``."""
        return f"{_flag(self.passed)} {self.name}: {self.detail}"


class ClassifyReport(ReportModel):
    """Classification of one automorphism with its consistency checks."""

    kind: Literal["classify"] = "classify"
    algebra: str
    automorphism: str
    classification: str
    order: Optional[int] = None
    gkdim: int
    pole_order: int
    euler: PolyValue
    trace: Optional[RationalValue] = None
    hdet: Coefficient
    xi: Optional[Coefficient] = None
    inverse_xi: Optional[Coefficient] = None
    eigenvalues: List[EigenvaluePart] = Field(default_factory=list)
    case: Optional[str] = None
    notes: List[str] = Field(default_factory=list)
    checks: List[CheckPart] = Field(default_factory=list)

    @property
    def succeeded(self) -> bool:
        """Whether every consistency check passed."""
        return all(c.passed for c in self.checks)

    def render_text(self) -> str:
        """Render the classification and its checks."""
        head = [self.classification]
        if self.xi is not None:
            head.append(f"xi = {format_coefficient(self.xi)}")
        head.append(f"order {self.order}" if self.order else "order exceeds cap")
        lines = [f"{self.automorphism}: {', '.join(head)}"]
        if self.trace is not None:
            lines.append(f"Tr = {self.trace}")
        lines.append(
            f"e_g = {self.euler}, pole order {self.pole_order} of {self.gkdim}"
        )
        lines.append(f"hdet = {format_coefficient(self.hdet)}")
        if self.eigenvalues:
            lines.append(
                "eigenvalues: "
                + ", ".join(
                    f"{format_coefficient(e.value)} (x{e.multiplicity})"
                    for e in self.eigenvalues
                )
            )
        if self.case is not None:
            lines.append(f"eigenvalue case: {self.case}")
        lines.extend(f"note: {n}" for n in self.notes)
        lines.extend(str(c) for c in self.checks)
        return "\n".join(lines)


class LaurentPart(ReportPart):
    """Laurent coefficient of ``(1 − t)^{−(n−1)}`` against ``r/(2|G|)``."""

    coefficient: Coefficient
    expected: Coefficient
    holds: bool


class MolienReport(ReportModel):
    """Molien series of a group and the fixed-ring reconstruction."""

    kind: Literal["molien"] = "molien"
    algebra: str
    group: List[str]
    group_order: int
    cutoff: int
    series: List[Coefficient]
    oracle_agrees: bool
    status: str
    message: str
    function: Optional[RationalValue] = None
    euler: Optional[PolyValue] = None
    q: Optional[PolyValue] = None
    q_at_one_ok: Optional[bool] = None
    degree_ok: Optional[bool] = None
    quasi_reflections: List[str] = Field(default_factory=list)
    laurent: Optional[LaurentPart] = None

    @property
    def succeeded(self) -> bool:
        """Whether the oracle, ``q(1)``, ``deg q`` and Laurent checks hold."""
        flags = [self.oracle_agrees, self.q_at_one_ok, self.degree_ok]
        if self.laurent is not None:
            flags.append(self.laurent.holds)
        return all(f is not False for f in flags)

    def render_text(self) -> str:
        """Render the series, the closed form and the checks."""
        lines = [
            f"|G| = {self.group_order} on {self.algebra}: {', '.join(self.group)}",
            f"dim (A^G)_i, i <= {self.cutoff}: {_series_text(self.series)}",
            f"{_flag(self.oracle_agrees)} averaging operator ranks agree",
        ]
        if self.function is not None:
            lines.append(f"H_(A^G) = {self.function}")
        lines.append(f"{self.status}: {self.message}")
        if self.q_at_one_ok is not None:
            lines.append(f"{_flag(self.q_at_one_ok)} q(1) = |G| p(1)")
        if self.degree_ok is not None:
            lines.append(
                f"{_flag(self.degree_ok)} deg q = {len(self.quasi_reflections)} "
                "quasi-reflections"
            )
        if self.laurent is not None:
            lines.append(
                f"{_flag(self.laurent.holds)} Laurent coefficient "
                f"{format_coefficient(self.laurent.coefficient)} = r/(2|G|) = "
                f"{format_coefficient(self.laurent.expected)}"
            )
        return "\n".join(lines)


class HdetPart(ReportPart):
    """Homological determinant of one group element."""

    element: str
    hdet: Coefficient


class GateReport(ReportModel):
    """Regularity verdict on a fixed ring."""

    kind: Literal["gate"] = "gate"
    algebra: str
    group_order: int
    verdict: str
    message: str
    quasi_reflections: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    hdets: List[HdetPart] = Field(default_factory=list)
    gorenstein: bool

    def render_text(self) -> str:
        """Render the verdict, the notes and the determinants."""
        lines = [f"{self.verdict}: {self.message}"]
        lines.extend(f"note: {n}" for n in self.notes)
        lines.append(
            "hdet: "
            + ", ".join(
                f"{h.element} -> {format_coefficient(h.hdet)}" for h in self.hdets
            )
        )
        return "\n".join(lines)


class FamilyPart(ReportPart):
    """A solution family of a root-sum problem."""

    kind: str
    provenance: str
    concrete: List[str] = Field(default_factory=list)
    templates: List[str] = Field(default_factory=list)
    text: str


class RootSumReport(ReportModel):
    """Every solution family of a root-sum problem."""

    kind: Literal["rootsum"] = "rootsum"
    problem: str
    target: int
    count: int
    exclusions: List[str] = Field(default_factory=list)
    families: List[FamilyPart] = Field(default_factory=list)
    candidate: Optional[List[str]] = None
    candidate_matches: Optional[List[int]] = None

    @property
    def succeeded(self) -> bool:
        """Whether a supplied candidate lies in some family."""
        return self.candidate is None or bool(self.candidate_matches)

    def render_text(self) -> str:
        """Render the families, one per line."""
        lines = [self.problem]
        if not self.families:
            lines.append("no solutions")
        for number, family in enumerate(self.families, start=1):
            lines.append(f"{number}. [{family.provenance}] {family.text}")
        if self.candidate is not None:
            found = ", ".join(str(m) for m in self.candidate_matches or [])
            lines.append(
                f"{_flag(bool(self.candidate_matches))} candidate "
                f"{' + '.join(self.candidate)}"
                + (f" lies in family {found}" if found else " lies in no family")
            )
        return "\n".join(lines)


class FixtureCheckPart(ReportPart):
    """Outcome of one fixture check with the claim it verifies."""

    name: str
    claim: str
    passed: bool
    detail: str = ""
    divergences: List[str] = Field(default_factory=list)


class SuitePart(ReportPart):
    """Outcomes of one fixture suite."""

    name: str
    title: str
    checks: List[FixtureCheckPart] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return all(c.passed for c in self.checks)


class ExamplesReport(ReportModel):
    """Outcomes of every loaded fixture suite."""

    kind: Literal["examples"] = "examples"
    suites: List[SuitePart] = Field(default_factory=list)

    @property
    def succeeded(self) -> bool:
        """Whether every suite passed."""
        return all(s.passed for s in self.suites)

    def render_text(self) -> str:
        """Render ``PASS``/``FAIL`` per check."""
        lines = []
        for suite in self.suites:
            lines.append(f"== {suite.name}: {suite.title}")
            for check in suite.checks:
                lines.append(f"{_flag(check.passed)} {check.name}: {check.claim}")
                if check.detail and not check.passed:
                    lines.append(f"     {check.detail}")
                lines.extend(f"     DIVERGENCE {d}" for d in check.divergences)
        total = sum(len(s.checks) for s in self.suites)
        failed = sum(not c.passed for s in self.suites for c in s.checks)
        lines.append(f"{total - failed}/{total} checks passed")
        return "\n".join(lines)


class NormalityPart(ReportPart):
    """Degree-truncated normality verdict."""

    element: str
    degree: int
    cutoff: int
    normal: bool
    failed_at: Optional[int] = None
    witness: Optional[str] = None

    def __str__(self) -> str:
        """Describe the verdict and its scope."""
        if self.normal:
            return f"{self.element} is normal (verified to degree {self.cutoff})"
        return (
            f"{self.element} is not normal: degree {self.failed_at} "
            f"fails at word {self.witness}"
        )


class CandidatePart(ReportPart):
    """Normality of a rigidity candidate and of its square."""

    element: str
    normal: bool
    square_normal: bool


class RigidityPart(ReportPart):
    """Normal-square search over the candidates."""

    candidates: List[CandidatePart] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    hypothesis_fails: bool
    message: str


class NormalReport(ReportModel):
    """Normality checks and the optional rigidity verdict."""

    kind: Literal["normal"] = "normal"
    algebra: str
    cutoff: int
    results: List[NormalityPart] = Field(default_factory=list)
    rigidity: Optional[RigidityPart] = None

    def render_text(self) -> str:
        """Render one verdict per element."""
        lines = [str(r) for r in self.results]
        if self.rigidity is not None:
            for c in self.rigidity.candidates:
                square = "normal" if c.square_normal else "not normal"
                lines.append(f"candidate {c.element}: square {square}")
            lines.extend(f"note: {n}" for n in self.rigidity.notes)
            lines.append(self.rigidity.message)
        return "\n".join(lines)


class ProfileReport(ReportModel):
    """Stored configuration profiles."""

    kind: Literal["profile"] = "profile"
    action: str
    profile: Optional[str] = None
    location: Optional[str] = None
    settings: Optional[Dict[str, Any]] = None
    profiles: Optional[Dict[str, str]] = None

    def render_text(self) -> str:
        """Render the profile listing or settings."""
        lines = []
        if self.profiles is not None:
            lines.extend(f"{name}: {path}" for name, path in self.profiles.items())
            if not self.profiles:
                lines.append("no stored profiles")
        if self.settings is not None:
            lines.append(f"profile {self.profile}")
            lines.extend(f"  {k} = {v}" for k, v in self.settings.items())
        if self.location is not None:
            lines.append(f"{self.action} {self.profile}: {self.location}")
        return "\n".join(lines)


AnyReport = Annotated[
    Union[
        HilbertReport,
        TraceReport,
        ClassifyReport,
        MolienReport,
        GateReport,
        RootSumReport,
        ExamplesReport,
        NormalReport,
        ProfileReport,
    ],
    Field(discriminator="kind"),
]

_REPORT_ADAPTER: TypeAdapter[AnyReport] = TypeAdapter(AnyReport)


def load_report(json_data: str | bytes | bytearray) -> ReportModel:
    """Decode any report document by its ``kind``."""
    return _REPORT_ADAPTER.validate_json(json_data)

"""Test report documents."""

import json

import pytest
from pydantic import ValidationError
from typeguard import check_type

from qreflect.kit import Fixture, FixtureSuite
from qreflect.kit.cyclotomic import CycNumber
from qreflect.kit.reports import (
    SCHEMA_VERSION,
    ExamplesReport,
    FixtureCheckPart,
    RootSumReport,
    SuitePart,
    TraceReport,
    load_report,
)
from qreflect.kit.series import Poly


def test_trace_report_round_trip(toolkit, skew_square, mystic):
    report = toolkit.trace(skew_square, mystic)
    data = report.to_dict()
    assert data["schema"] == SCHEMA_VERSION
    assert data["kind"] == "trace"
    assert data["hdet"] == "-1"
    loaded = load_report(report.to_json())
    check_type(loaded, TraceReport)
    assert loaded.trace.expand(10) == report.trace.expand(10)
    assert loaded.coefficients == report.coefficients
    assert loaded.roots == report.roots
    assert loaded.hdet == CycNumber.rational(-1)
    assert loaded.euler == Poly([1, 0, -1])
    assert TraceReport.from_dict(data).hdet == report.hdet
    decoded = TraceReport.from_json(json.dumps(data))
    assert decoded.order == report.order == 4
    assert "hdet = -1" in decoded.render_text()


def test_none_fields_are_dropped():
    report = RootSumReport(problem="p", target=1, count=2)
    data = report.to_dict()
    assert "candidate" not in data
    assert data == {
        "schema": SCHEMA_VERSION,
        "kind": "rootsum",
        "problem": "p",
        "target": 1,
        "count": 2,
        "exclusions": [],
        "families": [],
    }
    assert report.succeeded
    assert report.render_text() == "p\nno solutions"


@pytest.mark.parametrize(
    "document",
    [
        {"schema": SCHEMA_VERSION + 1, "kind": "rootsum", "problem": "p",
         "target": 1, "count": 2},
        {"schema": SCHEMA_VERSION, "kind": "unknown"},
        {"schema": SCHEMA_VERSION, "kind": "rootsum", "problem": "p",
         "target": 1, "count": 2, "extra": True},
    ],
)
def test_invalid_documents(document):
    with pytest.raises(ValidationError):
        load_report(json.dumps(document))


def test_coefficients_accept_numbers_and_grammar():
    data = {
        "schema": SCHEMA_VERSION,
        "kind": "trace",
        "algebra": "a",
        "automorphism": "g",
        "cutoff": 2,
        "coefficients": [1, "-1", "zeta(4,1)"],
        "euler": "1 + t",
        "residual": "1",
        "hdet": -1,
        "pole_order": 0,
        "palindrome": "palindrome",
    }
    report = TraceReport.from_dict(data)
    assert report.coefficients[2] == CycNumber.zeta(4, 1)
    assert report.hdet == CycNumber.rational(-1)
    assert report.to_dict()["coefficients"] == ["1", "-1", "i"]
    with pytest.raises(ValidationError):
        TraceReport.from_dict({**data, "hdet": True})
    with pytest.raises(ValidationError):
        TraceReport.from_dict({**data, "euler": "1/(1 - t)"})


def test_examples_report():
    report = ExamplesReport(
        suites=[
            SuitePart(
                name="s",
                title="Suite",
                checks=[
                    FixtureCheckPart(name="a", claim="holds", passed=True),
                    FixtureCheckPart(
                        name="b", claim="fails", passed=False, detail="why"
                    ),
                ],
            )
        ]
    )
    assert not report.succeeded
    assert report.render_text().splitlines() == [
        "== s: Suite",
        "PASS a: holds",
        "FAIL b: fails",
        "     why",
        "1/2 checks passed",
    ]


class ListedSuite(FixtureSuite):
    """Suite with a fixture that goes beyond its reference list."""

    name = "listed_suite"
    title = "Reference Lists"

    def checks(self):
        """Fixtures with and without divergences."""
        yield Fixture("listed", "covers the list", lambda: (True, "a, b", ("b",)))
        yield Fixture("plain", "holds", lambda: (True, "ok"))


def test_examples_report_divergences(toolkit):
    listed, plain = ListedSuite(toolkit.config).run()
    assert listed.passed
    assert listed.divergences == ("b",)
    assert plain.divergences == ()
    toolkit.register(ListedSuite)
    report = toolkit.examples(["listed_suite"])
    assert report.succeeded
    assert report.suites[0].checks[0].divergences == ["b"]
    assert report.to_dict()["suites"][0]["checks"][0]["divergences"] == ["b"]
    assert report.render_text().splitlines() == [
        "== listed_suite: Reference Lists",
        "PASS listed: covers the list",
        "     DIVERGENCE b",
        "PASS plain: holds",
        "2/2 checks passed",
    ]

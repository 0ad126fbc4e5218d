"""Versioned report documents."""

from ._models import (
    SCHEMA_VERSION,
    AnyReport,
    CandidatePart,
    CheckPart,
    ClassifyReport,
    Coefficient,
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
    PolyValue,
    ProfileReport,
    RationalValue,
    ReportModel,
    ReportPart,
    RigidityPart,
    RootPart,
    RootSumReport,
    SuitePart,
    TraceReport,
    load_report,
)

__all__ = [
    "SCHEMA_VERSION",
    "Coefficient",
    "PolyValue",
    "RationalValue",
    "ReportPart",
    "ReportModel",
    "AnyReport",
    "load_report",
    "HilbertReport",
    "RootPart",
    "TraceReport",
    "EigenvaluePart",
    "CheckPart",
    "ClassifyReport",
    "LaurentPart",
    "MolienReport",
    "HdetPart",
    "GateReport",
    "FamilyPart",
    "RootSumReport",
    "FixtureCheckPart",
    "SuitePart",
    "ExamplesReport",
    "NormalityPart",
    "CandidatePart",
    "RigidityPart",
    "NormalReport",
    "ProfileReport",
]

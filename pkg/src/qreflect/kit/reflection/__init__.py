"""Classification of graded automorphisms and rigidity checks."""

from .classify import (
    DEFAULT_ORDER_CAP,
    ClassificationReport,
    EigenCase,
    ReflectionKind,
    classify,
    eigen_case,
    reflection_vector_normality,
)
from .downup import DOWN_UP_HILBERT, DownUpReport, Elimination, downup_filter
from .eigen import (
    Eigenvalues,
    eigen_structure,
    eigenvectors,
    fixed_dimension,
    non_trivial,
)
from .mystic import Check, MysticCheck, mystic_consistency
from .rees import (
    ReesGroupReport,
    ReesReport,
    rees_classify,
    rees_group,
    translation_shape,
)
from .rigidity import CandidateCheck, RigidityVerdict, rigidity_verdict

__all__ = [
    "DEFAULT_ORDER_CAP",
    "ReflectionKind",
    "EigenCase",
    "ClassificationReport",
    "classify",
    "eigen_case",
    "reflection_vector_normality",
    "Eigenvalues",
    "eigen_structure",
    "eigenvectors",
    "fixed_dimension",
    "non_trivial",
    "Check",
    "MysticCheck",
    "mystic_consistency",
    "CandidateCheck",
    "RigidityVerdict",
    "rigidity_verdict",
    "DOWN_UP_HILBERT",
    "Elimination",
    "DownUpReport",
    "downup_filter",
    "ReesReport",
    "ReesGroupReport",
    "rees_classify",
    "rees_group",
    "translation_shape",
]

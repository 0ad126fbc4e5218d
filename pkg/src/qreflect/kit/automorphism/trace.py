"""Trace series, Euler polynomials and homological determinants."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from ..algebra import AlgebraProfile, Presentation
from ..cyclotomic import ONE, CycNumber
from ..exceptions import NonUnityRoot, PreconditionError
from ..series import (
    CyclotomicFactorization,
    FactoredRational,
    Poly,
    cyclotomic_factorization,
    reconstruct_rational,
)
from .model import GradedAutomorphism

log = logging.getLogger(__name__)


def trace_series(
    presentation: Presentation, g: GradedAutomorphism, cutoff: int
) -> List[CycNumber]:
    """``tr(g | A_i)`` for ``i = 0..cutoff``."""
    if g.presentation is not presentation:
        raise PreconditionError(f"{g.name} does not act on {presentation.name}")
    action = g.action(presentation.rewriting(cutoff))
    coefficients = [action.trace(i) for i in range(cutoff + 1)]
    log.debug("trace of %s: %s", g.name, ", ".join(map(str, coefficients)))
    return coefficients


@dataclass(frozen=True)
class TraceFunction:
    """Trace series with its reconstructed Euler polynomial."""

    coefficients: Tuple[CycNumber, ...]
    euler: Poly
    factorization: CyclotomicFactorization
    hdet: CycNumber

    @property
    def euler_degree(self) -> int:
        """Degree ``l`` of the Euler polynomial, the top degree at infinity."""
        return self.euler.degree

    @property
    def rational(self) -> FactoredRational:
        """``1/e_g`` with factored denominator; needs a complete factorization."""
        return self.factorization.as_rational()

    @property
    def pole_order_at_one(self) -> int:
        """Multiplicity of the root 1 of the Euler polynomial."""
        value, order = self.euler, 0
        while value.degree >= 1:
            quotient, remainder = value.divide_linear(1)
            if remainder:
                break
            value, order = quotient, order + 1
        return order


def euler_polynomial(
    presentation: Presentation,
    profile: AlgebraProfile,
    g: GradedAutomorphism,
    cutoff: int,
    *,
    order: int | None = None,
    order_bound: int | None = None,
    coefficients: Iterable[CycNumber] | None = None,
) -> Tuple[Poly, CyclotomicFactorization]:
    """Reconstruct ``e_g`` with ``Tr(g, t) = 1/e_g`` and certify its roots.

    The degree is that of the profile's Euler polynomial and every trace
    coefficient through ``cutoff`` is checked. For ``g`` of known finite
    ``order`` a root that is no root of unity raises :class:`NonUnityRoot`.
    """
    degree = profile.euler_degree
    if cutoff < 2 * degree:
        raise PreconditionError(
            f"cutoff {cutoff} is below twice the Euler degree {degree}"
        )
    series = list(coefficients) if coefficients is not None else trace_series(
        presentation, g, cutoff
    )
    euler = reconstruct_rational(series, degree, cutoff)
    factorization = cyclotomic_factorization(euler, order_bound, order)
    if not factorization.complete and order is not None:
        raise NonUnityRoot(
            f"Euler polynomial {euler} of {g.name} keeps the factor "
            f"{factorization.residual} without root-of-unity roots"
        )
    return euler, factorization


def hdet(euler: Poly, gldim: int) -> CycNumber:
    """Homological determinant ``(−1)^gldim · lead(e_g)``."""
    return euler.leading * (-1) ** gldim


def trace_function(
    presentation: Presentation,
    profile: AlgebraProfile,
    g: GradedAutomorphism,
    cutoff: int,
    *,
    order: int | None = None,
    order_bound: int | None = None,
) -> TraceFunction:
    """Trace series, Euler polynomial and hdet of ``g``."""
    series = trace_series(presentation, g, cutoff)
    euler, factorization = euler_polynomial(
        presentation,
        profile,
        g,
        cutoff,
        order=order,
        order_bound=order_bound,
        coefficients=series,
    )
    return TraceFunction(
        tuple(series), euler, factorization, hdet(euler, profile.gldim)
    )


def gorenstein_flag(hdets: Iterable[CycNumber]) -> bool:
    """Whether every homological determinant is 1."""
    return all(h == ONE for h in hdets)

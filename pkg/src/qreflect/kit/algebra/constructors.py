"""Constructors for the algebra families used by the worked examples."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Literal, Mapping, Sequence

from ..cyclotomic import CycNumber
from ..exceptions import JacobiError, OreExtensionError
from ..series import FactoredRational
from .presentation import AlgebraProfile, ElementLike, Generator, Presentation
from .words import NCPoly, Scalar

if TYPE_CHECKING:
    from ..automorphism import GradedAutomorphism

log = logging.getLogger(__name__)

OreSide = Literal["left", "right"]


def free_algebra(names: Sequence[str], name: str = "free") -> Presentation:
    """Free algebra on degree-1 generators."""
    return Presentation(name, tuple(Generator(n) for n in names))


def polynomial_ring(names: Sequence[str], name: str = "poly") -> Presentation:
    """Commutative polynomial ring on degree-1 generators."""
    gens = tuple(Generator(n) for n in names)
    relations = tuple(
        NCPoly.word((i, j)) - NCPoly.word((j, i))
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
    )
    profile = AlgebraProfile.quantum(len(gens))
    return Presentation(name, gens, relations, profile=profile)


def quantum_plane(q: Scalar, name: str | None = None) -> Presentation:
    """The skew plane ``k_q[x, y]`` with ``x·y = q·y·x``."""
    q = CycNumber.coerce(q)
    relation = NCPoly.word((0, 1)) - NCPoly.word((1, 0), q)
    return Presentation(
        name or f"quantum_plane({q})",
        (Generator("x"), Generator("y")),
        (relation,),
        profile=AlgebraProfile.quantum(2),
    )


def ore_extension(
    presentation: Presentation,
    sigma: GradedAutomorphism | None = None,
    delta: Mapping[str, ElementLike] | None = None,
    new_gen_degree: int = 1,
    name: str = "b",
    *,
    side: OreSide = "left",
    algebra_name: str | None = None,
) -> Presentation:
    """Adjoin a generator ``b`` with skew commutation relations.

    ``side="left"`` gives ``b·c = σ(c)·b + δ(c)``, ``side="right"`` gives
    ``c·b = b·σ(c) + δ(c)``, for every generator ``c``. ``sigma`` must be a
    verified automorphism of ``presentation`` (identity when omitted). The new
    generator is the largest in the monomial order.
    """
    if sigma is not None and sigma.presentation is not presentation:
        raise OreExtensionError(
            "sigma is not an automorphism of the given presentation"
        )
    if side not in ("left", "right"):
        raise OreExtensionError(f"unknown side {side!r}")
    if name in presentation.names:
        raise OreExtensionError(f"generator {name!r} already exists")
    delta = dict(delta or {})
    unknown = set(delta) - set(presentation.names)
    if unknown:
        raise OreExtensionError(f"delta given on unknown generators {sorted(unknown)}")
    generators = presentation.generators + (Generator(name, new_gen_degree),)
    new = NCPoly.generator(len(presentation.generators))
    relations = list(presentation.relations)
    for j, gen in enumerate(presentation.generators):
        c = NCPoly.generator(j)
        image = sigma.apply(c) if sigma is not None else c
        derivation = presentation.element(delta.get(gen.name, "0"))
        if derivation:
            degrees = derivation.degrees(presentation.weights)
            if degrees != {gen.degree + new_gen_degree}:
                raise OreExtensionError(
                    f"delta({gen.name}) = {presentation.render(derivation)} is not "
                    f"homogeneous of degree {gen.degree + new_gen_degree}"
                )
        if side == "left":
            relations.append(new * c - image * new - derivation)
        else:
            relations.append(c * new - new * image - derivation)
    ranking = (name,) + (presentation.order or presentation.names)
    profile = None
    if presentation.profile is not None:
        extra = FactoredRational.inverse_of(
            (CycNumber.zeta(new_gen_degree, k), 1) for k in range(new_gen_degree)
        )
        profile = AlgebraProfile(
            presentation.profile.gldim + 1, presentation.profile.hilbert * extra
        )
    result = Presentation(
        algebra_name or f"{presentation.name}[{name}]",
        generators,
        tuple(relations),
        ranking,
        profile,
    )
    log.debug("ore extension %s: %d relations", result.name, len(relations))
    return result


def _lie_bracket_table(
    constants: Sequence[Sequence[Sequence[Scalar]]], n: int
) -> list[list[list[CycNumber]]]:
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = [CycNumber.coerce(c) for c in constants[i][j]]
            if len(entry) != n:
                raise JacobiError(
                    f"bracket [{i},{j}] has {len(entry)} entries, expected {n}"
                )
            row.append(entry)
        table.append(row)
    return table


def homogenize_lie(
    constants: Sequence[Sequence[Sequence[Scalar]]],
    names: Sequence[str],
    central: str = "z",
    name: str = "H(g)",
) -> Presentation:
    """Homogenized enveloping algebra of a Lie algebra.

    ``constants[i][j][k]`` is the coefficient of ``b_k`` in ``[b_i, b_j]``.
    Relations are ``b_i·z = z·b_i`` and ``b_i·b_j − b_j·b_i = Σ_k c_ij^k b_k·z``.
    """
    n = len(names)
    if len(constants) != n or any(len(row) != n for row in constants):
        raise JacobiError(f"structure constants must form a {n}×{n}×{n} array")
    c = _lie_bracket_table(constants, n)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if c[i][j][k] != -c[j][i][k]:
                    raise JacobiError(
                        "structure constants are not antisymmetric "
                        f"at [{names[i]},{names[j]}]"
                    )
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for m in range(n):
                    total = CycNumber()
                    for l in range(n):  # noqa: E741
                        total = (
                            total
                            + c[i][j][l] * c[l][k][m]
                            + c[j][k][l] * c[l][i][m]
                            + c[k][i][l] * c[l][j][m]
                        )
                    if total:
                        raise JacobiError(
                            "Jacobi identity fails for "
                            f"({names[i]}, {names[j]}, {names[k]})"
                        )
    generators = tuple(Generator(x) for x in names) + (Generator(central),)
    z = NCPoly.generator(n)
    relations = []
    for i in range(n):
        b = NCPoly.generator(i)
        relations.append(b * z - z * b)
    for i in range(n):
        for j in range(i + 1, n):
            bi, bj = NCPoly.generator(i), NCPoly.generator(j)
            bracket = NCPoly(
                {(k, n): c[i][j][k] for k in range(n) if c[i][j][k]}
            )
            relations.append(bi * bj - bj * bi - bracket)
    return Presentation(
        name, generators, tuple(relations), profile=AlgebraProfile.quantum(n + 1)
    )


def rees_weyl(n: int) -> Presentation:
    """Rees ring of the Weyl algebra: ``x_i·y_i − y_i·x_i = z²``, all else commuting."""
    if n < 1:
        raise ValueError("the Weyl algebra needs n >= 1")
    if n == 1:
        pairs = [("x", "y")]
    else:
        pairs = [(f"x{i}", f"y{i}") for i in range(1, n + 1)]
    names = [v for pair in pairs for v in pair] + ["z"]
    z = len(names) - 1
    relations = []
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            commutator = NCPoly.word((a, b)) - NCPoly.word((b, a))
            if b == a + 1 and a % 2 == 0 and b != z:
                commutator = commutator - NCPoly.word((z, z))
            relations.append(commutator)
    return Presentation(
        f"rees_weyl({n})",
        tuple(Generator(x) for x in names),
        tuple(relations),
        profile=AlgebraProfile.quantum(2 * n + 1),
    )


def down_up(alpha: Scalar, beta: Scalar, name: str | None = None) -> Presentation:
    """Down-up algebra ``A(α, β, 0)`` on generators ``d > u``.

    Relations ``d·u² = α·u·d·u + β·u²·d`` and ``d²·u = α·d·u·d + β·u·d²``.
    """
    alpha, beta = CycNumber.coerce(alpha), CycNumber.coerce(beta)
    d, u = 0, 1
    relations = (
        NCPoly({(d, u, u): 1, (u, d, u): -alpha, (u, u, d): -beta}),
        NCPoly({(d, d, u): 1, (d, u, d): -alpha, (u, d, d): -beta}),
    )
    hilbert = FactoredRational.inverse_of([(1, 3), (-1, 1)])
    return Presentation(
        name or f"down_up({alpha},{beta})",
        (Generator("d"), Generator("u")),
        relations,
        profile=AlgebraProfile(3, hilbert),
    )

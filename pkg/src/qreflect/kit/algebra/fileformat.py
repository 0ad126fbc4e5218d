"""Line-based presentation files.

::

    # comment
    algebra ex23
    generators x:1 y:1
    order x y
    relation x^2 - y^2
    hilbert 1/((1-t)^2)
    gldim 2
"""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Iterator, List, Tuple

from ..cyclotomic import check_conductor
from ..exceptions import ParseError
from ..series import parse_series
from .presentation import AlgebraProfile, Generator, Presentation

log = logging.getLogger(__name__)

KEYWORDS = ("algebra", "generators", "order", "relation", "hilbert", "gldim")


def _lines(text: str) -> Iterator[Tuple[int, str, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        keyword, _, rest = content.partition(" ")
        yield number, keyword, rest.strip()


def _generator(token: str, source: str | None, line: int) -> Generator:
    name, _, degree = token.partition(":")
    try:
        return Generator(name, int(degree) if degree else 1)
    except ValueError as exc:
        msg = f"invalid generator {token!r}: {exc}"
        raise ParseError(msg, source=source, line=line) from exc


def parse_presentation(
    text: str, source: str | None = None, *, conductor_limit: int | None = None
) -> Presentation:
    """Read a presentation from its file format.

    Coefficients above ``conductor_limit`` raise :class:`ConductorOverflow`.
    """
    name: str | None = None
    generators: List[Generator] | None = None
    order: Tuple[str, ...] | None = None
    relation_lines: List[Tuple[int, str]] = []
    hilbert = None
    gldim: int | None = None
    hilbert_line = 0
    for number, keyword, rest in _lines(text):
        if keyword not in KEYWORDS:
            raise ParseError(f"unknown keyword {keyword!r}", source=source, line=number)
        if not rest:
            raise ParseError(f"{keyword} needs a value", source=source, line=number)
        if keyword == "algebra":
            name = rest
        elif keyword == "generators":
            if generators is not None:
                raise ParseError(
                    "generators declared twice", source=source, line=number
                )
            generators = [_generator(tok, source, number) for tok in rest.split()]
        elif keyword == "order":
            order = tuple(rest.split())
        elif keyword == "relation":
            relation_lines.append((number, rest))
        elif keyword == "hilbert":
            hilbert = parse_series(rest, source=source, line=number)
            hilbert_line = number
        elif keyword == "gldim":
            try:
                gldim = int(rest)
            except ValueError:
                msg = f"invalid gldim {rest!r}"
                raise ParseError(msg, source=source, line=number) from None
    if name is None:
        raise ParseError("missing 'algebra <name>' line", source=source)
    if not generators:
        raise ParseError("missing 'generators' line", source=source)
    if (hilbert is None) != (gldim is None):
        raise ParseError(
            "hilbert and gldim must be given together",
            source=source,
            line=hilbert_line or None,
        )
    try:
        skeleton = Presentation(name, tuple(generators))
    except ValueError as exc:
        raise ParseError(str(exc), source=source) from exc
    relations = []
    for number, expression in relation_lines:
        relation = skeleton.element(expression, source=source, line=number)
        if not relation.is_homogeneous(skeleton.weights) or not relation:
            raise ParseError(
                f"relation {expression!r} is zero or not homogeneous",
                source=source,
                line=number,
            )
        if relation.coefficient(()):
            raise ParseError(
                f"relation {expression!r} has a constant term",
                source=source,
                line=number,
            )
        for _, coeff in relation.items():
            check_conductor(coeff, conductor_limit, source=source, line=number)
        relations.append(relation)
    profile = None
    if hilbert is not None and gldim is not None:
        profile = AlgebraProfile(gldim, hilbert)
    try:
        presentation = Presentation(
            name, tuple(generators), tuple(relations), order, profile
        )
    except ValueError as exc:
        raise ParseError(str(exc), source=source) from exc
    log.debug(
        "parsed %s: %d generators, %d relations",
        name,
        len(generators),
        len(relations),
    )
    return presentation


def load_presentation(
    path: str | os.PathLike, *, conductor_limit: int | None = None
) -> Presentation:
    """Read a presentation file."""
    path = Path(path)
    return parse_presentation(
        path.read_text(encoding="utf-8"),
        source=str(path),
        conductor_limit=conductor_limit,
    )

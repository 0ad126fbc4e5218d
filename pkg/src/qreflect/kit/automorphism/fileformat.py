"""Automorphism files: one or more matrix blocks.

::

    automorphism g on ex23
    i, 0
    0, -i

Rows are matrix rows (column ``j`` holds the image of generator ``j``).
Entries are separated by commas, or by whitespace when a row has no comma.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import List, Tuple

from ..algebra import Presentation
from ..cyclotomic import CycNumber, check_conductor, parse_coefficient
from ..exceptions import ParseError
from .model import GradedAutomorphism, verify_automorphism

AutomorphismBlock = Tuple[str, str, List[List[CycNumber]], int]


def parse_automorphism_blocks(
    text: str, source: str | None = None, *, conductor_limit: int | None = None
) -> List[AutomorphismBlock]:
    """Read ``(name, algebra, rows, line)`` blocks without verification."""
    blocks: List[AutomorphismBlock] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if content.startswith("automorphism"):
            parts = content.split()
            if len(parts) != 4 or parts[2] != "on":
                raise ParseError(
                    "expected 'automorphism <name> on <algebra>'",
                    source=source,
                    line=number,
                )
            blocks.append((parts[1], parts[3], [], number))
            continue
        if not blocks:
            raise ParseError(
                "matrix row before 'automorphism' header", source=source, line=number
            )
        cells = content.split(",") if "," in content else content.split()
        row = [
            check_conductor(
                parse_coefficient(cell, source=source, line=number),
                conductor_limit,
                source=source,
                line=number,
            )
            for cell in cells
        ]
        blocks[-1][2].append(row)
    if not blocks:
        raise ParseError("no automorphism block", source=source)
    for name, _, rows, line in blocks:
        if not rows or any(len(row) != len(rows) for row in rows):
            msg = f"matrix of {name} is not square"
            raise ParseError(msg, source=source, line=line)
    return blocks


def parse_automorphisms(
    text: str,
    presentation: Presentation,
    source: str | None = None,
    *,
    conductor_limit: int | None = None,
) -> List[GradedAutomorphism]:
    """Read and verify every automorphism block against ``presentation``."""
    result = []
    for name, algebra, rows, line in parse_automorphism_blocks(
        text, source, conductor_limit=conductor_limit
    ):
        if algebra != presentation.name:
            raise ParseError(
                f"{name} is declared on {algebra!r}, not on {presentation.name!r}",
                source=source,
                line=line,
            )
        if len(rows) != presentation.ngens:
            raise ParseError(
                f"{name} has {len(rows)} rows, {presentation.name} has "
                f"{presentation.ngens} generators",
                source=source,
                line=line,
            )
        result.append(verify_automorphism(presentation, rows, name))
    return result


def load_automorphisms(
    path: str | os.PathLike,
    presentation: Presentation,
    *,
    conductor_limit: int | None = None,
) -> List[GradedAutomorphism]:
    """Read and verify an automorphism file."""
    path = Path(path)
    return parse_automorphisms(
        path.read_text(encoding="utf-8"),
        presentation,
        source=str(path),
        conductor_limit=conductor_limit,
    )

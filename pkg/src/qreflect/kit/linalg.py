"""Exact linear algebra over fields of exact scalars.

Entries are ``Fraction`` or :class:`~qreflect.kit.cyclotomic.CycNumber` values
(anything supporting exact field arithmetic and truthiness); plain ``0`` and
``1`` integers serve as additive and multiplicative identities.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence

Vector = Dict[Hashable, Any]
Matrix = List[List[Any]]


def _inv(x):
    if hasattr(x, "inverse"):
        return x.inverse()
    return Fraction(1) / x


class EchelonBasis:
    """Incrementally maintained reduced echelon basis of a span of sparse vectors.

    Vectors are mappings from coordinate labels to nonzero scalars. Each stored
    row is normalized to 1 at its pivot and has zeros at every other pivot.
    """

    def __init__(self, key: Optional[Callable[[Any], Any]] = None):
        """Create an empty basis; ``key`` orders coordinates for pivot choice."""
        self._key = key
        self._rows: dict[Hashable, Vector] = {}

    @property
    def rank(self) -> int:
        """Dimension of the span."""
        return len(self._rows)

    @property
    def pivots(self) -> list[Hashable]:
        """Pivot coordinates of the stored rows."""
        return list(self._rows)

    def reduce(self, vector: Vector) -> Vector:
        """Return the remainder of ``vector`` after elimination by the basis."""
        result = {c: v for c, v in vector.items() if v}
        for pivot in [c for c in result if c in self._rows]:
            factor = result.get(pivot)
            if not factor:
                continue
            for c, v in self._rows[pivot].items():
                value = result.get(c, 0) - factor * v
                if value:
                    result[c] = value
                else:
                    result.pop(c, None)
        return result

    def contains(self, vector: Vector) -> bool:
        """Check membership of ``vector`` in the span."""
        return not self.reduce(vector)

    def add(self, vector: Vector) -> bool:
        """Add ``vector`` to the span, returning whether the rank increased."""
        rest = self.reduce(vector)
        if not rest:
            return False
        pivot = max(rest, key=self._key) if self._key else max(rest)
        scale = _inv(rest[pivot])
        row = {c: v * scale for c, v in rest.items()}
        for other in self._rows.values():
            factor = other.get(pivot)
            if not factor:
                continue
            for c, v in row.items():
                value = other.get(c, 0) - factor * v
                if value:
                    other[c] = value
                else:
                    other.pop(c, None)
        self._rows[pivot] = row
        return True


def row_reduce(matrix: Sequence[Sequence[Any]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns of a dense matrix."""
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        found = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if found is None:
            continue
        rows[r], rows[found] = rows[found], rows[r]
        scale = _inv(rows[r][c])
        rows[r] = [v * scale for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: Sequence[Sequence[Any]]) -> int:
    """Rank of a dense matrix."""
    return len(row_reduce(matrix)[1])


def nullspace(matrix: Sequence[Sequence[Any]]) -> list[list[Any]]:
    """Basis of the right kernel of a dense matrix."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    reduced, pivots = row_reduce(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec: list[Any] = [0] * ncols
        vec[f] = 1
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


def solve(matrix: Sequence[Sequence[Any]], rhs: Sequence[Any]) -> list[Any] | None:
    """One solution ``x`` of ``matrix · x = rhs``, or None when inconsistent."""
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    if not augmented:
        return []
    ncols = len(matrix[0])
    reduced, pivots = row_reduce(augmented)
    if ncols in pivots:
        return None
    x: list[Any] = [0] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return x


def identity(n: int) -> Matrix:
    """Identity matrix with integer entries."""
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> Matrix:
    """Matrix product."""
    inner = len(b)
    return [
        [sum((a[i][k] * b[k][j] for k in range(inner) if a[i][k]), 0)
         for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def inverse(matrix: Sequence[Sequence[Any]]) -> Matrix | None:
    """Inverse of a square matrix, or None when singular."""
    n = len(matrix)
    augmented = [list(row) + ident for row, ident in zip(matrix, identity(n))]
    reduced, pivots = row_reduce(augmented)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in reduced]

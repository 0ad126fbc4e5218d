"""Noncommutative polynomials over cyclotomic numbers.

Words are tuples of generator indices; the empty word is the unit.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

from ..cyclotomic import ONE, CycNumber

Word = Tuple[int, ...]
Scalar = Union[CycNumber, int]


class NCPoly:
    """Finite linear combination of words with nonzero cyclotomic coefficients."""

    __slots__ = ("_terms",)

    def __init__(
        self, terms: Mapping[Word, Scalar] | Iterable[tuple[Word, Scalar]] = ()
    ):
        """Create from a mapping or ``(word, coefficient)`` pairs; repeats add up."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: Dict[Word, CycNumber] = {}
        for word, coeff in items:
            word = tuple(word)
            value = collected.get(word)
            coeff = CycNumber.coerce(coeff)
            collected[word] = coeff if value is None else value + coeff
        self._terms = {w: c for w, c in collected.items() if not c.is_zero()}

    @classmethod
    def _wrap(cls, terms: Dict[Word, CycNumber]) -> NCPoly:
        new = cls.__new__(cls)
        new._terms = terms
        return new

    @classmethod
    def generator(cls, index: int) -> NCPoly:
        """The generator with the given index."""
        return cls._wrap({(index,): ONE})

    @classmethod
    def word(cls, word: Sequence[int], coeff: Scalar = 1) -> NCPoly:
        """A single term."""
        return cls({tuple(word): coeff})

    @classmethod
    def constant(cls, value: Scalar) -> NCPoly:
        """A scalar multiple of the unit."""
        return cls({(): value})

    @property
    def terms(self) -> Dict[Word, CycNumber]:
        """Copy of the term mapping."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Word, CycNumber]]:
        """Iterate over ``(word, coefficient)`` pairs."""
        return iter(self._terms.items())

    def coefficient(self, word: Word) -> CycNumber:
        """Coefficient of ``word``."""
        return self._terms.get(tuple(word), CycNumber())

    def __len__(self) -> int:
        """Number of terms."""
        return len(self._terms)

    def __bool__(self) -> bool:
        """Nonzero test."""
        return bool(self._terms)

    def degrees(self, weights: Sequence[int]) -> set[int]:
        """Weighted degrees of the terms."""
        return {sum(weights[x] for x in w) for w in self._terms}

    def is_homogeneous(self, weights: Sequence[int]) -> bool:
        """Whether all terms share one weighted degree."""
        return len(self.degrees(weights)) <= 1

    def _coerce(self, other) -> NCPoly | None:
        if isinstance(other, NCPoly):
            return other
        try:
            return NCPoly.constant(CycNumber.coerce(other))
        except TypeError:
            return None

    def __add__(self, other) -> NCPoly:
        """Add."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for w, c in other._terms.items():
            value = terms.get(w)
            value = c if value is None else value + c
            if value.is_zero():
                terms.pop(w, None)
            else:
                terms[w] = value
        return NCPoly._wrap(terms)

    __radd__ = __add__

    def __neg__(self) -> NCPoly:
        """Negate."""
        return NCPoly._wrap({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> NCPoly:
        """Subtract."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> NCPoly:
        """Subtract from a scalar."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> NCPoly:
        """Concatenation product, or scaling by a scalar on the right."""
        if not isinstance(other, NCPoly):
            try:
                scalar = CycNumber.coerce(other)
            except TypeError:
                return NotImplemented
            return self.scale(scalar)
        terms: Dict[Word, CycNumber] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                value = terms.get(w)
                product = c1 * c2
                terms[w] = product if value is None else value + product
        return NCPoly._wrap({w: c for w, c in terms.items() if not c.is_zero()})

    def __rmul__(self, other) -> NCPoly:
        """Scaling by a scalar on the left."""
        try:
            scalar = CycNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self.scale(scalar)

    def __truediv__(self, other) -> NCPoly:
        """Divide by a scalar."""
        try:
            scalar = CycNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self.scale(scalar.inverse())

    def __pow__(self, exponent: int) -> NCPoly:
        """Non-negative integer power."""
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = NCPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, scalar: Scalar) -> NCPoly:
        """Multiply every coefficient."""
        scalar = CycNumber.coerce(scalar)
        if scalar.is_zero():
            return NCPoly()
        return NCPoly._wrap({w: c * scalar for w, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        """Equality of term mappings."""
        if isinstance(other, (int, CycNumber)):
            other = NCPoly.constant(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        """Hash of the term set."""
        return hash(frozenset(self._terms.items()))

    def render(self, names: Sequence[str], key=None) -> str:
        """Render with generator names, terms in decreasing order of ``key``."""
        if not self._terms:
            return "0"
        words = sorted(self._terms, key=key or (lambda w: (len(w), w)), reverse=True)
        pieces = []
        for w in words:
            c = self._terms[w]
            negative = c.is_rational() and c.to_fraction() < 0
            magnitude = -c if negative else c
            monomial = render_word(w, names)
            if not w:
                body = str(magnitude) if magnitude.is_rational() else f"({magnitude})"
            elif magnitude == ONE:
                body = monomial
            elif magnitude.is_rational():
                body = f"{magnitude}*{monomial}"
            else:
                body = f"({magnitude})*{monomial}"
            pieces.append((negative, body))
        text = ("-" if pieces[0][0] else "") + pieces[0][1]
        for negative, body in pieces[1:]:
            text += (" - " if negative else " + ") + body
        return text

    def __repr__(self) -> str:
        """Get a technical string representation of this instance."""
        return f"NCPoly({self._terms!r})"


def render_word(word: Word, names: Sequence[str]) -> str:
    """Render a word with runs collapsed to powers, ``x^2*y``."""
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        parts.append(names[word[i]] + (f"^{run}" if run > 1 else ""))
        i = j
    return "*".join(parts)

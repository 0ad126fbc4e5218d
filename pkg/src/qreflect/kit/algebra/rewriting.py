"""Degree-truncated noncommutative Gröbner completion.

Rules rewrite a leading word into a combination of strictly smaller words
under a weighted degree-lexicographic order. Completion processes critical
pairs degree by degree, so the result is confluent on every word of degree at
most the cutoff, and nothing is claimed above it.
"""

from __future__ import annotations

import heapq
import logging
from collections import defaultdict
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from ..cyclotomic import ONE, ZERO, CycNumber
from ..exceptions import PreconditionError
from .words import NCPoly, Word

log = logging.getLogger(__name__)

Terms = Dict[Word, CycNumber]


class MonomialOrder:
    """Weighted degree-lexicographic order on words.

    ``ranking`` lists generator indices from largest to smallest.
    """

    def __init__(self, weights: Sequence[int], ranking: Sequence[int] | None = None):
        """Create an order; the default ranking is the generator order."""
        self.weights = tuple(weights)
        ranking = tuple(range(len(self.weights))) if ranking is None else tuple(ranking)
        if sorted(ranking) != list(range(len(self.weights))):
            raise ValueError(
                f"ranking {ranking} is not a permutation of the generators"
            )
        self.ranking = ranking
        n = len(ranking)
        self._rank = [0] * n
        for position, index in enumerate(ranking):
            self._rank[index] = n - position

    def degree(self, word: Word) -> int:
        """Weighted degree of a word."""
        return sum(self.weights[x] for x in word)

    def key(self, word: Word) -> tuple:
        """Sort key; larger keys are larger words."""
        return (self.degree(word), tuple(self._rank[x] for x in word))

    def heap_key(self, word: Word) -> tuple:
        """Key for which the smallest value is the largest word."""
        return (-self.degree(word), tuple(-self._rank[x] for x in word))

    def leading(self, terms: Iterable[Word]) -> Word:
        """The largest word."""
        return max(terms, key=self.key)


class RewritingSystem:
    """Rewriting rules valid up to a degree cutoff, with normal forms."""

    def __init__(self, order: MonomialOrder, cutoff: int):
        """Create an empty system; use :func:`complete` to fill it."""
        self.order = order
        self.cutoff = cutoff
        self._rules: Dict[Word, Terms] = {}
        self._lengths: List[int] = []
        self._complete = False
        self._cache: Dict[Word, Terms] = {}
        self._normal_words: Dict[int, Tuple[Word, ...]] = {}

    @property
    def rules(self) -> Dict[Word, NCPoly]:
        """Mapping from leading word to the combination it rewrites to."""
        return {lead: NCPoly(tail) for lead, tail in self._rules.items()}

    @property
    def leading_words(self) -> List[Word]:
        """Leading words sorted by the order."""
        return sorted(self._rules, key=self.order.key)

    def _add_rule(self, lead: Word, remainder: Terms) -> Terms:
        scale = (-remainder[lead]).inverse()
        tail = {w: c * scale for w, c in remainder.items() if w != lead}
        self._rules[lead] = tail
        if len(lead) not in self._lengths:
            self._lengths.append(len(lead))
            self._lengths.sort()
        return tail

    def _find(self, word: Word) -> tuple[int, int] | None:
        n = len(word)
        for start in range(n):
            for length in self._lengths:
                if start + length > n:
                    break
                if word[start : start + length] in self._rules:
                    return start, length
        return None

    def is_normal(self, word: Word) -> bool:
        """Whether no leading word occurs in ``word``."""
        return self._find(tuple(word)) is None

    def _check_degree(self, word: Word):
        if self.order.degree(word) > self.cutoff:
            raise PreconditionError(
                f"word of degree {self.order.degree(word)} "
                f"is above the cutoff {self.cutoff}"
            )

    def _reduce(self, poly: Mapping[Word, CycNumber]) -> Terms:
        heap_key = self.order.heap_key
        work: Terms = {w: c for w, c in poly.items() if not c.is_zero()}
        heap = [(heap_key(w), w) for w in work]
        heapq.heapify(heap)
        cache = self._cache if self._complete else None
        result: Terms = {}
        while heap:
            _, word = heapq.heappop(heap)
            coeff = work.pop(word, None)
            if coeff is None or coeff.is_zero():
                continue
            if cache is not None and word in cache:
                for w, c in cache[word].items():
                    result[w] = result.get(w, ZERO) + coeff * c
                continue
            hit = self._find(word)
            if hit is None:
                result[word] = result.get(word, ZERO) + coeff
                continue
            start, length = hit
            prefix, suffix = word[:start], word[start + length :]
            for w, c in self._rules[word[start : start + length]].items():
                new = prefix + w + suffix
                value = coeff * c
                if new in work:
                    work[new] = work[new] + value
                else:
                    work[new] = value
                    heapq.heappush(heap, (heap_key(new), new))
        return {w: c for w, c in result.items() if not c.is_zero()}

    def nf_word(self, word: Word) -> Terms:
        """Normal form of a single word as a term mapping (cached)."""
        word = tuple(word)
        cached = self._cache.get(word)
        if cached is None:
            self._check_degree(word)
            cached = self._reduce({word: ONE})
            self._cache[word] = cached
        return cached

    def normal_form(self, poly: NCPoly) -> NCPoly:
        """Normal form of a polynomial whose terms have degree at most the cutoff."""
        for word, _ in poly.items():
            self._check_degree(word)
        return NCPoly(self._reduce(poly.terms))

    def multiply(self, a: NCPoly, b: NCPoly) -> NCPoly:
        """Normal form of the product ``a·b``."""
        return self.normal_form(a * b)

    def left_multiply(self, index: int, terms: Mapping[Word, CycNumber]) -> Terms:
        """Normal form of ``x_index · Σ c_w w`` for normal words ``w``."""
        result: Terms = {}
        for word, coeff in terms.items():
            for w, c in self.nf_word((index,) + word).items():
                result[w] = result.get(w, ZERO) + coeff * c
        return {w: c for w, c in result.items() if not c.is_zero()}

    def _suffix_free(self, word: Word) -> bool:
        for length in self._lengths:
            if length > len(word):
                break
            if word[-length:] in self._rules:
                return False
        return True

    def normal_words(self, degree: int) -> Tuple[Word, ...]:
        """Normal words of a weighted degree, in increasing order."""
        if degree < 0:
            return ()
        if degree > self.cutoff:
            raise PreconditionError(
                f"degree {degree} is above the cutoff {self.cutoff}"
            )
        cached = self._normal_words.get(degree)
        if cached is not None:
            return cached
        if degree == 0:
            words: List[Word] = [()]
        else:
            words = []
            for index, weight in enumerate(self.order.weights):
                for base in self.normal_words(degree - weight):
                    word = base + (index,)
                    if self._suffix_free(word):
                        words.append(word)
        result = tuple(sorted(words, key=self.order.key))
        self._normal_words[degree] = result
        return result

    def dims(self) -> List[int]:
        """Number of normal words in each degree up to the cutoff."""
        return [len(self.normal_words(d)) for d in range(self.cutoff + 1)]


def _overlaps(
    left: Word, left_tail: Terms, right: Word, right_tail: Terms
) -> Iterable[Terms]:
    # left = p·u, right = u·s with u a proper nonempty overlap
    for k in range(1, min(len(left), len(right))):
        if left[-k:] != right[:k]:
            continue
        prefix, suffix = left[:-k], right[k:]
        s_poly: Terms = {}
        for w, c in right_tail.items():
            key = prefix + w
            s_poly[key] = s_poly.get(key, ZERO) + c
        for w, c in left_tail.items():
            key = w + suffix
            s_poly[key] = s_poly.get(key, ZERO) - c
        yield {w: c for w, c in s_poly.items() if not c.is_zero()}


def complete(
    relations: Iterable[NCPoly], order: MonomialOrder, cutoff: int
) -> RewritingSystem:
    """Complete homogeneous relations into a system confluent to ``cutoff``."""
    system = RewritingSystem(order, cutoff)
    pending: Dict[int, List[Terms]] = defaultdict(list)
    for relation in relations:
        if not relation:
            continue
        degree = order.degree(next(w for w, _ in relation.items()))
        if degree <= cutoff:
            pending[degree].append(relation.terms)
    pairs = 0
    for degree in range(1, cutoff + 1):
        for poly in pending.pop(degree, []):
            remainder = system._reduce(poly)
            if not remainder:
                continue
            lead = order.leading(remainder)
            tail = system._add_rule(lead, remainder)
            for other, other_tail in list(system._rules.items()):
                candidates = list(_overlaps(lead, tail, other, other_tail))
                if other != lead:
                    candidates.extend(_overlaps(other, other_tail, lead, tail))
                for s_poly in candidates:
                    if not s_poly:
                        continue
                    s_degree = order.degree(next(iter(s_poly)))
                    if s_degree <= cutoff:
                        pending[s_degree].append(s_poly)
                        pairs += 1
        log.debug("degree %d: %d rules", degree, len(system._rules))
    system._complete = True
    log.info(
        "rewriting system complete to degree %d: %d rules, %d critical pairs",
        cutoff,
        len(system._rules),
        pairs,
    )
    return system

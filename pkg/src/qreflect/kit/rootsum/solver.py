"""Complete solver for ``n = x_1 + … + x_k`` over roots of unity other than 1.

Every solution multiset splits into a *reduced* part ``R`` (no nonempty
sub-multiset sums to zero) plus rotations ``ξ·T`` of minimal vanishing
multisets ``T``. The solver enumerates both parts separately:

- the orders of the elements of ``R`` divide the product of the primes up to
  ``|R| + 1``, since ``Σ R − n = 0`` is a minimal vanishing relation; those
  orders are squarefree, so the Galois average ``Σ μ(w)/φ(w) = n`` pins down
  the order multiset and forces ``|R| ≥ 2n``;
- exponent choices are matched on integer coordinate vectors in the power
  basis of ``ℚ(ζ_L)``, splitting the largest order group off into a lookup
  table keyed by the partial sum.

Minimal vanishing multisets are found the same way (they sum to zero after
rotating one element to 1) and kept in canonical form.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from math import comb, lcm, prod
from typing import Iterable, Iterator, Sequence, Tuple

import numpy as np

from ..cyclotomic import CycNumber, RootOfUnity
from ..cyclotomic.numtheory import divisors, mobius, primorial, totient, units
from ..exceptions import CandidateSetOverflow
from .model import (
    MINUS_ONE,
    PAIR,
    RootSumProblem,
    Roots,
    SolutionFamily,
    Template,
    roots_sum,
)

log = logging.getLogger(__name__)

DEFAULT_CANDIDATE_LIMIT = 500_000
ONE_ROOT = RootOfUnity(1, 0)


@lru_cache(maxsize=None)
def _root_table(conductor: int) -> np.ndarray:
    """Row ``e`` holds the power-basis coordinates of ``ζ_conductor^e``."""
    width = totient(conductor)
    table = np.zeros((conductor, width), dtype=np.int64)
    for e in range(conductor):
        for i, c in enumerate(CycNumber.zeta(conductor, e).lift(conductor)):
            table[e, i] = int(c)
    return table


def _root_vectors(roots: Sequence[RootOfUnity], conductor: int) -> np.ndarray:
    table = _root_table(conductor)
    return np.array(
        [table[r.exponent * (conductor // r.order)] for r in roots], dtype=np.int64
    ).reshape(len(roots), table.shape[1])


def _average(order: int) -> Fraction:
    return Fraction(mobius(order), totient(order))


def averaging_sum(roots: Iterable[RootOfUnity]) -> Fraction:
    """``Σ (1 − μ(w)/φ(w))`` over the orders ``w``.

    Equals ``k − n`` when every order is squarefree.
    """
    return sum((1 - _average(r.order) for r in roots), Fraction(0))


def _order_multisets(
    size: int, target: Fraction, orders: Sequence[int]
) -> Iterator[Tuple[int, ...]]:
    """Non-decreasing order tuples whose averages ``μ/φ`` sum to ``target``."""
    orders = sorted(orders)
    values = [_average(w) for w in orders]
    high = [max(values[i:]) for i in range(len(values))]
    low = [min(values[i:]) for i in range(len(values))]
    chosen: list[int] = []

    def search(start: int, remaining: int, need: Fraction) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            if need == 0:
                yield tuple(chosen)
            return
        if start >= len(orders):
            return
        if need > remaining * high[start] or need < remaining * low[start]:
            return
        for idx in range(start, len(orders)):
            if need > remaining * high[idx] or need < remaining * low[idx]:
                continue
            chosen.append(orders[idx])
            yield from search(idx, remaining - 1, need - values[idx])
            chosen.pop()

    yield from search(0, size, target)


def _match_exponents(
    orders: Sequence[int], target: int, limit: int
) -> list[Roots]:
    """All root multisets with the given orders (primitive) that sum to ``target``."""
    groups = sorted(Counter(orders).items())
    conductor = lcm(*orders) if orders else 1
    table = _root_table(conductor)
    wanted = np.zeros(table.shape[1], dtype=np.int64)
    wanted[0] = target

    options = []
    for order, count in groups:
        exps = units(order) if order > 1 else [0]
        rows = table[[e * (conductor // order) for e in exps]]
        combos = list(combinations_with_replacement(range(len(exps)), count))
        sums = np.array([rows[list(c)].sum(axis=0) for c in combos], dtype=np.int64)
        roots = [tuple(RootOfUnity(order, exps[i]) for i in c) for c in combos]
        options.append((roots, sums))

    sizes = [len(roots) for roots, _ in options]
    pivot = max(range(len(options)), key=sizes.__getitem__)
    rest = [o for i, o in enumerate(options) if i != pivot]
    count = prod(len(roots) for roots, _ in rest)
    if count > limit or sizes[pivot] > limit:
        raise CandidateSetOverflow(limit, count * sizes[pivot])
    log.debug("orders %s: %d x %d exponent candidates", orders, count, sizes[pivot])

    lookup: dict[bytes, list[int]] = defaultdict(list)
    pivot_roots, pivot_sums = options[pivot]
    for i, vector in enumerate(pivot_sums):
        lookup[vector.tobytes()].append(i)

    found: list[Roots] = []
    for choice in product(*(range(len(roots)) for roots, _ in rest)):
        partial = wanted.copy()
        picked: list[RootOfUnity] = []
        for (roots, sums), i in zip(rest, choice):
            partial -= sums[i]
            picked.extend(roots[i])
        for i in lookup.get(partial.tobytes(), ()):
            found.append(tuple(sorted(picked + list(pivot_roots[i]))))
    return found


def _vanishing_subset(roots: Roots, sizes: Iterable[int]) -> Roots | None:
    """A sub-multiset of one of the given sizes that sums to zero."""
    if not roots:
        return None
    conductor = lcm(*(r.order for r in roots))
    vectors = _root_vectors(roots, conductor)
    for size in sizes:
        for idx in combinations(range(len(roots)), size):
            if not vectors[list(idx)].sum(axis=0).any():
                return tuple(roots[i] for i in idx)
    return None


def is_reduced(roots: Sequence[RootOfUnity]) -> bool:
    """Whether no nonempty proper sub-multiset sums to zero."""
    roots = tuple(roots)
    return _vanishing_subset(roots, range(1, len(roots))) is None


def _has_cancelling_pair(roots: Iterable[RootOfUnity]) -> bool:
    present = set(roots)
    return any(r * MINUS_ONE in present for r in present)


def reduced_solutions(
    target: int,
    size: int,
    *,
    no_minus_one: bool = False,
    no_cancelling_pair: bool = False,
    limit: int = DEFAULT_CANDIDATE_LIMIT,
) -> list[Roots]:
    """Reduced multisets of ``size`` roots other than 1 summing to ``target``."""
    if target == 0 or size == 0:
        return [()] if target == 0 and size == 0 else []
    if size < 2 * target:
        return []
    orders = [w for w in divisors(primorial(size + 1)) if w > 1]
    if no_minus_one:
        orders = [w for w in orders if w != 2]
    result: set[Roots] = set()
    for order_tuple in _order_multisets(size, Fraction(target), orders):
        for roots in _match_exponents(order_tuple, target, limit):
            if no_cancelling_pair and _has_cancelling_pair(roots):
                continue
            if is_reduced(roots):
                result.add(roots)
    log.debug("%d reduced solutions of %d = sum of %d", len(result), target, size)
    return sorted(result)


_TEMPLATES: dict[int, Tuple[Template, ...]] = {}


def templates(size: int, limit: int = DEFAULT_CANDIDATE_LIMIT) -> Tuple[Template, ...]:
    """Minimal vanishing multisets of ``size`` roots, up to rotation."""
    if size < 2:
        return ()
    if size in _TEMPLATES:
        return _TEMPLATES[size]
    orders = list(divisors(primorial(size)))
    found: set[Template] = set()
    for order_tuple in _order_multisets(size - 1, Fraction(-1), orders):
        for rest in _match_exponents(order_tuple, -1, limit):
            roots = tuple(sorted((ONE_ROOT, *rest)))
            if is_reduced(roots):
                found.add(Template.canonical(roots))
    catalogue = tuple(sorted(found, key=lambda t: t.roots))
    log.debug("%d minimal vanishing templates of size %d", len(catalogue), size)
    _TEMPLATES[size] = catalogue
    return catalogue


def _template_combinations(
    total: int, available: Sequence[Template]
) -> Iterator[Tuple[Template, ...]]:
    """Multisets of templates whose sizes add up to ``total``."""
    chosen: list[Template] = []

    def search(start: int, remaining: int) -> Iterator[Tuple[Template, ...]]:
        if remaining == 0:
            yield tuple(chosen)
            return
        for idx in range(start, len(available)):
            template = available[idx]
            if template.size <= remaining:
                chosen.append(template)
                yield from search(idx, remaining - template.size)
                chosen.pop()

    yield from search(0, total)


def solve(
    problem: RootSumProblem, limit: int = DEFAULT_CANDIDATE_LIMIT
) -> list[SolutionFamily]:
    """Every solution family of ``problem``, concrete families first.

    Parametric families contribute rotated minimal vanishing templates; with
    ``no_cancelling_pair`` the pair template is never used.
    """
    n, k = problem.target, problem.count
    available: list[Template] = []
    for size in range(2, k - 2 * n + 1):
        available.extend(
            t for t in templates(size, limit)
            if not (problem.no_cancelling_pair and t == PAIR)
        )
    families: list[SolutionFamily] = []
    for size in range(2 * n, k + 1):
        combos = list(_template_combinations(k - size, available))
        if not combos:
            continue
        cores = reduced_solutions(
            n,
            size,
            no_minus_one=problem.no_minus_one,
            no_cancelling_pair=problem.no_cancelling_pair,
            limit=limit,
        )
        for core in cores:
            families.extend(SolutionFamily(core, combo) for combo in combos)
    parametric = [f for f in families if f.templates]
    families = [
        f for f in families
        if f.templates or not any(contains(p, f.concrete) for p in parametric)
    ]
    families.sort(
        key=lambda f: (bool(f.templates), f.size - len(f.concrete), f.concrete)
    )
    log.info("%s: %d solution families", problem, len(families))
    return families


def verify_family(family: SolutionFamily, problem: RootSumProblem) -> bool:
    """Exact check of a family against ``problem``.

    The concrete part must sum to the target and meet the summand constraints;
    every template must sum to zero and fill the remaining count.
    """
    if family.size != problem.count:
        return False
    if roots_sum(family.concrete) != problem.target:
        return False
    if not problem.admits(family.concrete):
        return False
    for template in family.templates:
        if not roots_sum(template.roots).is_zero():
            return False
        if problem.no_cancelling_pair and template == PAIR:
            return False
    return True


def contains(family: SolutionFamily, roots: Sequence[RootOfUnity]) -> bool:
    """Whether a concrete multiset is an instance of ``family``."""
    if len(roots) != family.size:
        return False
    remaining = Counter(roots)
    remaining.subtract(family.concrete)
    if any(v < 0 for v in remaining.values()):
        return False
    return _cover(+remaining, list(family.templates))


def _cover(remaining: Counter, pending: list[Template]) -> bool:
    if not pending:
        return not remaining
    anchor = min(remaining)
    for idx, template in enumerate(pending):
        if template in pending[:idx]:
            continue
        for root in set(template.roots):
            rotated = Counter(template.rotated(anchor * root.inverse()))
            if all(remaining[r] >= c for r, c in rotated.items()):
                if _cover(remaining - rotated, pending[:idx] + pending[idx + 1 :]):
                    return True
    return False


def brute_force(problem: RootSumProblem, conductor: int) -> list[Roots]:
    """All solutions whose elements lie in ``μ_conductor``, by exhaustive search."""
    exponents = [
        e for e in range(1, conductor)
        if not (problem.no_minus_one and 2 * e == conductor)
    ]
    table = _root_table(conductor).astype(np.int32)
    wanted = np.zeros(table.shape[1], dtype=np.int32)
    wanted[0] = problem.target
    count = comb(len(exponents) + problem.count - 1, problem.count)
    log.debug("brute force over %d multisets in mu_%d", count, conductor)
    # a sorted multiset splits into its low half and its high half
    low_size = problem.count // 2
    low_combos, low_sums = _multiset_sums(exponents, low_size, table)
    lows: defaultdict[bytes, list[int]] = defaultdict(list)
    for index, total in enumerate(low_sums):
        lows[total.tobytes()].append(index)
    high_combos, high_sums = _multiset_sums(
        exponents, problem.count - low_size, table
    )
    found = []
    for high, rest in zip(high_combos, wanted - high_sums):
        for index in lows.get(rest.tobytes(), ()):
            low = low_combos[index]
            if low_size and high.size and low[-1] > high[0]:
                continue
            combo = [*low.tolist(), *high.tolist()]
            roots = tuple(sorted(RootOfUnity.canonical(conductor, e) for e in combo))
            if problem.admits(roots):
                found.append(roots)
    return found


def _multiset_sums(
    exponents: Sequence[int], size: int, table: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Sorted exponent multisets of ``size`` and their coordinate sums."""
    combos = list(combinations_with_replacement(exponents, size))
    indices = np.array(combos, dtype=np.int64).reshape(len(combos), size)
    sums = np.zeros((len(combos), table.shape[1]), dtype=table.dtype)
    for column in range(size):
        sums += table[indices[:, column]]
    return indices, sums

"""Level-wise frequent itemset mining plus an exhaustive oracle."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Iterable, Iterator, Sequence

from rulehide.errors import ContractError, ParameterError
from rulehide.transactions import Itemset, TransactionDB

BRUTE_FORCE_MAX_ITEMS = 20


def as_fraction(value) -> Fraction:
    """Exact value of a user threshold; floats are read by their decimal repr."""
    if isinstance(value, bool):
        raise ParameterError(f"not a number: {value!r}")
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ParameterError(f"not a finite number: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError):
        raise ParameterError(f"not a number: {value!r}") from None


@dataclass(frozen=True)
class MiningParams:
    """Minimum support as a fraction of ``n`` or as an absolute count."""

    min_support: Fraction | float | None = None
    min_count: int | None = None

    def __post_init__(self):
        if (self.min_support is None) == (self.min_count is None):
            raise ParameterError("give exactly one of min_support and min_count")
        if self.min_support is not None:
            s = as_fraction(self.min_support)
            if not 0 <= s <= 1:
                raise ParameterError(f"min_support {self.min_support} outside [0, 1]")
            object.__setattr__(self, "min_support", s)
        elif isinstance(self.min_count, bool) or not isinstance(self.min_count, int) \
                or self.min_count < 0:
            raise ParameterError(f"min_count must be a non-negative integer, got {self.min_count!r}")

    def threshold(self, n: int) -> int:
        if self.min_count is not None:
            return max(1, self.min_count)
        return max(1, math.ceil(self.min_support * n))


@dataclass(frozen=True, order=True)
class FrequentItemset:
    itemset: Itemset
    support: int


@dataclass
class FrequentCollection:
    levels: list[list[FrequentItemset]] = field(default_factory=list)
    scan_count: int = 1
    threshold: int = 1

    def __iter__(self) -> Iterator[FrequentItemset]:
        for level in self.levels:
            yield from level

    def __len__(self) -> int:
        return sum(len(level) for level in self.levels)

    def __contains__(self, itemset) -> bool:
        return tuple(itemset) in self.supports

    @property
    def supports(self) -> dict[Itemset, int]:
        return {f.itemset: f.support for f in self}

    @property
    def max_size(self) -> int:
        return len(self.levels)

    def level(self, k: int) -> list[FrequentItemset]:
        return self.levels[k - 1] if 1 <= k <= len(self.levels) else []


def _as_itemset(entry) -> Itemset:
    return tuple(entry.itemset if isinstance(entry, FrequentItemset) else entry)


def apriori_gen(prior_level: Sequence[FrequentItemset | Sequence[int]]) -> list[Itemset]:
    """Candidates of size i from the frequent itemsets of size i - 1.

    Join pairs sharing their first i - 2 items, then prune any candidate
    with an infrequent (i - 1)-subset.
    """
    prior = sorted(_as_itemset(e) for e in prior_level)
    if not prior:
        return []
    size = len(prior[0])
    if size < 1 or any(len(s) != size for s in prior):
        raise ContractError("apriori_gen needs non-empty itemsets of one size")
    known = set(prior)
    out = []
    for a in range(len(prior)):
        first = prior[a]
        prefix = first[:-1]
        for b in range(a + 1, len(prior)):
            second = prior[b]
            if second[:-1] != prefix:
                break
            cand = first + second[-1:]
            # the two subsets dropping the last two items are the join parents
            if all(cand[:j] + cand[j + 1:] in known for j in range(size - 1)):
                out.append(cand)
    return out


def apriori(db: TransactionDB, params: MiningParams) -> FrequentCollection:
    """All itemsets whose support reaches the threshold, level by level.

    ``scan_count`` counts one pass per level attempted: a pass is charged
    for level k + 1 whenever level k is non-empty, including the final
    pass that finds nothing.
    """
    threshold = params.threshold(db.n)
    candidates: list[Itemset] = [(i,) for i in range(db.m)]
    levels: list[list[FrequentItemset]] = []
    scans = 0
    while True:
        scans += 1
        counts = db.index.count(candidates) if candidates else []
        level = [FrequentItemset(c, s) for c, s in zip(candidates, counts) if s >= threshold]
        if not level:
            break
        levels.append(level)
        candidates = apriori_gen(level)
    return FrequentCollection(levels, scans, threshold)


def brute_force_frequent(db: TransactionDB, params: MiningParams) -> FrequentCollection:
    """Enumerate every non-empty subset of the dictionary and count it directly.

    Exponential in ``m``; refused above ``BRUTE_FORCE_MAX_ITEMS`` items.
    """
    if db.m > BRUTE_FORCE_MAX_ITEMS:
        raise ParameterError(
            f"brute force refused: {db.m} items > {BRUTE_FORCE_MAX_ITEMS}")
    threshold = params.threshold(db.n)
    rows = [frozenset(t) for t in db]
    levels = []
    for k in range(1, db.m + 1):
        level = []
        for cand in combinations(range(db.m), k):
            s = frozenset(cand)
            support = sum(1 for row in rows if s <= row)
            if support >= threshold:
                level.append(FrequentItemset(cand, support))
        levels.append(level)
    while levels and not levels[-1]:
        levels.pop()
    return FrequentCollection(levels, 1, threshold)


def format_itemsets(db: TransactionDB, freq: Iterable[FrequentItemset]) -> str:
    return "".join(f"{' '.join(db.names(f.itemset))} support={f.support}\n" for f in freq)

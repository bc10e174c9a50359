"""Brute-force enumeration over all permutations of S_n or words of {1..t}^n.

These scans are the ground truth that every closed formula and generating
function in the toolkit is validated against.  Iteration uses the standard
lexicographic successor generators, so nothing is materialised.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Mapping, Sequence

from . import matcher
from .pattern import Mode, Pdvp

DEFAULT_PERM_LIMIT = 10
DEFAULT_WORD_BUDGET = 10**8


class EnumerationLimitError(ValueError):
    pass


@dataclass(frozen=True)
class DistributionTable:
    """For each occurrence count m, the number of length-n objects attaining it."""

    length: int
    counts: Mapping[int, int]

    def __getitem__(self, m: int) -> int:
        return self.counts.get(m, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def max_occurrences(self) -> int:
        return max(self.counts) if self.counts else 0


def _check_perm(pats: Sequence[Pdvp], n: int, limit: int | None):
    limit = DEFAULT_PERM_LIMIT if limit is None else limit
    if n > limit:
        raise EnumerationLimitError(
            f"n = {n} exceeds the permutation scan limit {limit}"
        )
    for pat in pats:
        if pat.mode is not Mode.PERMUTATION:
            raise ValueError("permutation scan needs permutation-mode patterns")


def _check_word(pats: Sequence[Pdvp], t: int, n: int, budget: int | None):
    budget = DEFAULT_WORD_BUDGET if budget is None else budget
    if t < 1:
        raise ValueError("alphabet size must be positive")
    if t**n > budget:
        raise EnumerationLimitError(
            f"{t}^{n} words exceed the scan budget {budget}"
        )
    for pat in pats:
        if pat.mode is not Mode.WORD:
            raise ValueError("word scan needs word-mode patterns")


def perm_distribution(pat: Pdvp, n: int, limit: int | None = None) -> DistributionTable:
    """Histogram of occurrence counts of `pat` over all of S_n."""
    _check_perm([pat], n, limit)
    prep = matcher._prepare(pat)
    counts: dict[int, int] = {}
    upper = n + 1
    for pi in permutations(range(1, n + 1)):
        c = matcher._count(prep, pi, upper)
        counts[c] = counts.get(c, 0) + 1
    return DistributionTable(n, counts)


def word_distribution(
    pat: Pdvp, t: int, n: int, budget: int | None = None
) -> DistributionTable:
    """Histogram of occurrence counts of `pat` over all words in {1..t}^n."""
    _check_word([pat], t, n, budget)
    prep = matcher._prepare(pat)
    counts: dict[int, int] = {}
    for w in product(range(1, t + 1), repeat=n):
        c = matcher._count(prep, w, t)
        counts[c] = counts.get(c, 0) + 1
    return DistributionTable(n, counts)


def perm_multi_avoiders(pats: Sequence[Pdvp], n: int, limit: int | None = None) -> int:
    """Number of permutations in S_n avoiding every listed pattern."""
    pats = list(pats)
    _check_perm(pats, n, limit)
    preps = [matcher._prepare(p) for p in pats]
    upper = n + 1
    total = 0
    for pi in permutations(range(1, n + 1)):
        if not any(matcher._exists(p, pi, upper) for p in preps):
            total += 1
    return total


def word_multi_avoiders(
    pats: Sequence[Pdvp], t: int, n: int, budget: int | None = None
) -> int:
    """Number of words in {1..t}^n avoiding every listed pattern."""
    pats = list(pats)
    _check_word(pats, t, n, budget)
    preps = [matcher._prepare(p) for p in pats]
    total = 0
    for w in product(range(1, t + 1), repeat=n):
        if not any(matcher._exists(p, w, t) for p in preps):
            total += 1
    return total

"""Occurrence enumeration for patterns in permutations and words.

An occurrence of a length-m pattern in a sequence of length n is a strictly
increasing index tuple (i_1, .., i_m) such that the chosen values realise the
base's order type, every gap i_{k+1} - i_k lies in X_k (with the sentinels
i_0 = 0 and i_{m+1} = n + 1), every Y triple is satisfied on absolute value
differences (sentinel values: 0 below; n + 1 above for permutations, the
alphabet size for words), and every chosen value lies in its Z set.

The search is a depth-first walk over index positions, pruning on gap
feasibility, Z membership, order consistency and Y triples as soon as both
endpoints are known.  Occurrences come out in lexicographic index order.
Patterns are compiled once into flat lookup tables; the exhaustive scans
drive the compiled form directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .intset import IntSet
from .pattern import Mode, Pdvp


@dataclass(frozen=True)
class PermSequence:
    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        if sorted(self.values) != list(range(1, n + 1)):
            raise ValueError(f"{self.values} is not a permutation of 1..{n}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "PermSequence":
        return cls(tuple(values))

    @property
    def entries(self) -> tuple[int, ...]:
        return self.values


@dataclass(frozen=True)
class WordSequence:
    letters: tuple[int, ...]
    alphabet: int

    def __post_init__(self):
        if self.alphabet < 1:
            raise ValueError("alphabet size must be positive")
        if any(not 1 <= w <= self.alphabet for w in self.letters):
            raise ValueError(f"letters must lie in 1..{self.alphabet}")

    @classmethod
    def of(cls, letters: Iterable[int], alphabet: int) -> "WordSequence":
        return cls(tuple(letters), alphabet)

    @property
    def entries(self) -> tuple[int, ...]:
        return self.letters


@dataclass(frozen=True)
class Occurrence:
    indices: tuple[int, ...]

    def values(self, seq) -> tuple[int, ...]:
        entries = seq.entries
        return tuple(entries[i - 1] for i in self.indices)


class _Prep:
    """Flattened pattern tables for the search loops.

    Y triples are split per readiness level into "inner" triples (both
    endpoints pattern indices, resolved to 0-based value slots) and
    "boundary" triples (one endpoint a sentinel): the inner form is the hot
    case and avoids any value dispatch.  Gap candidate tuples are memoised
    per (level, remaining room).
    """

    __slots__ = (
        "m", "x", "z", "z_skip", "order", "y_inner", "y_bound", "y_global",
        "x_last", "x_last_any", "gap_memo",
    )

    def __init__(self, pat: Pdvp):
        m = pat.m
        base = pat.base
        self.m = m
        self.x = pat.x
        self.z = pat.z
        # values are always >= 1, so a Z set equal to P never rejects
        self.z_skip = tuple(s.is_positives for s in pat.z)
        order = []
        for j in range(m):
            checks = []
            for a in range(j):
                d = base[j] - base[a]
                checks.append((a, (d > 0) - (d < 0)))
            order.append(tuple(checks))
        self.order = tuple(order)
        # a Y triple is checked once all its non-sentinel endpoints are chosen
        inner: list[list] = [[] for _ in range(m + 1)]
        bound: list[list] = [[] for _ in range(m + 1)]
        self.y_global = []
        for s, t, dset in pat.y:
            codes = [c for c in (s, t) if 1 <= c <= m]
            if len(codes) == 2:
                inner[max(codes)].append((s - 1, t - 1, dset))
            elif len(codes) == 1:
                bound[codes[0]].append((s, t, dset))
            else:
                self.y_global.append((s, t, dset))
        self.y_inner = tuple(tuple(v) for v in inner)
        self.y_bound = tuple(tuple(v) for v in bound)
        self.x_last = pat.x[m]
        self.x_last_any = pat.x[m].is_positives
        self.gap_memo: tuple[dict, ...] = tuple({} for _ in range(m))

    def gaps(self, level: int, limit: int) -> tuple[int, ...]:
        memo = self.gap_memo[level]
        got = memo.get(limit)
        if got is None:
            members = self.x[level].members_up_to(limit)
            # index gaps are at least 1; drop a leading 0 from the evens
            got = members[1:] if members and members[0] == 0 else members
            memo[limit] = got
        return got

    def passes_global_y(self, upper: int) -> bool:
        for s, t, dset in self.y_global:
            lo = 0 if s == 0 else upper
            hi = upper if t == self.m + 1 else 0
            if abs(lo - hi) not in dset:
                return False
        return True


_PREP_CACHE: dict[Pdvp, _Prep] = {}


def _prepare(pat: Pdvp) -> _Prep:
    prep = _PREP_CACHE.get(pat)
    if prep is None:
        prep = _Prep(pat)
        _PREP_CACHE[pat] = prep
    return prep


def _bound_ok(vals, s: int, t: int, dset: IntSet, m: int, upper: int) -> bool:
    a = 0 if s == 0 else (upper if s == m + 1 else vals[s - 1])
    b = 0 if t == 0 else (upper if t == m + 1 else vals[t - 1])
    return abs(a - b) in dset


def _count(prep: _Prep, entries: tuple[int, ...], upper: int) -> int:
    n = len(entries)
    m = prep.m
    if m > n or not prep.passes_global_y(upper):
        return 0
    z, z_skip, order = prep.z, prep.z_skip, prep.order
    y_inner, y_bound = prep.y_inner, prep.y_bound
    gaps = prep.gaps
    vals = [0] * m
    last_level = m - 1

    def rec(level: int, prev: int) -> int:
        zset = None if z_skip[level] else z[level]
        checks = order[level]
        inner_here = y_inner[level + 1]
        bound_here = y_bound[level + 1]
        total = 0
        for delta in gaps(level, n - prev):
            i = prev + delta
            v = entries[i - 1]
            if zset is not None and v not in zset:
                continue
            ok = True
            for a, sign in checks:
                d = v - vals[a]
                if (d > 0) - (d < 0) != sign:
                    ok = False
                    break
            if not ok:
                continue
            vals[level] = v
            for a, b, dset in inner_here:
                d = vals[a] - vals[b]
                if (d if d >= 0 else -d) not in dset:
                    ok = False
                    break
            if not ok:
                continue
            if bound_here:
                for s, t, dset in bound_here:
                    if not _bound_ok(vals, s, t, dset, m, upper):
                        ok = False
                        break
                if not ok:
                    continue
            if level == last_level:
                if prep.x_last_any or (n + 1 - i) in prep.x_last:
                    total += 1
            else:
                total += rec(level + 1, i)
        return total

    return rec(0, 0)


def _exists(prep: _Prep, entries: tuple[int, ...], upper: int) -> bool:
    n = len(entries)
    m = prep.m
    if m > n or not prep.passes_global_y(upper):
        return False
    z, z_skip, order = prep.z, prep.z_skip, prep.order
    y_inner, y_bound = prep.y_inner, prep.y_bound
    gaps = prep.gaps
    vals = [0] * m
    last_level = m - 1

    def rec(level: int, prev: int) -> bool:
        zset = None if z_skip[level] else z[level]
        checks = order[level]
        inner_here = y_inner[level + 1]
        bound_here = y_bound[level + 1]
        for delta in gaps(level, n - prev):
            i = prev + delta
            v = entries[i - 1]
            if zset is not None and v not in zset:
                continue
            ok = True
            for a, sign in checks:
                d = v - vals[a]
                if (d > 0) - (d < 0) != sign:
                    ok = False
                    break
            if not ok:
                continue
            vals[level] = v
            for a, b, dset in inner_here:
                d = vals[a] - vals[b]
                if (d if d >= 0 else -d) not in dset:
                    ok = False
                    break
            if not ok:
                continue
            if bound_here:
                for s, t, dset in bound_here:
                    if not _bound_ok(vals, s, t, dset, m, upper):
                        ok = False
                        break
                if not ok:
                    continue
            if level == last_level:
                if prep.x_last_any or (n + 1 - i) in prep.x_last:
                    return True
            elif rec(level + 1, i):
                return True
        return False

    return rec(0, 0)


def _search(pat: Pdvp, entries: tuple[int, ...], upper: int) -> Iterator[tuple[int, ...]]:
    """Yield occurrence index tuples in lexicographic order."""
    prep = _prepare(pat)
    n = len(entries)
    m = prep.m
    if m > n or not prep.passes_global_y(upper):
        return
    idx = [0] * m
    vals = [0] * m

    def rec(level: int, prev: int) -> Iterator[tuple[int, ...]]:
        for delta in prep.gaps(level, n - prev):
            i = prev + delta
            v = entries[i - 1]
            if v not in prep.z[level]:
                continue
            ok = True
            for a, sign in prep.order[level]:
                d = v - vals[a]
                if (d > 0) - (d < 0) != sign:
                    ok = False
                    break
            if not ok:
                continue
            idx[level] = i
            vals[level] = v
            for a, b, dset in prep.y_inner[level + 1]:
                if abs(vals[a] - vals[b]) not in dset:
                    ok = False
                    break
            if ok:
                for s, t, dset in prep.y_bound[level + 1]:
                    if not _bound_ok(vals, s, t, dset, m, upper):
                        ok = False
                        break
            if not ok:
                continue
            if level + 1 == m:
                if (n + 1 - i) in prep.x_last:
                    yield tuple(idx)
            else:
                yield from rec(level + 1, i)

    yield from rec(0, 0)


def _upper_sentinel(pat: Pdvp, seq) -> int:
    if pat.mode is Mode.PERMUTATION:
        if not isinstance(seq, PermSequence):
            raise ValueError("permutation pattern needs a PermSequence")
        return len(seq.values) + 1
    if not isinstance(seq, WordSequence):
        raise ValueError("word pattern needs a WordSequence")
    return seq.alphabet


def iter_occurrences(pat: Pdvp, seq) -> Iterator[Occurrence]:
    upper = _upper_sentinel(pat, seq)
    for indices in _search(pat, seq.entries, upper):
        yield Occurrence(indices)


def occurrences(pat: Pdvp, seq) -> list[Occurrence]:
    return list(iter_occurrences(pat, seq))


def count(pat: Pdvp, seq) -> int:
    return _count(_prepare(pat), seq.entries, _upper_sentinel(pat, seq))


def avoids(pat: Pdvp, seq) -> bool:
    return not _exists(_prepare(pat), seq.entries, _upper_sentinel(pat, seq))


def count_entries(pat: Pdvp, entries: tuple[int, ...], upper: int) -> int:
    """Count occurrences on a bare entry tuple; `upper` is the high sentinel value."""
    return _count(_prepare(pat), entries, upper)


def avoids_entries(pat: Pdvp, entries: tuple[int, ...], upper: int) -> bool:
    return not _exists(_prepare(pat), entries, upper)


def count_entries_ending_at(pat: Pdvp, entries: tuple[int, ...], upper: int, last: int) -> int:
    """Count occurrences whose final index equals `last` (1-based)."""
    return sum(1 for ix in _search(pat, entries, upper) if ix[-1] == last)

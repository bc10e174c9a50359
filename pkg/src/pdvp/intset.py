"""Symbolic sets of non-negative integers with decidable membership.

These are the sets allowed in the place (X), difference (Y) and value (Z)
components of a pattern: the positive integers P, the evens E (which include
0), the odds O, the positive multiples kP of some k >= 2, explicit finite
sets, and finite unions of those.
"""

from __future__ import annotations

from typing import Iterable

_POS = "P"
_EVEN = "E"
_ODD = "O"
_MULT = "kP"
_FIN = "fin"


class IntSet:
    """An immutable finite union of set atoms.

    Atoms are tagged tuples: ("P",), ("E",), ("O",), ("kP", k) with k >= 2,
    or ("fin", members) with members a sorted tuple of distinct non-negative
    integers.  Use the module constructors rather than building atoms by hand.
    """

    __slots__ = ("_atoms", "_upto")

    def __init__(self, atoms: Iterable[tuple]):
        seen = []
        for atom in atoms:
            if atom not in seen:
                seen.append(atom)
        if not seen:
            raise ValueError("IntSet requires at least one atom")
        self._atoms = tuple(seen)
        self._upto: dict[int, tuple[int, ...]] = {}

    @property
    def atoms(self) -> tuple:
        return self._atoms

    def __contains__(self, x: int) -> bool:
        if x < 0:
            raise ValueError(f"membership domain is non-negative integers, got {x}")
        for atom in self._atoms:
            kind = atom[0]
            if kind == _POS:
                if x >= 1:
                    return True
            elif kind == _EVEN:
                if x % 2 == 0:
                    return True
            elif kind == _ODD:
                if x % 2 == 1:
                    return True
            elif kind == _MULT:
                if x >= 1 and x % atom[1] == 0:
                    return True
            else:
                if x in atom[1]:
                    return True
        return False

    def members_up_to(self, limit: int) -> tuple[int, ...]:
        """All members <= limit, ascending.  Used to enumerate index gaps.

        Results are memoised per limit; the enumeration loops hit the same
        small limits millions of times.
        """
        if limit < 0:
            return ()
        got = self._upto.get(limit)
        if got is not None:
            return got
        out: set[int] = set()
        for atom in self._atoms:
            kind = atom[0]
            if kind == _POS:
                out.update(range(1, limit + 1))
            elif kind == _EVEN:
                out.update(range(0, limit + 1, 2))
            elif kind == _ODD:
                out.update(range(1, limit + 1, 2))
            elif kind == _MULT:
                out.update(range(atom[1], limit + 1, atom[1]))
            else:
                out.update(v for v in atom[1] if v <= limit)
        result = tuple(sorted(out))
        self._upto[limit] = result
        return result

    @property
    def is_positives(self) -> bool:
        """Representation check: is this exactly the single atom P?"""
        return self._atoms == ((_POS,),)

    def finite_bound(self) -> int | None:
        """Largest member if the set is finite, else None."""
        best = -1
        for atom in self._atoms:
            if atom[0] != _FIN:
                return None
            if atom[1]:
                best = max(best, atom[1][-1])
        return best if best >= 0 else None

    def __or__(self, other: "IntSet") -> "IntSet":
        return IntSet(self._atoms + other._atoms)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntSet) and self._atoms == other._atoms

    def __hash__(self) -> int:
        return hash(self._atoms)

    def __repr__(self) -> str:
        return f"IntSet{self._atoms!r}"


POSITIVES = IntSet([(_POS,)])
EVENS = IntSet([(_EVEN,)])
ODDS = IntSet([(_ODD,)])


def multiples(k: int) -> IntSet:
    """Positive multiples of k.  k = 1 collapses to POSITIVES; k >= 2 keeps kP."""
    if k < 1:
        raise ValueError(f"multiples requires k >= 1, got {k}")
    if k == 1:
        return POSITIVES
    return IntSet([(_MULT, k)])


def finite(values: Iterable[int]) -> IntSet:
    members = sorted(set(values))
    if any(v < 0 for v in members):
        raise ValueError("finite sets hold non-negative integers only")
    return IntSet([(_FIN, tuple(members))])


def union(a: IntSet, b: IntSet) -> IntSet:
    return a | b

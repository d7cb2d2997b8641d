"""Pitch-class sets in arbitrary equal temperaments.

A :class:`PcSet` is an immutable sequence of pitch classes modulo ``tet``.
Pitches are ordinary ints; a set built with ``unique=False`` may hold
duplicates and then behaves as a multiset (this is how non-bijective voice
leadings are represented).

Normal order uses the packed-from-the-left convention: among the rotations of
minimal span, prefer the one whose inner spans, compared from the outermost
inwards, are smallest. Remaining ties (transpositionally symmetric sets) go to
the rotation starting on the lowest pitch class.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EmptySet, NotATriad, NotInvertibleMultiplier, PcsNetError


def _rotations(ordered: Sequence[int], tet: int) -> Iterator[tuple[int, ...]]:
    n = len(ordered)
    for k in range(n):
        yield tuple(ordered[k:]) + tuple(p + tet for p in ordered[:k])


def packed_key(chain: Sequence[int]) -> tuple[int, ...]:
    """Sort key of an ascending chain: span first, then inner spans outward-in."""
    r0 = chain[0]
    return tuple(chain[i] - r0 for i in range(len(chain) - 1, 0, -1))


def normal_chain(pitches: Iterable[int], tet: int) -> tuple[int, ...]:
    """Normal order as an ascending chain (wrapped pitches keep their +tet)."""
    ordered = sorted(p % tet for p in pitches)
    if not ordered:
        raise EmptySet("normal order of an empty set")
    return min(_rotations(ordered, tet), key=lambda c: (packed_key(c), c[0]))


@dataclass(frozen=True)
class PcSet:
    """Pitch-class set (or multiset) modulo ``tet``.

    Use :func:`pcs` to build one from arbitrary integers; the constructor
    itself only validates.
    """

    pitches: tuple[int, ...]
    tet: int = 12

    def __post_init__(self) -> None:
        if self.tet < 1:
            raise PcsNetError(f"tet must be positive, got {self.tet}")
        if not self.pitches:
            raise EmptySet("a pitch-class set needs at least one pitch")
        object.__setattr__(self, "pitches", tuple(int(p) for p in self.pitches))
        for p in self.pitches:
            if not 0 <= p < self.tet:
                raise PcsNetError(f"pitch {p} outside [0, {self.tet})")

    def __len__(self) -> int:
        return len(self.pitches)

    def __iter__(self) -> Iterator[int]:
        return iter(self.pitches)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.pitches) + "]"

    def _new(self, pitches: Iterable[int]) -> PcSet:
        return PcSet(tuple(p % self.tet for p in pitches), self.tet)

    @property
    def is_multiset(self) -> bool:
        return len(set(self.pitches)) != len(self.pitches)

    # orderings

    def normal_order(self) -> PcSet:
        return self._new(normal_chain(self.pitches, self.tet))

    def normal0_order(self) -> PcSet:
        chain = normal_chain(self.pitches, self.tet)
        return self._new(p - chain[0] for p in chain)

    def zero_order(self) -> PcSet:
        """Transpose so that the first pitch (as stored) is 0."""
        first = self.pitches[0]
        return self._new(p - first for p in self.pitches)

    def prime_form(self) -> PcSet:
        own = normal_chain(self.pitches, self.tet)
        inv = normal_chain((-p for p in self.pitches), self.tet)
        own = tuple(p - own[0] for p in own)
        inv = tuple(p - inv[0] for p in inv)
        return self._new(min(own, inv, key=packed_key))

    # group operations

    def transpose(self, t: int = 0) -> PcSet:
        return self._new(p + t for p in self.pitches)

    def invert(self) -> PcSet:
        return self._new(-p for p in self.pitches)

    def invert_pivot(self, pivot: int = 0) -> PcSet:
        return self._new(2 * pivot - p for p in self.pitches)

    def multiply(self, t: int = 1) -> PcSet:
        return self._new(p * t for p in self.pitches)

    def multiply_boulez(self, other: PcSet) -> PcSet:
        """Boulez multiplication: copy this set's interval shape onto every pitch of ``other``."""
        a0 = self.pitches[0]
        out = {(a - a0 + b) % self.tet for a in self.pitches for b in other.pitches}
        return PcSet(tuple(sorted(out)), self.tet)

    # interval content

    def interval_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.tet // 2)
        ps = self.pitches
        for i in range(len(ps)):
            for j in range(i + 1, len(ps)):
                d = (ps[j] - ps[i]) % self.tet
                ic = min(d, self.tet - d)
                if ic:
                    counts[ic - 1] += 1
        return tuple(counts)

    def lis_vector(self) -> tuple[int, ...]:
        """Linear interval sequence of the normal order."""
        chain = normal_chain(self.pitches, self.tet)
        return tuple(b - a for a, b in zip(chain, chain[1:]))

    def nro(self, op: str) -> PcSet:
        """Neo-Riemannian P, L or R on a 12-TET major or minor triad."""
        if self.tet != 12 or len(set(self.pitches)) != 3 or len(self.pitches) != 3:
            raise NotATriad(f"{self} is not a 12-TET triad")
        if self.prime_form().pitches != (0, 3, 7):
            raise NotATriad(f"{self} is not a major or minor triad")
        root, third, _ = normal_chain(self.pitches, self.tet)
        major = third - root == 4
        images = {
            # (major, op) -> offsets from the root
            (True, "P"): (0, 3, 7),
            (True, "L"): (4, 7, 11),
            (True, "R"): (9, 12, 16),
            (False, "P"): (0, 4, 7),
            (False, "L"): (-4, 0, 3),
            (False, "R"): (3, 7, 10),
        }
        try:
            offsets = images[major, op.upper()]
        except KeyError:
            raise PcsNetError(f"unknown Neo-Riemannian operator {op!r}") from None
        return self._new(root + o for o in offsets).normal_order()


def pcs(pitches: Iterable[int], tet: int = 12, unique: bool = True, ordered: bool = True) -> PcSet:
    """Build a :class:`PcSet`, reducing every pitch modulo ``tet``.

    >>> str(pcs([7, 0, 4, 12]))
    '[0,4,7]'
    """
    ps = [int(p) % tet for p in pitches]
    if unique:
        ps = list(dict.fromkeys(ps))
    if ordered:
        ps.sort()
    return PcSet(tuple(ps), tet)


_INT_LIST = re.compile(r"^\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]\s*$")


def parse_int_list(text: str) -> list[int]:
    m = _INT_LIST.match(text)
    if not m or m.group(1) is None:
        raise PcsNetError(f"not a bracketed integer list: {text!r}")
    return [int(v) for v in m.group(1).split(",")]


def parse_pcs(text: str, tet: int = 12, unique: bool = False, ordered: bool = False) -> PcSet:
    """Parse the textual form ``"[0,4,7]"``; order and duplicates are kept by default."""
    return pcs(parse_int_list(text), tet, unique=unique, ordered=ordered)


@dataclass(frozen=True)
class ToneRow:
    """Ordered row holding every pitch class of the temperament exactly once."""

    pitches: tuple[int, ...]
    tet: int = 12

    def __post_init__(self) -> None:
        ps = tuple(int(p) % self.tet for p in self.pitches)
        if sorted(ps) != list(range(self.tet)):
            raise PcsNetError(f"not a {self.tet}-tone row: {list(self.pitches)}")
        object.__setattr__(self, "pitches", ps)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.pitches) + "]"

    def _new(self, pitches: Iterable[int]) -> ToneRow:
        return ToneRow(tuple(p % self.tet for p in pitches), self.tet)

    def normal_order(self) -> ToneRow:
        return self.t(-self.pitches[0])

    def intervals(self) -> tuple[int, ...]:
        ps = self.pitches
        return tuple((b - a) % self.tet for a, b in zip(ps, ps[1:]))

    def t(self, t: int = 0) -> ToneRow:
        return self._new(p + t for p in self.pitches)

    def i(self) -> ToneRow:
        return self._new(-p for p in self.pitches)

    def r(self, t: int = 0) -> ToneRow:
        """Retrograde, then transpose by ``t``."""
        return self._new(p + t for p in reversed(self.pitches))

    def m(self, t: int = 1) -> ToneRow:
        if math.gcd(t, self.tet) != 1:
            raise NotInvertibleMultiplier(f"gcd({t}, {self.tet}) != 1")
        return self._new(p * t for p in self.pitches)

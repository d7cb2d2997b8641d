"""Voice-leading geometry: minimal distances and the two operator families.

Two chords of equal size are compared through their normal-order chains.
A voice leading from ``a`` to ``b`` pairs the i-th pitch of ``a``'s chain with
the i-th pitch of a cyclic rotation of ``b``'s chain, where wrapped pitches
are raised by one octave (``tet``) and the whole target may sit an octave
lower or higher. The minimum over these candidates is the minimal voice
leading distance; crossing-free leadings are optimal for every supported
norm, so nothing smaller is reachable by other pairings.

Chords of different size are compared by duplicating pitches of the smaller
one until the sizes match and keeping the best duplication.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from itertools import combinations_with_replacement, permutations, product
from typing import Iterator, Sequence

from . import metrics
from .errors import CardinalityMismatch, DimensionMismatch, PcsNetError, UnknownOperator
from .pitch import PcSet, normal_chain


class OperatorKind(Enum):
    DISTANCE = "O"
    VOICE_LEADING = "R"


_OP_TEXT = re.compile(r"^\s*(O|R|VL)\s*\(\s*([-+\d\s,]*)\)\s*$")


@dataclass(frozen=True)
class OperatorName:
    """Name of a distance operator ``O(...)`` or a voice-leading operator ``R(...)``.

    Distance names are position free: components are kept as non-negative
    magnitudes sorted descending with zeros dropped (the identity is
    ``O(0)``). Voice-leading names are positional and keep every signed
    component.
    """

    kind: OperatorKind
    components: tuple[int, ...]

    @classmethod
    def distance(cls, magnitudes: Sequence[int]) -> OperatorName:
        mags = [abs(int(m)) for m in magnitudes]
        return cls(OperatorKind.DISTANCE, tuple(sorted((m for m in mags if m), reverse=True)))

    @classmethod
    def voice_leading(cls, steps: Sequence[int]) -> OperatorName:
        return cls(OperatorKind.VOICE_LEADING, tuple(int(s) for s in steps))

    @classmethod
    def parse(cls, text: str) -> OperatorName:
        m = _OP_TEXT.match(text)
        if not m:
            raise UnknownOperator(f"cannot parse operator name {text!r}")
        body = m.group(2).strip()
        try:
            comps = [int(v) for v in body.split(",")] if body else []
        except ValueError:
            raise UnknownOperator(f"cannot parse operator name {text!r}") from None
        if m.group(1) == "O":
            if any(c < 0 for c in comps):
                raise UnknownOperator(f"distance operators take magnitudes only: {text!r}")
            return cls.distance(comps)
        if not comps:
            raise UnknownOperator(f"empty voice-leading operator {text!r}")
        return cls.voice_leading(comps)

    def __str__(self) -> str:
        if self.kind is OperatorKind.DISTANCE:
            return "O(" + (",".join(map(str, self.components)) or "0") + ")"
        return "R(" + ",".join(map(str, self.components)) + ")"

    def norm(self, metric: str = metrics.DEFAULT_METRIC) -> float:
        return metrics.finish(metrics.cost(self.components, metric), metric)


def _as_op(name: OperatorName | str) -> OperatorName:
    return name if isinstance(name, OperatorName) else OperatorName.parse(name)


def apply_distance_op(s: PcSet, name: OperatorName | str) -> frozenset[PcSet]:
    """All normal-ordered chords reachable from ``s`` through the distance operator.

    Every placement of the magnitudes on the pitches of ``s`` is tried with
    both signs. Cardinality is preserved, so a move onto an occupied pitch
    yields a multiset.
    """
    op = _as_op(name)
    if op.kind is not OperatorKind.DISTANCE:
        raise UnknownOperator(f"{op} is not a distance operator")
    mags = op.components
    n = len(s)
    if len(mags) > n:
        raise DimensionMismatch(f"{op} has {len(mags)} components, chord has {n}")
    out = set()
    for positions in permutations(range(n), len(mags)):
        for signs in product((1, -1), repeat=len(mags)):
            moved = list(s.pitches)
            for pos, mag, sign in zip(positions, mags, signs):
                moved[pos] += sign * mag
            out.add(PcSet(tuple(p % s.tet for p in moved), s.tet).normal_order())
    if not mags:
        out.add(s.normal_order())
    return frozenset(out)


def apply_vl_op(s: PcSet, name: OperatorName | str) -> PcSet:
    """Move each pitch of the normal order of ``s`` by the matching component."""
    op = _as_op(name)
    if op.kind is not OperatorKind.VOICE_LEADING:
        raise UnknownOperator(f"{op} is not a voice-leading operator")
    if len(op.components) != len(s):
        raise DimensionMismatch(f"{op} has {len(op.components)} components, chord has {len(s)}")
    chain = normal_chain(s.pitches, s.tet)
    moved = tuple((p + n) % s.tet for p, n in zip(chain, op.components))
    return PcSet(moved, s.tet).normal_order()


def _targets(y: Sequence[int], tet: int) -> Iterator[tuple[int, ...]]:
    n = len(y)
    for shift in (0, -tet, tet):
        for k in range(n):
            yield tuple(v + shift for v in y[k:]) + tuple(v + tet + shift for v in y[:k])


def _check_pair(a: PcSet, b: PcSet) -> None:
    if a.tet != b.tet:
        raise PcsNetError(f"temperaments differ: {a.tet} vs {b.tet}")


def minimal_leading(a: PcSet, b: PcSet, metric: str = metrics.DEFAULT_METRIC):
    """Exact cost and signed steps of the minimal voice leading from ``a`` to ``b``.

    Steps are positioned along the normal order of ``a``. The first minimum in
    candidate order wins, so the result is deterministic.
    """
    _check_pair(a, b)
    metrics.check_metric(metric)
    if len(a) != len(b):
        raise CardinalityMismatch(f"cardinalities differ ({len(a)} vs {len(b)}); use nonbij_distance")
    x = normal_chain(a.pitches, a.tet)
    y = normal_chain(b.pitches, b.tet)
    best = None
    for t in _targets(y, a.tet):
        steps = tuple(ti - xi for ti, xi in zip(t, x))
        c = metrics.cost(steps, metric)
        if best is None or c < best[0]:
            best = (c, steps)
    return best


def vl_distance(a: PcSet, b: PcSet, metric: str = metrics.DEFAULT_METRIC) -> float:
    c, _ = minimal_leading(a, b, metric)
    return metrics.finish(c, metric)


def _duplications(small: PcSet, size: int) -> Iterator[PcSet]:
    base = sorted(small.pitches)
    for extra in combinations_with_replacement(range(len(base)), size - len(base)):
        yield PcSet(tuple(sorted(base + [base[i] for i in extra])), small.tet)


def _best_duplication(a: PcSet, b: PcSet, metric: str):
    """(cost, steps, multiset, a_is_smaller) of the best duplication of the smaller chord."""
    a_small = len(a) < len(b)
    small, large = (a, b) if a_small else (b, a)
    best = None
    for multi in _duplications(small, len(large)):
        src, dst = (multi, b) if a_small else (a, multi)
        c, steps = minimal_leading(src, dst, metric)
        if best is None or c < best[0]:
            best = (c, steps, multi)
    return best + (a_small,)


def nonbij_distance(a: PcSet, b: PcSet, metric: str = metrics.DEFAULT_METRIC) -> tuple[float, PcSet]:
    """Minimal distance between chords of different size, and the winning multiset.

    The multiset is the smaller chord with some pitches doubled; duplications
    are tried in lexicographic order of the doubled indices.
    """
    _check_pair(a, b)
    if len(a) == len(b):
        raise CardinalityMismatch("nonbij_distance needs chords of different size")
    c, _, multi, _ = _best_duplication(a, b, metric)
    return metrics.finish(c, metric), multi


def generalized_leading(a: PcSet, b: PcSet, metric: str = metrics.DEFAULT_METRIC):
    """Distance, signed steps and effective source chord for any pair of chords.

    For chords of different size the source is ``a`` doubled up when ``a`` is
    the smaller one, otherwise ``a`` itself (leading into a doubled ``b``).
    """
    if len(a) == len(b):
        c, steps = minimal_leading(a, b, metric)
        return metrics.finish(c, metric), steps, a
    c, steps, multi, a_small = _best_duplication(a, b, metric)
    return metrics.finish(c, metric), steps, (multi if a_small else a)


def ops_name_vl(a: PcSet, b: PcSet, metric: str = metrics.DEFAULT_METRIC) -> OperatorName:
    _, steps, _ = generalized_leading(a, b, metric)
    return OperatorName.voice_leading(steps)


def ops_name_distance(a: PcSet, b: PcSet, metric: str = metrics.DEFAULT_METRIC) -> OperatorName:
    _, steps, _ = generalized_leading(a, b, metric)
    return OperatorName.distance(steps)


def generalized_ops_name(a: PcSet, b: PcSet, metric: str = metrics.DEFAULT_METRIC) -> tuple[PcSet, OperatorName]:
    """Effective source chord and the voice-leading operator taking it to ``b``."""
    _, steps, src = generalized_leading(a, b, metric)
    return src, OperatorName.voice_leading(steps)


def iv_distance(a: Sequence[int], b: Sequence[int], metric: str = metrics.DEFAULT_METRIC) -> float:
    """Distance between two interval vectors (or any feature vectors)."""
    return metrics.distance(a, b, metric)

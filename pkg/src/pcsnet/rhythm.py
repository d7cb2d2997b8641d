"""Rhythmic sequences as exact rational durations (whole note = 1)."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from . import metrics
from .errors import CardinalityMismatch, NonPositiveDuration, PcsNetError, UnknownDuration

DURATIONS: dict[str, Fraction] = {
    "w": Fraction(1, 1),
    "h": Fraction(1, 2),
    "q": Fraction(1, 4),
    "e": Fraction(1, 8),
    "s": Fraction(1, 16),
    "t": Fraction(1, 32),
    "wd": Fraction(3, 2),
    "hd": Fraction(3, 4),
    "qd": Fraction(3, 8),
    "ed": Fraction(3, 16),
    "sd": Fraction(3, 32),
    "qt": Fraction(1, 6),
    "et": Fraction(1, 12),
    "st": Fraction(1, 24),
    "qq": Fraction(1, 5),
    "eq": Fraction(1, 10),
    "sq": Fraction(1, 20),
}
SYMBOLS: dict[Fraction, str] = {v: k for k, v in DURATIONS.items()}

# reference inter-onset intervals for duration vectors: 1/8 .. 9/8
DEFAULT_REFS: tuple[Fraction, ...] = tuple(Fraction(k, 8) for k in range(1, 10))

DurationLike = Union[Fraction, int, str]


def to_duration(value: DurationLike) -> Fraction:
    """Accept a symbol (``'q'``), a fraction string (``'3/8'``) or a number."""
    if isinstance(value, str):
        v = value.strip()
        if v in DURATIONS:
            return DURATIONS[v]
        try:
            return Fraction(v)
        except ValueError:
            raise UnknownDuration(f"unknown duration {value!r}") from None
    if isinstance(value, float):
        return Fraction(value).limit_denominator(1 << 16)
    return Fraction(value)


@dataclass(frozen=True)
class RhythmSeq:
    durations: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        ds = tuple(Fraction(d) for d in self.durations)
        if not ds:
            raise PcsNetError("a rhythm sequence needs at least one duration")
        for d in ds:
            if d <= 0:
                raise NonPositiveDuration(f"duration {d} is not positive")
        object.__setattr__(self, "durations", ds)

    def __len__(self) -> int:
        return len(self.durations)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.durations)

    def __str__(self) -> str:
        return "[" + ",".join(str(d) for d in self.durations) + "]"

    @property
    def total(self) -> Fraction:
        return sum(self.durations, Fraction(0))

    def augment(self, t: DurationLike = "e") -> RhythmSeq:
        t = to_duration(t)
        return RhythmSeq(tuple(d + t for d in self.durations))

    def diminish(self, t: DurationLike = "e") -> RhythmSeq:
        t = to_duration(t)
        return RhythmSeq(tuple(d - t for d in self.durations))

    def retrograde(self) -> RhythmSeq:
        return RhythmSeq(self.durations[::-1])

    def is_non_retrogradable(self) -> bool:
        return self.durations == self.durations[::-1]

    def prime_form(self) -> RhythmSeq:
        """Divide by the rational gcd of all durations: smallest integer ratios."""
        lcm = math.lcm(*(d.denominator for d in self.durations))
        ints = [int(d * lcm) for d in self.durations]
        g = math.gcd(*ints)
        return RhythmSeq(tuple(Fraction(i // g) for i in ints))

    def normal_order(self) -> RhythmSeq:
        """Lexicographically least rotation."""
        ds = self.durations
        return RhythmSeq(min(ds[k:] + ds[:k] for k in range(len(ds))))

    def onsets(self) -> tuple[Fraction, ...]:
        out, t = [], Fraction(0)
        for d in self.durations:
            out.append(t)
            t += d
        return tuple(out)

    def duration_vector(self, lseq: Sequence[DurationLike] | None = None) -> tuple[int, ...]:
        """Count onset-to-onset intervals matching each reference duration exactly."""
        refs = DEFAULT_REFS if lseq is None else tuple(to_duration(r) for r in lseq)
        index = {r: i for i, r in enumerate(refs)}
        counts = [0] * len(refs)
        on = self.onsets()
        for i in range(len(on)):
            for j in range(i + 1, len(on)):
                k = index.get(on[j] - on[i])
                if k is not None:
                    counts[k] += 1
        return tuple(counts)

    def symbols(self) -> list[str]:
        """Render back to duration symbols; fails on durations outside the table."""
        try:
            return [SYMBOLS[d] for d in self.durations]
        except KeyError as exc:
            raise UnknownDuration(f"no symbol for duration {exc.args[0]}") from None


def parse_durations(symbols: Iterable[DurationLike]) -> RhythmSeq:
    return RhythmSeq(tuple(to_duration(s) for s in symbols))


def render_durations(seq: RhythmSeq) -> list[str]:
    return seq.symbols()


_RHYTHM_TEXT = re.compile(r"^\s*\[(.*)\]\s*$")


def parse_rhythm(text: str) -> RhythmSeq:
    """Parse ``"[1/4,1/8,1/8]"``; symbols such as ``"[q,e,e]"`` are accepted too."""
    m = _RHYTHM_TEXT.match(text)
    if not m or not m.group(1).strip():
        raise PcsNetError(f"not a bracketed rhythm: {text!r}")
    return parse_durations(v for v in m.group(1).split(","))


def rhythm_distance(a: RhythmSeq, b: RhythmSeq, metric: str = metrics.DEFAULT_METRIC) -> float:
    """Minimal distance between ``a`` and any cyclic rotation of ``b``."""
    metrics.check_metric(metric)
    if len(a) != len(b):
        raise CardinalityMismatch(f"rhythms of different length ({len(a)} vs {len(b)})")
    bd = b.durations
    best = min(
        metrics.cost((x - y for x, y in zip(a.durations, bd[k:] + bd[:k])), metric)
        for k in range(len(bd))
    )
    return metrics.finish(best, metric)

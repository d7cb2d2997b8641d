"""Data sonification: two-column series -> scale degrees -> Standard MIDI File."""

from __future__ import annotations

import json
import math
import re
import struct
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import EmptySeries, NoteRange, ParseError, PcsNetError, UnknownScale
from .rhythm import DurationLike, to_duration

SCALES: dict[str, tuple[int, ...]] = {
    "chromatic": tuple(range(12)),
    "major": (0, 2, 4, 5, 7, 9, 11),
    "natural_minor": (0, 2, 3, 5, 7, 8, 10),
    "pentatonic": (0, 2, 4, 7, 9),
    "wholetone": (0, 2, 4, 6, 8, 10),
}

DEFAULT_VELOCITY = 80


@dataclass(frozen=True)
class DataSeries:
    x: tuple[float, ...]
    y: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.x) != len(self.y):
            raise PcsNetError("x and y must have the same length")

    def __len__(self) -> int:
        return len(self.y)


@dataclass(frozen=True)
class ScaleMap:
    name: str
    degrees: tuple[int, ...]

    @property
    def nnote(self) -> int:
        return len(self.degrees)


@dataclass(frozen=True)
class NoteEvent:
    """Notes sounding together for ``duration`` whole notes."""

    notes: tuple[int, ...]
    duration: Fraction
    velocity: int = DEFAULT_VELOCITY

    def __post_init__(self) -> None:
        object.__setattr__(self, "notes", tuple(int(n) for n in self.notes))
        object.__setattr__(self, "duration", Fraction(self.duration))
        if not self.notes:
            raise PcsNetError("an event needs at least one note")
        if self.duration <= 0:
            raise PcsNetError(f"event duration must be positive, got {self.duration}")


@dataclass(frozen=True)
class ScoreEvents:
    events: tuple[NoteEvent, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self) -> Iterator[NoteEvent]:
        return iter(self.events)

    def to_json(self) -> dict:
        return {
            "events": [
                {"notes": list(e.notes), "duration": str(e.duration), "velocity": e.velocity}
                for e in self.events
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> ScoreEvents:
        return cls(tuple(
            NoteEvent(tuple(e["notes"]), Fraction(e["duration"]), int(e.get("velocity", DEFAULT_VELOCITY)))
            for e in data["events"]
        ))


def read_series(path: str | Path) -> DataSeries:
    """Two numeric columns separated by whitespace or commas; ``#`` starts a comment.

    Extra columns are ignored.
    """
    xs, ys = [], []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = [f for f in re.split(r"[,\s]+", line) if f]
            if len(fields) < 2:
                raise ParseError(lineno, "expected two columns")
            try:
                xs.append(float(fields[0]))
                ys.append(float(fields[1]))
            except ValueError:
                raise ParseError(lineno, f"non-numeric field in {line!r}") from None
    if not ys:
        raise EmptySeries(f"{path} holds no data")
    return DataSeries(tuple(xs), tuple(ys))


def scale_map(name: str) -> ScaleMap:
    try:
        return ScaleMap(name, SCALES[name])
    except KeyError:
        raise UnknownScale(f"unknown scale {name!r}; choose from {', '.join(SCALES)}") from None


def midi_map(
    data: DataSeries | Sequence[float],
    scale: ScaleMap,
    base_note: int = 60,
    octaves: int = 1,
    duration: DurationLike = Fraction(1, 4),
    velocity: int = DEFAULT_VELOCITY,
) -> ScoreEvents:
    """Min-max scale ``y`` onto ``nnote * octaves`` scale steps above ``base_note``.

    A constant series maps every value to the lowest step.
    """
    ys = data.y if isinstance(data, DataSeries) else tuple(data)
    if not ys:
        raise EmptySeries("nothing to map")
    steps = scale.nnote * octaves
    lo, hi = min(ys), max(ys)
    dur = to_duration(duration)
    events = []
    for y in ys:
        idx = 0 if hi == lo else math.floor((y - lo) / (hi - lo) * (steps - 1) + 0.5)
        note = base_note + 12 * (idx // scale.nnote) + scale.degrees[idx % scale.nnote]
        events.append(NoteEvent((note,), dur, velocity))
    return ScoreEvents(tuple(events))


def _vlq(value: int) -> bytes:
    out = [value & 0x7F]
    value >>= 7
    while value:
        out.append((value & 0x7F) | 0x80)
        value >>= 7
    return bytes(reversed(out))


def midi_bytes(events: Iterable[NoteEvent], ticks_per_quarter: int = 480, tempo_bpm: int = 120) -> bytes:
    """Encode events as a single-track format-0 Standard MIDI File on channel 0.

    Durations are in whole notes, so one whole note lasts
    ``4 * ticks_per_quarter`` ticks; fractional tick counts are rounded.
    """
    track = bytearray()
    tempo = round(60_000_000 / tempo_bpm)
    track += b"\x00\xff\x51\x03" + tempo.to_bytes(3, "big")
    for ev in events:
        for n in ev.notes:
            if not 0 <= n <= 127:
                raise NoteRange(f"MIDI note {n} outside 0-127")
        if not 1 <= ev.velocity <= 127:
            raise NoteRange(f"velocity {ev.velocity} outside 1-127")
        ticks = round(ev.duration * 4 * ticks_per_quarter)
        for n in ev.notes:
            track += b"\x00" + bytes((0x90, n, ev.velocity))
        for k, n in enumerate(ev.notes):
            track += _vlq(ticks if k == 0 else 0) + bytes((0x80, n, 0))
    track += b"\x00\xff\x2f\x00"
    header = b"MThd" + struct.pack(">IHHH", 6, 0, 1, ticks_per_quarter)
    return header + b"MTrk" + struct.pack(">I", len(track)) + bytes(track)


def write_midi(
    events: ScoreEvents | Iterable[NoteEvent],
    path: str | Path,
    ticks_per_quarter: int = 480,
    tempo_bpm: int = 120,
) -> None:
    Path(path).write_bytes(midi_bytes(events, ticks_per_quarter, tempo_bpm))


def write_events_json(events: ScoreEvents, path: str | Path) -> None:
    Path(path).write_text(json.dumps(events.to_json()) + "\n", encoding="utf-8")

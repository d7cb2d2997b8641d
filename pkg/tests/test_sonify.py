from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcsnet.errors import EmptySeries, NoteRange, ParseError, UnknownScale
from pcsnet.sonify import (
    SCALES,
    DataSeries,
    NoteEvent,
    ScoreEvents,
    midi_bytes,
    midi_map,
    read_series,
    scale_map,
    write_midi,
)

from oracles import parse_smf


def test_read_series(tmp_path):
    p = tmp_path / "a.txt"
    p.write_text("# header\n0 1\n\n1 2\n")
    assert read_series(p) == DataSeries((0.0, 1.0), (1.0, 2.0))
    q = tmp_path / "b.txt"
    q.write_text("0,1\n1,2\n")
    assert read_series(q) == read_series(p)
    (tmp_path / "e.txt").write_text("")
    with pytest.raises(EmptySeries):
        read_series(tmp_path / "e.txt")
    (tmp_path / "bad.txt").write_text("0 1\n1 x\n")
    with pytest.raises(ParseError) as err:
        read_series(tmp_path / "bad.txt")
    assert err.value.line == 2


def test_scales():
    assert scale_map("major").nnote == 7
    assert scale_map("chromatic").nnote == 12
    with pytest.raises(UnknownScale):
        scale_map("unknown")


def test_midi_map_examples():
    notes = [e.notes[0] for e in midi_map(DataSeries((0, 1), (0, 1)), scale_map("chromatic"))]
    assert notes == [60, 71]
    assert {e.notes[0] for e in midi_map([3, 3, 3], scale_map("major"), base_note=48)} == {48}
    ev = midi_map([5, 1, 9], scale_map("pentatonic"), octaves=2)
    assert ev.events[1].notes == (60,) and ev.events[2].notes == (60 + 12 + 9,)


@given(
    st.lists(st.floats(-1e6, 1e6, allow_nan=False), min_size=1, max_size=40),
    st.sampled_from(sorted(SCALES)),
    st.integers(1, 3),
)
def test_midi_map_monotone_and_bounded(ys, scale, octaves):
    ev = midi_map(ys, scale_map(scale), base_note=40, octaves=octaves)
    notes = [e.notes[0] for e in ev]
    for i in range(len(ys)):
        assert 40 <= notes[i] <= 40 + 12 * octaves
        for j in range(len(ys)):
            if ys[i] <= ys[j]:
                assert notes[i] <= notes[j]


def test_midi_header_and_quarter(tmp_path):
    ev = ScoreEvents((NoteEvent((60,), F(1, 4)),))
    write_midi(ev, tmp_path / "a.mid")
    data = (tmp_path / "a.mid").read_bytes()
    assert data[:4] == bytes.fromhex("4D546864")
    assert data[4:14] == bytes.fromhex("00000006 0000 0001 01e0".replace(" ", ""))
    tpq, chords = parse_smf(data)
    assert tpq == 480 and chords == [((60,), 480, 80)]


def test_note_range():
    with pytest.raises(NoteRange):
        midi_bytes([NoteEvent((128,), F(1, 4))])


def test_events_json_round_trip():
    ev = ScoreEvents((NoteEvent((60, 64), F(3, 8), 90), NoteEvent((62,), F(1, 6))))
    assert ScoreEvents.from_json(ev.to_json()) == ev


@settings(max_examples=50)
@given(st.lists(
    st.tuples(st.integers(0, 127), st.sampled_from([F(1, 4), F(1, 8), F(3, 8), F(1, 16), F(1, 2), F(1), F(3, 2)])),
    min_size=1, max_size=30,
))
def test_midi_round_trip(pairs):
    ev = ScoreEvents(tuple(NoteEvent((n,), d) for n, d in pairs))
    tpq, chords = parse_smf(midi_bytes(ev))
    assert [(c[0][0], F(c[1], 4 * tpq)) for c in chords] == pairs

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pcsnet.errors import CardinalityMismatch, NonPositiveDuration, UnknownDuration
from pcsnet.rhythm import DURATIONS, RhythmSeq, parse_durations, parse_rhythm, rhythm_distance

from oracles import onset_intervals

REFS = [F(k, 8) for k in range(1, 10)]

symbols = st.sampled_from(sorted(DURATIONS))
rhythms = st.lists(symbols, min_size=1, max_size=7).map(parse_durations)


def R(*ds):
    return RhythmSeq(tuple(F(d) for d in ds))


def test_parse_examples():
    assert parse_durations(["q", "e", "e"]) == R("1/4", "1/8", "1/8")
    assert parse_durations(["w"]) == R(1)
    assert parse_durations(["qt"] * 3) == R(*["1/6"] * 3)
    assert parse_durations(["3/8", 1]) == R("3/8", 1)
    with pytest.raises(UnknownDuration):
        parse_durations(["x"])
    with pytest.raises(NonPositiveDuration):
        parse_durations(["0"])


def test_text_form():
    r = parse_rhythm("[1/4, 1/8,1/8]")
    assert str(r) == "[1/4,1/8,1/8]"
    assert parse_rhythm("[q,e,e]") == r


def test_augment_diminish():
    assert R("1/8", "1/8").augment("e") == R("1/4", "1/4")
    assert R("1/4").augment(0) == R("1/4")
    with pytest.raises(NonPositiveDuration):
        R("1/8").diminish("q")


def test_retrograde_and_palindromes():
    assert R("1/4", "1/8", "1/8").retrograde() == R("1/8", "1/8", "1/4")
    assert R("1/8").retrograde() == R("1/8")
    assert R("1/8", "1/4", "1/8").is_non_retrogradable()
    assert not R("1/4", "1/8", "1/8").is_non_retrogradable()
    assert R("1/2").is_non_retrogradable()


def test_prime_and_normal_forms():
    assert R("1/4", "1/8", "1/8").prime_form() == R(2, 1, 1)
    assert R(1, 1, 1).prime_form() == R(1, 1, 1)
    assert R("3/8", "1/4").prime_form() == R(3, 2)
    assert R("1/4", "1/8", "1/8").normal_order() == R("1/8", "1/8", "1/4")
    assert R("1/8", "1/8", "1/8").normal_order() == R("1/8", "1/8", "1/8")
    assert R("1/8", "1/4").normal_order() == R("1/8", "1/4")


def test_duration_vector_examples():
    assert R("1/8", "1/8").duration_vector() == (1, 0, 0, 0, 0, 0, 0, 0, 0)
    assert R("1/8").duration_vector() == (0,) * 9
    assert R("1/4", "1/4", "1/4").duration_vector() == (0, 2, 0, 1, 0, 0, 0, 0, 0)
    assert R("1/4", "1/4").duration_vector(["q", "h"]) == (1, 0)


def test_distance_examples():
    s = R("1/4", "1/8")
    assert rhythm_distance(s, s) == 0
    assert rhythm_distance(s, R("1/8", "1/4")) == 0
    assert rhythm_distance(s, R("1/4", "1/4")) == pytest.approx(1 / 8)
    with pytest.raises(CardinalityMismatch):
        rhythm_distance(s, R("1/4"))


def test_symbol_table_round_trip():
    syms = sorted(DURATIONS)
    assert parse_durations(syms).symbols() == syms


@given(rhythms, symbols)
def test_augment_diminish_inverse(r, t):
    assert r.augment(t).diminish(t) == r


@given(rhythms)
def test_retrograde_involution(r):
    assert r.retrograde().retrograde() == r


@given(rhythms)
def test_prime_form_integral_coprime(r):
    import math

    p = r.prime_form()
    assert all(d.denominator == 1 for d in p.durations)
    assert math.gcd(*(int(d) for d in p.durations)) == 1
    assert p.prime_form() == p


@given(rhythms, st.integers(0, 6))
def test_normal_order_rotation_canonical(r, k):
    k %= len(r)
    rot = RhythmSeq(r.durations[k:] + r.durations[:k])
    assert rot.normal_order() == r.normal_order()


@given(rhythms)
def test_duration_vector_matches_onset_oracle(r):
    ivs = onset_intervals(list(r.durations))
    assert r.duration_vector() == tuple(ivs.count(ref) for ref in REFS)


@given(rhythms)
def test_retrograde_vector_counts_offset_intervals(r):
    # the retrograde's onsets are the original's note ends, mirrored
    ends = [sum(r.durations[: k + 1], F(0)) for k in range(len(r))]
    ivs = [ends[j] - ends[i] for i in range(len(ends)) for j in range(i + 1, len(ends))]
    assert r.retrograde().duration_vector() == tuple(ivs.count(ref) for ref in REFS)


@given(rhythms, st.integers(0, 6), st.sampled_from(["euclidean", "taxicab", "chebyshev"]))
def test_distance_properties(r, k, metric):
    k %= len(r)
    rot = RhythmSeq(r.durations[k:] + r.durations[:k])
    assert rhythm_distance(r, rot, metric) == 0
    other = r.augment("s")
    assert rhythm_distance(r, other, metric) == pytest.approx(rhythm_distance(other, r, metric))
    assert rhythm_distance(r, other, metric) >= 0

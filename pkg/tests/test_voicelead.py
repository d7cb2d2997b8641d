import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcsnet.errors import CardinalityMismatch, DimensionMismatch, UnknownOperator
from pcsnet.pitch import pcs
from pcsnet.voicelead import (
    OperatorName,
    apply_distance_op,
    apply_vl_op,
    generalized_leading,
    generalized_ops_name,
    iv_distance,
    nonbij_distance,
    ops_name_distance,
    ops_name_vl,
    vl_distance,
)

from oracles import nonbij_brute, vl_by_assignment, vl_by_rotation_window

METRICS = ["euclidean", "taxicab", "chebyshev"]


@st.composite
def chord_pair(draw, max_size=5, tets=(12, 24)):
    tet = draw(st.sampled_from(tets))
    n = draw(st.integers(1, max_size))
    a = draw(st.sets(st.integers(0, tet - 1), min_size=n, max_size=n))
    b = draw(st.sets(st.integers(0, tet - 1), min_size=n, max_size=n))
    return pcs(a, tet), pcs(b, tet)


def test_operator_names():
    assert str(OperatorName.distance([0, 1, 2])) == "O(2,1)"
    assert str(OperatorName.distance([0, 0])) == "O(0)"
    assert str(OperatorName.parse("O(1, 2)")) == "O(2,1)"
    assert str(OperatorName.parse("VL(-1,-2,0)")) == "R(-1,-2,0)"
    assert OperatorName.parse("R(1,0)") == OperatorName.voice_leading([1, 0])
    for bad in ["X(1)", "O(-1)", "R()", "O(a)"]:
        with pytest.raises(UnknownOperator):
            OperatorName.parse(bad)


def test_distance_operator_examples():
    got = {str(s) for s in apply_distance_op(pcs([0, 4, 7]), "O(1)")}
    assert got == {"[0,3,7]", "[0,4,6]", "[0,4,8]", "[5,7,0]", "[1,4,7]", "[4,7,11]"}
    assert apply_distance_op(pcs([0, 4, 7]), "O(0)") == {pcs([0, 4, 7])}
    assert {s.pitches for s in apply_distance_op(pcs([0]), "O(1)")} == {(1,), (11,)}
    with pytest.raises(DimensionMismatch):
        apply_distance_op(pcs([0, 4]), "O(1,1,1)")


def test_vl_operator_examples():
    assert apply_vl_op(pcs([0, 4, 7]), "R(-1,-2,0)").pitches == (7, 11, 2)
    assert apply_vl_op(pcs([0, 4, 7]), "R(0,0,0)").pitches == (0, 4, 7)
    assert apply_vl_op(pcs([0, 3, 7]), "R(0,1,0)").pitches == (0, 4, 7)
    with pytest.raises(DimensionMismatch):
        apply_vl_op(pcs([0, 4, 7]), "R(1,0)")


def test_distance_examples():
    c = pcs([0, 4, 7])
    assert vl_distance(c, c) == 0
    assert vl_distance(c, pcs([0, 3, 7])) == 1
    assert vl_distance(c, pcs([7, 11, 2])) == pytest.approx(math.sqrt(5))
    assert iv_distance((1,) * 6, (0, 0, 1, 1, 1, 0)) == pytest.approx(math.sqrt(3))
    assert iv_distance(c.interval_vector(), pcs([0, 3, 7]).interval_vector()) == 0
    with pytest.raises(CardinalityMismatch):
        vl_distance(c, pcs([0, 4]))


def test_operator_name_examples():
    c = pcs([0, 4, 7])
    assert str(ops_name_distance(c, pcs([0, 3, 7]))) == "O(1)"
    assert str(ops_name_distance(c, c)) == "O(0)"
    assert str(ops_name_distance(c, pcs([7, 11, 2]))) == "O(2,1)"
    assert str(ops_name_vl(c, pcs([7, 11, 2]))) == "R(-1,-2,0)"
    assert str(ops_name_vl(c, c)) == "R(0,0,0)"
    assert str(ops_name_vl(pcs([0, 3, 7]), c)) == "R(0,1,0)"


def test_nonbijective_examples():
    d, multi = nonbij_distance(pcs([0, 4, 7]), pcs([0, 4]))
    assert (d, multi.pitches) == (3, (0, 4, 4))
    d, multi = nonbij_distance(pcs([0]), pcs([0, 0], unique=False))
    assert d == 0
    d, multi = nonbij_distance(pcs([0, 6]), pcs([0, 4, 7]))
    assert d == pytest.approx(nonbij_brute([0, 6], [0, 4, 7]))
    assert multi.pitches in {(0, 0, 6), (0, 6, 6)}
    with pytest.raises(CardinalityMismatch):
        nonbij_distance(pcs([0, 4]), pcs([1, 5]))


def test_generalized_leading_picks_effective_source():
    src, name = generalized_ops_name(pcs([0, 4]), pcs([0, 4, 7]))
    assert len(src) == 3 and set(src.pitches) == {0, 4}
    assert set(apply_vl_op(src, name).pitches) == {0, 4, 7}
    d, steps, src = generalized_leading(pcs([0, 4, 7]), pcs([0, 4]))
    assert src == pcs([0, 4, 7]) and d == 3


@settings(max_examples=150)
@given(chord_pair(), st.sampled_from(METRICS))
def test_vl_distance_matches_brute_force(pair, metric):
    a, b = pair
    d = vl_distance(a, b, metric)
    assert d == pytest.approx(vl_by_rotation_window(list(a.pitches), list(b.pitches), a.tet, metric), abs=1e-9)
    if len(a) <= 4:
        assert d == pytest.approx(vl_by_assignment(list(a.pitches), list(b.pitches), a.tet, metric), abs=1e-9)


@given(chord_pair(), st.sampled_from(METRICS))
def test_vl_distance_symmetric(pair, metric):
    a, b = pair
    assert vl_distance(a, b, metric) == pytest.approx(vl_distance(b, a, metric), abs=1e-12)
    assert vl_distance(a, a, metric) == 0


@given(chord_pair())
def test_vl_name_round_trip(pair):
    a, b = pair
    name = ops_name_vl(a, b)
    assert apply_vl_op(a, name) == b.normal_order()
    assert name.norm() == pytest.approx(vl_distance(a, b))


@settings(max_examples=60)
@given(
    st.sets(st.integers(0, 11), min_size=1, max_size=4).map(pcs),
    st.lists(st.integers(0, 3), min_size=1, max_size=3),
)
def test_distance_operator_bound(x, mags):
    mags = mags[: len(x)]
    op = OperatorName.distance(mags)
    bound = math.sqrt(sum(m * m for m in mags))
    for y in apply_distance_op(x, op):
        if y.is_multiset:
            continue
        assert vl_distance(x, y) <= bound + 1e-9


@settings(max_examples=60)
@given(
    st.sets(st.integers(0, 11), min_size=1, max_size=3),
    st.sets(st.integers(0, 11), min_size=2, max_size=4),
)
def test_nonbij_matches_brute_force(a, b):
    if len(a) == len(b):
        return
    d, multi = nonbij_distance(pcs(a), pcs(b))
    assert d == pytest.approx(nonbij_brute(sorted(a), sorted(b)), abs=1e-9)
    small = a if len(a) < len(b) else b
    assert set(multi.pitches) == small and len(multi) == max(len(a), len(b))

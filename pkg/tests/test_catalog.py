from itertools import combinations, permutations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcsnet.catalog import Catalog, compositions, pcs_dictionary, rhythm_dictionary, rhythm_p_dictionary
from pcsnet.errors import BadCardinality
from pcsnet.pitch import ToneRow, pcs
from pcsnet.rhythm import parse_durations

from oracles import interval_vector, set_classes


@pytest.mark.parametrize("nc", range(1, 8))
def test_prime_counts_match_exhaustive_oracle(nc):
    cat, _ = pcs_dictionary(nc)
    assert len(cat) == len(set_classes(nc))


def test_small_catalogs():
    cat, z = pcs_dictionary(1)
    assert [str(r.element) for r in cat] == ["[0]"] and z == []
    cat, z = pcs_dictionary(3)
    assert len(cat) == 12 and cat.names[0] == "3-1"
    with pytest.raises(BadCardinality):
        pcs_dictionary(0)
    with pytest.raises(BadCardinality):
        pcs_dictionary(13)


def test_tetrachord_z_pair():
    cat, z = pcs_dictionary(4)
    zrows = [r for r in cat if r.name in z]
    assert sorted(r.element.pitches for r in zrows) == [(0, 1, 3, 7), (0, 1, 4, 6)]
    assert all(r.features == (1,) * 6 for r in zrows)
    assert all(n.endswith("Z") for n in z)


@pytest.mark.parametrize("nc", [4, 5, 6])
def test_z_list_matches_oracle(nc):
    classes = set_classes(nc)
    ivs = [interval_vector(next(iter(c))) for c in classes]
    expected = sum(1 for v in ivs if ivs.count(v) > 1)
    _, z = pcs_dictionary(nc)
    assert len(z) == expected


def test_rows_reproducible_from_elements():
    cat, _ = pcs_dictionary(5)
    for r in cat:
        assert r.features == r.element.interval_vector()
        assert r.element == r.element.prime_form()


def test_normal_modes():
    orbits = {frozenset(frozenset((p + t) % 12 for p in c) for t in range(12)) for c in combinations(range(12), 3)}
    for order in ("normal", "normal0"):
        cat, _ = pcs_dictionary(3, order=order)
        assert len(cat) == len(orbits) == 19
    cat, _ = pcs_dictionary(3, order="normal0")
    assert all(r.element.pitches[0] == 0 for r in cat)
    cat, _ = pcs_dictionary(3, order="normal")
    assert all(r.element.normal_order() == r.element for r in cat)


def test_row_restricted_enumeration():
    cat, _ = pcs_dictionary(3, row=[0, 4, 7, 11])
    assert {r.element.pitches for r in cat} == {pcs(s).prime_form().pitches for s in [(0, 4, 7), (4, 7, 11), (0, 4, 11), (0, 7, 11)]}
    row = ToneRow(tuple(range(12)))
    assert len(pcs_dictionary(3, row=row)[0]) == 12


def test_csv_round_trip(tmp_path):
    cat, _ = pcs_dictionary(4)
    cat.write_csv(tmp_path / "d.csv")
    back = Catalog.read_csv(tmp_path / "d.csv")
    assert [(r.name, r.element, r.features) for r in back] == [(r.name, r.element, r.features) for r in cat]
    text = (tmp_path / "d.csv").read_bytes()
    assert b"\r" not in text and text.startswith(b"name,element,features\n")


def _rotation_classes(cells):
    return {min(c[k:] + c[:k] for k in range(len(c))) for c in cells}


def test_rhythm_dictionary_examples():
    cat, _ = rhythm_dictionary(None, ["q", "e", "e"])
    assert len(cat) == 1
    cat, _ = rhythm_dictionary(None, ["e"])
    assert len(cat) == 1 and cat.rows[0].non_retro
    syms = ["q", "e", "e", "s"]
    cat, _ = rhythm_dictionary(None, syms)
    cells = set(permutations(parse_durations(syms).durations))
    assert len(cells) == 12
    assert len(cat) == len(_rotation_classes(cells))
    for r in cat:
        assert r.features == r.element.duration_vector()


def test_rhythm_p_dictionary_examples():
    assert len(rhythm_p_dictionary(4, 2)[0]) == 2
    assert len(rhythm_p_dictionary(2, 2)[0]) == 1


@settings(max_examples=30)
@given(st.integers(1, 9), st.integers(1, 9))
def test_composition_count(n, k):
    if k > n:
        return
    comps = list(compositions(n, k))
    assert len(comps) == comb(n - 1, k - 1)
    assert all(sum(c) == n and min(c) >= 1 for c in comps)
    cat, _ = rhythm_p_dictionary(n, k)
    assert len(cat) == len(_rotation_classes(comps))


def test_rhythm_z_symmetry():
    cat, z = rhythm_p_dictionary(8, 4)
    feats = {r.name: r.features for r in cat}
    for name in z:
        assert any(other != name and feats[other] == feats[name] for other in z)

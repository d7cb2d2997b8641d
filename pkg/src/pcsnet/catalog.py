"""Exhaustive dictionaries of pitch-class sets and rhythmic cells.

A :class:`Catalog` is a table of ``(name, element, features)`` rows with one
row per equivalence class. Names are ``"<nc>-<k>"`` where ``k`` counts the
canonical forms in lexicographic order; a trailing ``Z`` marks classes that
share their feature vector with a different class.
"""

from __future__ import annotations

import csv
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterable, Iterator, Sequence, Union

from .errors import BadCardinality, NoSuchNode, PcsNetError
from .pitch import PcSet, ToneRow, parse_int_list, parse_pcs
from .rhythm import DurationLike, RhythmSeq, parse_durations, parse_rhythm, to_duration

Element = Union[PcSet, RhythmSeq]


class Ordering(str, Enum):
    PRIME = "prime"
    NORMAL = "normal"
    NORMAL0 = "normal0"


def _vec(values: Iterable) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


@dataclass(frozen=True)
class CatalogRow:
    name: str
    element: Element
    features: tuple[int, ...]
    non_retro: bool = False


@dataclass
class Catalog:
    kind: str  # "pcs" or "rhythm"
    rows: list[CatalogRow] = field(default_factory=list)
    tet: int = 12

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[CatalogRow]:
        return iter(self.rows)

    @property
    def names(self) -> list[str]:
        return [r.name for r in self.rows]

    def index_of(self, name: str) -> int:
        for i, row in enumerate(self.rows):
            if row.name == name:
                return i
        raise NoSuchNode(f"no catalog row named {name!r}")

    def write_csv(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["name", "element", "features"])
            for row in self.rows:
                w.writerow([row.name, str(row.element), _vec(row.features)])

    @classmethod
    def read_csv(cls, path: str | Path, kind: str = "pcs", tet: int = 12) -> Catalog:
        rows = []
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header != ["name", "element", "features"]:
                raise PcsNetError(f"{path}: expected header name,element,features, got {header}")
            for rec in reader:
                if not rec:
                    continue
                name, elem, feats = rec
                if kind == "rhythm":
                    el = parse_rhythm(elem)
                    rows.append(CatalogRow(name, el, tuple(parse_int_list(feats)), _cyclic_palindrome(el)))
                else:
                    rows.append(CatalogRow(name, parse_pcs(elem, tet), tuple(parse_int_list(feats))))
        return cls(kind, rows, tet)


def _name_rows(nc: int, classes: list[tuple]) -> tuple[list[str], list[str]]:
    """Assign ``nc-k`` names, adding ``Z`` where the feature vector is shared.

    ``classes`` is sorted; each entry is (canonical, element, features, zid)
    where two rows are Z-related if their features match and zids differ.
    """
    by_feat = defaultdict(set)
    for _, _, feats, zid in classes:
        by_feat[feats].add(zid)
    names, zlist = [], []
    for k, (_, _, feats, zid) in enumerate(classes, start=1):
        z = len(by_feat[feats]) > 1
        name = f"{nc}-{k}" + ("Z" if z else "")
        names.append(name)
        if z:
            zlist.append(name)
    return names, zlist


def pcs_dictionary(
    nc: int,
    tet: int = 12,
    order: Ordering | str = Ordering.PRIME,
    row: ToneRow | Sequence[int] | None = None,
) -> tuple[Catalog, list[str]]:
    """All pitch-class sets of cardinality ``nc``, one row per class.

    ``order`` selects the class and its representative: prime form (set
    classes), or transposition classes shown in normal order or in
    normal-0 order. When ``row`` is given only subsets of its pitches are
    enumerated. Z-relations are always judged on prime forms.
    """
    order = Ordering(order)
    pool = sorted({p % tet for p in (row.pitches if isinstance(row, ToneRow) else row)}) if row is not None else list(range(tet))
    if not 1 <= nc <= len(pool):
        raise BadCardinality(f"cardinality {nc} outside [1, {len(pool)}]")
    found: dict[tuple[int, ...], PcSet] = {}
    for combo in combinations(pool, nc):
        s = PcSet(combo, tet)
        key = s.prime_form() if order is Ordering.PRIME else s.normal0_order()
        if key.pitches not in found:
            found[key.pitches] = s.normal_order() if order is Ordering.NORMAL else key
    classes = []
    for canon in sorted(found):
        elem = found[canon]
        classes.append((canon, elem, elem.interval_vector(), elem.prime_form().pitches))
    names, zlist = _name_rows(nc, classes)
    rows = [CatalogRow(n, c[1], c[2]) for n, c in zip(names, classes)]
    return Catalog("pcs", rows, tet), zlist


def _cyclic_palindrome(seq: RhythmSeq) -> bool:
    ds = seq.durations
    return any(ds[k:] + ds[:k] == (ds[k:] + ds[:k])[::-1] for k in range(len(ds)))


def _rhythm_catalog(nc: int, cells: Iterable[tuple[Fraction, ...]]) -> tuple[Catalog, list[str]]:
    found = {RhythmSeq(c).normal_order().durations for c in cells}
    classes = []
    for canon in sorted(found):
        el = RhythmSeq(canon)
        classes.append((canon, el, el.duration_vector(), canon))
    names, zlist = _name_rows(nc, classes)
    rows = [CatalogRow(n, c[1], c[2], _cyclic_palindrome(c[1])) for n, c in zip(names, classes)]
    return Catalog("rhythm", rows), zlist


def rhythm_dictionary(nc: int | None, symbols: Sequence[DurationLike]) -> tuple[Catalog, list[str]]:
    """Rotation classes of every distinct ordering of the given durations.

    With ``nc`` smaller than the number of symbols, every distinct
    arrangement of ``nc`` of them is used.
    """
    durs = parse_durations(symbols).durations
    nc = len(durs) if nc is None else nc
    if not 1 <= nc <= len(durs):
        raise BadCardinality(f"cell length {nc} outside [1, {len(durs)}]")
    return _rhythm_catalog(nc, set(permutations(durs, nc)))


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Ordered ways of writing ``n`` as ``k`` positive parts."""
    for cuts in combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def rhythm_p_dictionary(n: int, nc: int, ref: DurationLike = "e") -> tuple[Catalog, list[str]]:
    """Rotation classes of all groupings of ``n`` reference units into ``nc`` cells."""
    if not 1 <= nc <= n:
        raise BadCardinality(f"cell length {nc} outside [1, {n}]")
    unit = to_duration(ref)
    return _rhythm_catalog(nc, (tuple(k * unit for k in comp) for comp in compositions(n, nc)))

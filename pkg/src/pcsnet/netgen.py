"""Network constructions over catalogs, chord progressions and orchestrations.

Threshold networks keep the pair ``(i, j)``, ``i < j``, when
``thdw < distance < thup`` (both strict) and, for ``prob < 1``, when the
pair's uniform draw falls below ``prob``. Draws come from one seeded 64-bit
PCG stream, one draw per pair in pair order, so the result does not depend
on how many worker processes computed the distances.
"""

from __future__ import annotations

import csv
import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple, Sequence

import numpy as np

from . import metrics
from .catalog import Catalog, CatalogRow
from .community import louvain
from .errors import EmptySequence, InvalidParams, NoSuchNode, PcsNetError
from .graph import Edge, Graph
from .pitch import PcSet, pcs
from .rhythm import rhythm_distance
from .voicelead import OperatorKind, OperatorName, generalized_leading, iv_distance


@dataclass(frozen=True)
class NetworkParams:
    thup: float = 1.5
    thdw: float = 0.0
    metric: str = metrics.DEFAULT_METRIC
    prob: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        metrics.check_metric(self.metric)
        if not self.thdw < self.thup:
            raise InvalidParams(f"need thdw < thup, got thdw={self.thdw} thup={self.thup}")
        if self.thdw < 0:
            raise InvalidParams(f"thdw must be non-negative, got {self.thdw}")
        if not 0 < self.prob <= 1:
            raise InvalidParams(f"prob must lie in (0, 1], got {self.prob}")
        if self.seed < 0:
            raise InvalidParams(f"seed must be unsigned, got {self.seed}")


# pairwise phase ---------------------------------------------------------

def _pair_values(kind: str, items: list, metric: str, pairs: list[tuple[int, int]]) -> list[tuple[float, str | None]]:
    out = []
    for i, j in pairs:
        if kind == "features":
            out.append((iv_distance(items[i], items[j], metric), None))
        elif kind == "vl":
            d, steps, _ = generalized_leading(items[i], items[j], metric)
            out.append((d, str(OperatorName.voice_leading(steps))))
        elif kind == "rhythm":
            out.append((rhythm_distance(items[i], items[j], metric), None))
        else:
            raise ValueError(kind)
    return out


def _pairwise(kind: str, items: list, metric: str, jobs: int = 1) -> tuple[list[tuple[int, int]], list]:
    n = len(items)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if jobs <= 1 or len(pairs) < 2:
        return pairs, _pair_values(kind, items, metric, pairs)
    size = math.ceil(len(pairs) / jobs)
    chunks = [pairs[k:k + size] for k in range(0, len(pairs), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_pair_values, [kind] * len(chunks), [items] * len(chunks), [metric] * len(chunks), chunks)
        values = [v for part in parts for v in part]
    return pairs, values


def _nodes(c: Catalog, pcslabel: bool) -> list[tuple[int, str]]:
    return [(i, str(r.element) if pcslabel else r.name) for i, r in enumerate(c.rows)]


def _threshold_graph(c: Catalog, kind: str, items: list, p: NetworkParams, jobs: int, pcslabel: bool) -> Graph:
    pairs, values = _pairwise(kind, items, p.metric, jobs)
    draws = np.random.default_rng(p.seed).random(len(pairs)) if p.prob < 1 else None
    edges = []
    for k, ((i, j), (d, label)) in enumerate(zip(pairs, values)):
        if p.thdw < d < p.thup and (draws is None or draws[k] < p.prob):
            edges.append(Edge(i, j, d, label))
    return Graph(_nodes(c, pcslabel), edges, directed=False)


def pcs_network(c: Catalog, p: NetworkParams = NetworkParams(), jobs: int = 1, pcslabel: bool = False) -> Graph:
    """Network of interval-vector distances between catalog rows."""
    return _threshold_graph(c, "features", [r.features for r in c.rows], p, jobs, pcslabel)


def vl_network(c: Catalog, p: NetworkParams = NetworkParams(thdw=0.1), jobs: int = 1, pcslabel: bool = False) -> Graph:
    """Network of minimal voice-leading distances; edges carry the ``R(...)`` operator."""
    return _threshold_graph(c, "vl", [r.element for r in c.rows], p, jobs, pcslabel)


def rhythm_network(c: Catalog, p: NetworkParams = NetworkParams(), jobs: int = 1, pcslabel: bool = False) -> Graph:
    """Network of distances between duration vectors."""
    return _threshold_graph(c, "features", [r.features for r in c.rows], p, jobs, pcslabel)


def r_lead_network(c: Catalog, p: NetworkParams = NetworkParams(thdw=0.1), jobs: int = 1, pcslabel: bool = False) -> Graph:
    """Network of minimal rhythm-leading distances between cells."""
    return _threshold_graph(c, "rhythm", [r.element for r in c.rows], p, jobs, pcslabel)


def vl_network_by_name(
    c: Catalog,
    name: OperatorName | str,
    metric: str = metrics.DEFAULT_METRIC,
    pcslabel: bool = False,
) -> Graph:
    """Keep the pairs whose minimal voice leading has the given operator name.

    A distance name ``O(...)`` matches position-free; an ``R(...)`` name must
    match the signed operator from the lower to the higher node id.
    """
    op = name if isinstance(name, OperatorName) else OperatorName.parse(name)
    items = [r.element for r in c.rows]
    edges = []
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            d, steps, _ = generalized_leading(items[i], items[j], metric)
            if op.kind is OperatorKind.DISTANCE:
                found = OperatorName.distance(steps)
            else:
                found = OperatorName.voice_leading(steps)
            if found == op and d > 0:
                edges.append(Edge(i, j, d, str(op)))
    return Graph(_nodes(c, pcslabel), edges, directed=False)


def ego_network(
    label: str,
    c: Catalog,
    thup_e: float = 5.0,
    thdw_e: float = 0.1,
    thup: float = 1.5,
    thdw: float = 0.1,
    metric: str = metrics.DEFAULT_METRIC,
) -> tuple[Graph, Graph]:
    """Ego graph (focal node to its alters) and the graph among the alters.

    ``label`` is a row name or an element in textual form.
    """
    metrics.check_metric(metric)
    ego = next((i for i, r in enumerate(c.rows) if label in (r.name, str(r.element))), None)
    if ego is None:
        raise NoSuchNode(f"no node labelled {label!r}")
    feats = [r.features for r in c.rows]
    ego_edges = []
    for j in range(len(feats)):
        if j == ego:
            continue
        d = iv_distance(feats[ego], feats[j], metric)
        if thdw_e < d < thup_e:
            ego_edges.append(Edge(ego, j, d))
    alters = [e.target for e in ego_edges]
    alter_edges = []
    for a, i in enumerate(alters):
        for j in alters[a + 1:]:
            d = iv_distance(feats[i], feats[j], metric)
            if thdw < d < thup:
                alter_edges.append(Edge(i, j, d))
    names = dict(_nodes(c, False))
    ego_graph = Graph([(n, names[n]) for n in [ego] + alters], ego_edges)
    alter_graph = Graph([(n, names[n]) for n in alters], alter_edges)
    return ego_graph, alter_graph


# progressions -----------------------------------------------------------

@dataclass(frozen=True)
class ChordSequence:
    chords: tuple[PcSet, ...]
    tet: int = 12

    def __len__(self) -> int:
        return len(self.chords)

    def __getitem__(self, item: slice) -> ChordSequence:
        return ChordSequence(tuple(self.chords[item]), self.tet)

    @classmethod
    def of(cls, chords: Sequence[Sequence[int]], tet: int = 12) -> ChordSequence:
        return cls(tuple(pcs(ch, tet) for ch in chords), tet)


def read_chord_sequence(path: str | Path) -> ChordSequence:
    """Read ``{"tet": 12, "chords": [[0,4,7], ...]}``."""
    text = Path(path).read_text(encoding="utf-8")
    if not text.strip():
        raise EmptySequence(f"{path} is empty")
    data = json.loads(text)
    chords = data.get("chords") or []
    if not chords:
        raise EmptySequence(f"{path} holds no chords")
    return ChordSequence.of(chords, int(data.get("tet", 12)))


def write_chord_sequence(seq: ChordSequence, path: str | Path) -> None:
    data = {"tet": seq.tet, "chords": [list(ch.pitches) for ch in seq.chords]}
    Path(path).write_text(json.dumps(data) + "\n", encoding="utf-8")


def _distinct_normal(seq: ChordSequence) -> list[PcSet]:
    return list(dict.fromkeys(ch.normal_order() for ch in seq.chords))


def score_dictionary(seq: ChordSequence) -> Catalog:
    """Distinct chords of a progression in normal order, by first appearance."""
    if not len(seq):
        raise EmptySequence("empty chord sequence")
    rows = [CatalogRow(str(ch), ch, ch.interval_vector()) for ch in _distinct_normal(seq)]
    return Catalog("pcs", rows, seq.tet)


class ScoreNetwork(NamedTuple):
    graph: Graph
    counts: list[int]
    avgdeg: float
    modularity: float
    partition: dict[int, int]


def _transition_graph(labels: list[str], walk: list[int], edge_label=None) -> Graph:
    trans = Counter(zip(walk, walk[1:]))
    edges = [Edge(u, v, n, edge_label(u, v) if edge_label else None) for (u, v), n in trans.items()]
    return Graph(list(enumerate(labels)), edges, directed=True)


def score_network(
    seq: ChordSequence,
    general: bool = True,
    metric: str = metrics.DEFAULT_METRIC,
    seed: int | None = 0,
) -> ScoreNetwork:
    """Directed progression network: one node per distinct chord, weights count transitions.

    Edge labels are voice-leading operators (``general=True``) or distance
    operators; chords of different size go through pitch duplication.
    """
    metrics.check_metric(metric)
    if not len(seq):
        raise EmptySequence("empty chord sequence")
    chords = _distinct_normal(seq)
    index = {ch: i for i, ch in enumerate(chords)}
    walk = [index[ch.normal_order()] for ch in seq.chords]

    def label(u: int, v: int) -> str:
        _, steps, _ = generalized_leading(chords[u], chords[v], metric)
        return str(OperatorName.voice_leading(steps) if general else OperatorName.distance(steps))

    g = _transition_graph([str(ch) for ch in chords], walk, label)
    counts = [0] * len(chords)
    for i in walk:
        counts[i] += 1
    comm = louvain(g, seed)
    return ScoreNetwork(g, counts, g.average_degree(), comm.modularity, comm.partition)


def score_subnetwork(
    seq: ChordSequence,
    start: int,
    end: int,
    general: bool = True,
    metric: str = metrics.DEFAULT_METRIC,
    seed: int | None = 0,
) -> ScoreNetwork:
    sub = seq[start:end]
    if not len(sub):
        raise EmptySequence(f"empty slice [{start}, {end})")
    return score_network(sub, general, metric, seed)


# orchestration ----------------------------------------------------------

@dataclass(frozen=True)
class OrchVector:
    """Which instruments sound on one beat; the first instrument is the most significant bit."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise PcsNetError(f"orchestration bits must be 0 or 1: {self.bits}")
        object.__setattr__(self, "bits", bits)

    @property
    def num(self) -> int:
        return int("".join(map(str, self.bits)) or "0", 2)


def read_orchestration(path: str | Path) -> tuple[list[str], list[OrchVector]]:
    """Read a 0/1 table with one row per beat and a header of instrument names."""
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if not header:
            raise EmptySequence(f"{path} is empty")
        seq = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise PcsNetError(f"{path}:{lineno}: expected {len(header)} columns, got {len(row)}")
            seq.append(OrchVector(tuple(int(v) for v in row)))
    if not seq:
        raise EmptySequence(f"{path} holds no beats")
    return header, seq


class OrchNetwork(NamedTuple):
    graph: Graph
    avgdeg: float
    modularity: float
    partition: dict[int, int]


def orchestral_network(seq: Sequence[OrchVector], seed: int | None = 0) -> OrchNetwork:
    """Directed network of successive orchestration vectors; nodes are labelled by ``num``."""
    if not seq:
        raise EmptySequence("empty orchestration sequence")
    distinct = list(dict.fromkeys(seq))
    index = {v: i for i, v in enumerate(distinct)}
    g = _transition_graph([str(v.num) for v in distinct], [index[v] for v in seq])
    comm = louvain(g, seed)
    return OrchNetwork(g, g.average_degree(), comm.modularity, comm.partition)

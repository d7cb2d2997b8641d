"""Network-driven compositional design.

A scale-free scaffold (Barabási–Albert growth from a star) is mapped onto a
reference network by degree rank, and the scaffold's Chinese-postman tour
reads out a sequence of chords or rhythmic cells.
"""

from __future__ import annotations

import heapq
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import cycle, islice
from pathlib import Path
from typing import NamedTuple, Sequence

from . import metrics
from .catalog import Catalog
from .errors import Disconnected, InvalidParams, NoSuchNode, PcsNetError, ScaffoldTooLarge
from .graph import Edge, Graph
from .netgen import NetworkParams, vl_network, vl_network_by_name
from .pitch import PcSet, normal_chain, parse_pcs
from .rhythm import RhythmSeq, parse_rhythm
from .sonify import DEFAULT_VELOCITY, NoteEvent, ScoreEvents
from .voicelead import OperatorName

EXACT_MATCHING_LIMIT = 14


class PostmanTour(NamedTuple):
    route: list[int]
    cost: float


def _dijkstra(adj: dict[int, list[tuple[int, int, float]]], source: int):
    dist = {source: 0}
    via: dict[int, tuple[int, int]] = {}  # node -> (previous node, edge index)
    heap = [(0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for eid, v, w in adj[u]:
            nd = d + w
            if v not in dist or nd < dist[v]:
                dist[v] = nd
                via[v] = (u, eid)
                heapq.heappush(heap, (nd, v))
    return dist, via


def _exact_matching(odd: list[int], dist) -> list[tuple[int, int]]:
    k = len(odd)
    full = (1 << k) - 1
    best: dict[int, tuple[float, tuple[int, int] | None]] = {0: (0, None)}

    def solve(mask: int) -> float:
        if mask in best:
            return best[mask][0]
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        choice = None
        for j in range(i + 1, k):
            if rest >> j & 1:
                c = dist[odd[i]][odd[j]] + solve(rest & ~(1 << j))
                if choice is None or c < choice[0]:
                    choice = (c, (i, j))
        best[mask] = choice
        return choice[0]

    solve(full)
    pairs, mask = [], full
    while mask:
        i, j = best[mask][1]
        pairs.append((odd[i], odd[j]))
        mask &= ~(1 << i) & ~(1 << j)
    return pairs


def _greedy_matching(odd: list[int], dist) -> list[tuple[int, int]]:
    candidates = sorted((dist[u][v], u, v) for a, u in enumerate(odd) for v in odd[a + 1:])
    used, pairs = set(), []
    for _, u, v in candidates:
        if u not in used and v not in used:
            used.update((u, v))
            pairs.append((u, v))
    return pairs


def chinese_postman(g: Graph, start: int) -> PostmanTour:
    """Shortest closed walk from ``start`` that uses every edge at least once.

    Odd-degree nodes are paired by a minimum-weight perfect matching on
    shortest-path distances (exact up to ``EXACT_MATCHING_LIMIT`` odd nodes,
    greedy beyond), the matched paths are doubled and an Eulerian circuit of
    the result is returned.
    """
    route, cost, _ = postman_route(g, start)
    return PostmanTour(route, cost)


def postman_route(g: Graph, start: int) -> tuple[list[int], float, str]:
    """:func:`chinese_postman` plus the matching mode used: "exact", "greedy" or "none"."""
    if g.directed:
        raise PcsNetError("chinese_postman needs an undirected graph")
    ids = g.node_ids
    if start not in ids:
        raise NoSuchNode(f"no node with id {start}")
    edges = [(e.source, e.target, e.weight) for e in g.edges]
    for u, v, w in edges:
        if not w > 0:
            raise InvalidParams(f"edge {u}-{v} has non-positive weight {w}")
    adj: dict[int, list[tuple[int, int, float]]] = {n: [] for n in ids}
    for eid, (u, v, w) in enumerate(edges):
        adj[u].append((eid, v, w))
        if u != v:
            adj[v].append((eid, u, w))

    seen, stack = {start}, [start]
    while stack:
        for _, v, _ in adj[stack.pop()]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    if len(seen) != len(ids):
        raise Disconnected(f"{len(ids) - len(seen)} node(s) unreachable from {start}")

    deg = g.degree()
    odd = [n for n in ids if deg[n] % 2]
    matching = "none"
    if odd:
        paths = {u: _dijkstra(adj, u) for u in odd}
        dist = {u: paths[u][0] for u in odd}
        if len(odd) <= EXACT_MATCHING_LIMIT:
            pairs, matching = _exact_matching(odd, dist), "exact"
        else:
            pairs, matching = _greedy_matching(odd, dist), "greedy"
        for u, v in pairs:
            via = paths[u][1]
            node = v
            while node != u:
                prev, eid = via[node]
                edges.append(edges[eid])
                node = prev
        adj = {n: [] for n in ids}
        for eid, (u, v, w) in enumerate(edges):
            adj[u].append((eid, v, w))
            if u != v:
                adj[v].append((eid, u, w))

    used = [False] * len(edges)
    ptr = {n: 0 for n in ids}
    stack, circuit = [start], []
    while stack:
        v = stack[-1]
        nbrs = adj[v]
        while ptr[v] < len(nbrs) and used[nbrs[ptr[v]][0]]:
            ptr[v] += 1
        if ptr[v] == len(nbrs):
            circuit.append(stack.pop())
        else:
            eid, u, _ = nbrs[ptr[v]]
            used[eid] = True
            stack.append(u)
    circuit.reverse()
    return circuit, sum(w for _, _, w in edges), matching


def barabasi_albert(nnodes: int, nedges: int, seed: int | None = 0) -> Graph:
    """Preferential-attachment graph grown from a star on ``nedges`` nodes.

    Each new node links to ``nedges`` distinct existing nodes picked with
    probability proportional to their degree, giving
    ``nedges * (nnodes - nedges) + nedges - 1`` edges.
    """
    if not 1 <= nedges < nnodes:
        raise InvalidParams(f"need 1 <= nedges < nnodes, got nedges={nedges} nnodes={nnodes}")
    rng = random.Random(seed)
    pairs = [(0, k) for k in range(1, nedges)]
    pool = [n for edge in pairs for n in edge]  # each node repeated once per incident edge
    for new in range(nedges, nnodes):
        targets: list[int] = []
        while len(targets) < nedges:
            t = rng.choice(pool) if pool else rng.randrange(new)
            if t not in targets:
                targets.append(t)
        pairs.extend((t, new) for t in targets)
        pool.extend(targets)
        pool.extend([new] * nedges)
    return Graph([(n, str(n)) for n in range(nnodes)], [Edge(u, v, 1) for u, v in pairs])


@dataclass(frozen=True)
class ByName:
    names: tuple[OperatorName | str, ...]


@dataclass(frozen=True)
class ByProb:
    thresholds: tuple[tuple[float, float], ...]  # (thdw, thup) per slice
    probs: tuple[float, ...]


def network_harmony_gen(
    c: Catalog,
    mode: ByName | ByProb,
    metric: str = metrics.DEFAULT_METRIC,
    seed: int = 0,
    pcslabel: bool = True,
) -> Graph:
    """Union of voice-leading network slices, selected by operator name or by distance band."""
    if isinstance(mode, ByName):
        slices = [vl_network_by_name(c, name, metric, pcslabel) for name in mode.names]
    else:
        if len(mode.thresholds) != len(mode.probs):
            raise InvalidParams("one probability per threshold band is needed")
        slices = [
            vl_network(c, NetworkParams(thup, thdw, metric, prob, seed), pcslabel=pcslabel)
            for (thdw, thup), prob in zip(mode.thresholds, mode.probs)
        ]
    seen, edges = set(), []
    for g in slices:
        for e in g.edges:
            if (e.source, e.target) not in seen:
                seen.add((e.source, e.target))
                edges.append(e)
    nodes = slices[0].nodes if slices else [(i, str(r.element) if pcslabel else r.name) for i, r in enumerate(c.rows)]
    return Graph(list(nodes), edges)


@dataclass(frozen=True)
class DesignSequence:
    items: tuple[str, ...]
    meta: dict = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.items)

    def pcsets(self, tet: int = 12) -> list[PcSet]:
        return [parse_pcs(it, tet) for it in self.items]

    def rhythms(self) -> list[RhythmSeq]:
        return [parse_rhythm(it) for it in self.items]

    def write_json(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps({"items": list(self.items)}) + "\n", encoding="utf-8")

    @classmethod
    def read_json(cls, path: str | Path) -> DesignSequence:
        return cls(tuple(json.loads(Path(path).read_text(encoding="utf-8"))["items"]))


def _design(ref: Graph, nnodes: int, nedges: int, nstart: int, seed: int | None, reverse: bool) -> DesignSequence:
    if nnodes < 1:
        raise InvalidParams(f"nnodes must be positive, got {nnodes}")
    if nnodes > len(ref.nodes):
        raise ScaffoldTooLarge(f"scaffold of {nnodes} nodes exceeds the {len(ref.nodes)}-node reference")
    if nnodes == 1:
        scaffold, (route, cost, matching) = Graph([(0, "0")]), ([0], 0, "none")
    else:
        scaffold = barabasi_albert(nnodes, nedges, seed)
        route, cost, matching = postman_route(scaffold, 0)
    sdeg, rdeg = scaffold.degree(), ref.degree()
    sign = 1 if reverse else -1
    scaffold_rank = sorted(scaffold.node_ids, key=lambda n: (sign * sdeg[n], n))
    ref_rank = sorted(ref.node_ids, key=lambda n: (-rdeg[n], n))
    assign = {s: ref_rank[(k + nstart) % len(ref_rank)] for k, s in enumerate(scaffold_rank)}
    labels = dict(ref.nodes)
    items = tuple(labels[assign[n]] for n in route)
    meta = {"cost": cost, "matching": matching, "route": route, "seed": seed}
    return DesignSequence(items, meta)


def harmonic_design(
    ref: Graph, nnodes: int, nedges: int, nstart: int = 0, seed: int | None = 0, reverse: bool = False
) -> DesignSequence:
    """Chord sequence read along the postman tour of a scale-free scaffold.

    Scaffold nodes ranked by degree (descending, ascending with ``reverse``)
    take the labels of ``ref`` nodes ranked by degree, offset by ``nstart``.
    """
    return _design(ref, nnodes, nedges, nstart, seed, reverse)


def rhythmic_design(
    ref: Graph, nnodes: int, nedges: int, nstart: int = 0, seed: int | None = 0, reverse: bool = False
) -> DesignSequence:
    """Same as :func:`harmonic_design` over a rhythm network."""
    return _design(ref, nnodes, nedges, nstart, seed, reverse)


def score_design(
    pitches: DesignSequence | Sequence[PcSet],
    durations: DesignSequence | Sequence[RhythmSeq],
    fac: float | Fraction = 1,
    tet: int = 12,
    base_note: int = 60,
    velocity: int = DEFAULT_VELOCITY,
) -> ScoreEvents:
    """One event per chord; durations run through the rhythm cells, cycling as needed.

    Chords are voiced upwards from ``base_note`` in normal order and every
    duration is multiplied by ``fac``.
    """
    chords = pitches.pcsets(tet) if isinstance(pitches, DesignSequence) else list(pitches)
    cells = durations.rhythms() if isinstance(durations, DesignSequence) else list(durations)
    stream = [d for cell in cells for d in cell.durations]
    if not chords or not stream:
        raise PcsNetError("score_design needs at least one chord and one duration")
    scale = Fraction(fac).limit_denominator(1 << 16) if isinstance(fac, float) else Fraction(fac)
    events = []
    for chord, dur in zip(chords, islice(cycle(stream), len(chords))):
        chain = normal_chain(chord.pitches, chord.tet)
        notes = tuple(base_note + round(p * 12 / chord.tet) for p in chain)
        events.append(NoteEvent(notes, dur * scale, velocity))
    return ScoreEvents(tuple(events))

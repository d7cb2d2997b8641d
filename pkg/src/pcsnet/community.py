"""Louvain community detection on undirected weighted graphs.

Each level moves single nodes to the neighbouring community with the largest
strictly positive modularity gain (ties go to the lowest community id), then
collapses communities into super-nodes. Levels repeat until no node moves.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass

from .graph import Graph

_EPS = 1e-12


def modularity(graph: Graph, partition: dict[int, int], resolution: float = 1.0) -> float:
    """Weighted modularity of ``partition`` on the undirected projection of ``graph``."""
    g = graph.undirected()
    m = sum(e.weight for e in g.edges)
    if m == 0:
        return 0.0
    internal: dict[int, float] = defaultdict(float)
    degree: dict[int, float] = defaultdict(float)
    for e in g.edges:
        cu, cv = partition[e.source], partition[e.target]
        degree[cu] += e.weight
        degree[cv] += e.weight
        if cu == cv:
            internal[cu] += e.weight
    return sum(internal[c] / m - resolution * (degree[c] / (2 * m)) ** 2 for c in degree)


@dataclass
class _Level:
    adj: list[dict[int, float]]  # neighbour -> weight, no self entries
    loops: list[float]

    @property
    def size(self) -> int:
        return len(self.adj)

    def degrees(self) -> list[float]:
        return [sum(a.values()) + 2 * s for a, s in zip(self.adj, self.loops)]


def _move_nodes(level: _Level, m2: float, order: list[int], resolution: float) -> tuple[list[int], bool]:
    k = level.degrees()
    comm = list(range(level.size))
    tot = k[:]
    improved = False
    moved = True
    while moved:
        moved = False
        for i in order:
            ci = comm[i]
            links: dict[int, float] = defaultdict(float)
            for j, w in level.adj[i].items():
                links[comm[j]] += w
            tot[ci] -= k[i]
            best, best_gain = ci, links.get(ci, 0.0) - resolution * tot[ci] * k[i] / m2
            for c in sorted(links):
                gain = links[c] - resolution * tot[c] * k[i] / m2
                if gain > best_gain + _EPS:
                    best, best_gain = c, gain
            tot[best] += k[i]
            comm[i] = best
            if best != ci:
                moved = improved = True
    return comm, improved


def _aggregate(level: _Level, comm: list[int]) -> tuple[_Level, list[int]]:
    relabel: dict[int, int] = {}
    for c in comm:
        relabel.setdefault(c, len(relabel))
    comm = [relabel[c] for c in comm]
    n = len(relabel)
    adj: list[dict[int, float]] = [defaultdict(float) for _ in range(n)]
    loops = [0.0] * n
    for i in range(level.size):
        loops[comm[i]] += level.loops[i]
        for j, w in level.adj[i].items():
            ci, cj = comm[i], comm[j]
            if ci == cj:
                if i < j:
                    loops[ci] += w
            else:
                adj[ci][cj] += w
    return _Level([dict(a) for a in adj], loops), comm


@dataclass
class Communities:
    partition: dict[int, int]
    modularity: float
    history: list[float]

    @property
    def count(self) -> int:
        return len(set(self.partition.values()))


def louvain(graph: Graph, seed: int | None = None, resolution: float = 1.0) -> Communities:
    """Multi-level modularity maximisation.

    ``seed`` fixes a shuffled node visiting order; ``None`` visits nodes by
    ascending position. ``history`` holds the modularity after each level.
    """
    g = graph.undirected()
    ids = g.node_ids
    pos = {n: i for i, n in enumerate(ids)}
    adj: list[dict[int, float]] = [defaultdict(float) for _ in ids]
    loops = [0.0] * len(ids)
    for e in g.edges:
        u, v = pos[e.source], pos[e.target]
        if u == v:
            loops[u] += e.weight
        else:
            adj[u][v] += e.weight
            adj[v][u] += e.weight
    level = _Level([dict(a) for a in adj], loops)
    m2 = 2 * (sum(loops) + sum(sum(a.values()) for a in adj) / 2)
    membership = list(range(len(ids)))
    if m2 == 0:
        return Communities({n: i for i, n in enumerate(ids)}, 0.0, [0.0])

    rng = random.Random(seed) if seed is not None else None
    history = [modularity(g, {n: i for i, n in enumerate(ids)}, resolution)]
    while True:
        order = list(range(level.size))
        if rng is not None:
            rng.shuffle(order)
        comm, improved = _move_nodes(level, m2, order, resolution)
        if not improved:
            break
        level, comm = _aggregate(level, comm)
        membership = [comm[c] for c in membership]
        history.append(modularity(g, {n: membership[i] for i, n in enumerate(ids)}, resolution))

    # renumber communities by their lowest member
    first: dict[int, int] = {}
    for c in membership:
        first.setdefault(c, len(first))
    partition = {n: first[membership[i]] for i, n in enumerate(ids)}
    return Communities(partition, modularity(g, partition, resolution), history)


def detect_communities(graph: Graph, seed: int | None = 0) -> tuple[dict[int, int], float]:
    result = louvain(graph, seed)
    return result.partition, result.modularity

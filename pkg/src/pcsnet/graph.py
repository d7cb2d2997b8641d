"""Minimal weighted graph container with Gephi-style CSV export.

Edge weights hold raw distances (or transition counts for progression
networks), never their inverse; invert downstream if a similarity is needed.
"""

from __future__ import annotations

import csv
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from .errors import NoSuchNode, PcsNetError


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    weight: float
    label: str | None = None


def _fmt_weight(w) -> str:
    return repr(float(w)) if isinstance(w, float) else str(w)


@dataclass
class Graph:
    nodes: list[tuple[int, str]] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)
    directed: bool = False

    def __post_init__(self) -> None:
        ids = {n for n, _ in self.nodes}
        if len(ids) != len(self.nodes):
            raise PcsNetError("duplicate node ids")
        for e in self.edges:
            if e.source not in ids or e.target not in ids:
                raise PcsNetError(f"edge {e.source}->{e.target} references a missing node")

    @property
    def node_ids(self) -> list[int]:
        return [n for n, _ in self.nodes]

    def label_of(self, node: int) -> str:
        for n, label in self.nodes:
            if n == node:
                return label
        raise NoSuchNode(f"no node with id {node}")

    def id_of(self, label: str) -> int:
        for n, lab in self.nodes:
            if lab == label:
                return n
        raise NoSuchNode(f"no node labelled {label!r}")

    def degree(self) -> dict[int, int]:
        """Unweighted degree; a self-loop counts twice."""
        deg = {n: 0 for n, _ in self.nodes}
        for e in self.edges:
            deg[e.source] += 1
            deg[e.target] += 1
        return deg

    def undirected(self) -> Graph:
        """Undirected projection; weights of antiparallel edges are summed."""
        if not self.directed:
            return self
        acc: dict[tuple[int, int], float] = defaultdict(int)
        for e in self.edges:
            acc[min(e.source, e.target), max(e.source, e.target)] += e.weight
        return Graph(list(self.nodes), [Edge(u, v, w) for (u, v), w in acc.items()], directed=False)

    def edge_set(self) -> set[tuple[int, int]]:
        if self.directed:
            return {(e.source, e.target) for e in self.edges}
        return {(min(e.source, e.target), max(e.source, e.target)) for e in self.edges}

    def average_degree(self) -> float:
        if not self.nodes:
            return 0.0
        return 2 * len(self.undirected().edges) / len(self.nodes)

    def write_csv(self, nodes_path: str | Path, edges_path: str | Path | None = None) -> None:
        """Write ``Id,Label`` and ``Source,Target,Weight[,Label]`` tables.

        ``edges_path=None`` writes only the node table.
        """
        with open(nodes_path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["Id", "Label"])
            w.writerows(self.nodes)
        if edges_path is not None:
            self.write_edges_csv(edges_path)

    def write_edges_csv(self, edges_path: str | Path) -> None:
        labelled = any(e.label is not None for e in self.edges)
        with open(edges_path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["Source", "Target", "Weight"] + (["Label"] if labelled else []))
            for e in self.edges:
                row = [e.source, e.target, _fmt_weight(e.weight)]
                if labelled:
                    row.append(e.label or "")
                w.writerow(row)

    @classmethod
    def read_csv(cls, nodes_path: str | Path, edges_path: str | Path, directed: bool = False) -> Graph:
        with open(nodes_path, encoding="utf-8", newline="") as fh:
            rows = list(csv.DictReader(fh))
        nodes = [(int(r["Id"]), r["Label"]) for r in rows]
        edges = []
        with open(edges_path, encoding="utf-8", newline="") as fh:
            for r in csv.DictReader(fh):
                w = float(r["Weight"])
                if w.is_integer() and "." not in r["Weight"]:
                    w = int(w)
                edges.append(Edge(int(r["Source"]), int(r["Target"]), w, r.get("Label") or None))
        return cls(nodes, edges, directed)

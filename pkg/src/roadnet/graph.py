"""Immutable compressed-adjacency graph with degree analytics and top-k tables."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np


@dataclass(frozen=True)
class Graph:
    """Road network in CSR form, dense node indices 0..n-1.

    Two views are kept side by side: the raw directed arc multiset exactly as
    read from the file (duplicates and self-loops preserved), and a
    symmetrized simple undirected view (self-loops dropped, parallel edges
    merged).  ``id_map[i]`` gives the original node identifier of dense
    index ``i``; it is sorted ascending, so dense order is original-ID order.
    """

    n: int
    undirected_offsets: np.ndarray
    undirected_neighbors: np.ndarray
    out_offsets: np.ndarray
    out_neighbors: np.ndarray
    in_offsets: np.ndarray
    in_neighbors: np.ndarray
    id_map: np.ndarray

    def __post_init__(self):
        for arr in (self.undirected_offsets, self.undirected_neighbors,
                    self.out_offsets, self.out_neighbors,
                    self.in_offsets, self.in_neighbors, self.id_map):
            arr.flags.writeable = False

    @property
    def undirected_edge_count(self) -> int:
        return self.undirected_neighbors.size // 2

    @property
    def arc_count(self) -> int:
        """Raw directed arcs, duplicates and self-loops included."""
        return int(self.out_neighbors.size)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.diff(self.undirected_offsets)

    @cached_property
    def outdegrees(self) -> np.ndarray:
        return np.diff(self.out_offsets)

    @cached_property
    def indegrees(self) -> np.ndarray:
        return np.diff(self.in_offsets)

    def neighbors(self, node: int) -> np.ndarray:
        """Sorted undirected neighbor list of a dense node index."""
        if not 0 <= node < self.n:
            raise IndexError(f"node {node} out of range 0..{self.n - 1}")
        return self.undirected_neighbors[
            self.undirected_offsets[node]:self.undirected_offsets[node + 1]]

    def original_id(self, node: int) -> int:
        if not 0 <= node < self.n:
            raise IndexError(f"node {node} out of range 0..{self.n - 1}")
        return int(self.id_map[node])


def csr_from_arcs(n: int, src: np.ndarray, dst: np.ndarray):
    """Build (offsets, neighbors) with each neighbor run sorted ascending."""
    order = np.lexsort((dst, src))
    neighbors = dst[order]
    counts = np.bincount(src, minlength=n)
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=offsets[1:])
    return offsets, np.ascontiguousarray(neighbors, dtype=np.int64)


def degree(graph: Graph, node: int) -> int:
    """Undirected degree (neighbor-list length) of a dense node index."""
    if not 0 <= node < graph.n:
        raise IndexError(f"node {node} out of range 0..{graph.n - 1}")
    return int(graph.undirected_offsets[node + 1] - graph.undirected_offsets[node])


@dataclass(frozen=True)
class DegreeStats:
    """Per-node degree arrays plus the argmax of each, as
    (dense index, original ID, value); None on an empty graph."""

    degree: np.ndarray
    indegree: np.ndarray
    outdegree: np.ndarray
    max_degree_node: tuple[int, int, int] | None
    max_indegree_node: tuple[int, int, int] | None
    max_outdegree_node: tuple[int, int, int] | None


def _argmax_entry(graph: Graph, values: np.ndarray):
    if values.size == 0:
        return None
    # first argmax wins; id_map is ascending, so that is the lowest original ID
    i = int(np.argmax(values))
    return (i, int(graph.id_map[i]), int(values[i]))


def degree_stats(graph: Graph) -> DegreeStats:
    deg = graph.degrees
    indeg = graph.indegrees
    outdeg = graph.outdegrees
    return DegreeStats(
        degree=deg,
        indegree=indeg,
        outdegree=outdeg,
        max_degree_node=_argmax_entry(graph, deg),
        max_indegree_node=_argmax_entry(graph, indeg),
        max_outdegree_node=_argmax_entry(graph, outdeg),
    )


class TopKRow(NamedTuple):
    node_id: int
    score: float
    attributes: tuple[str, ...]


@dataclass(frozen=True)
class TopKTable:
    """Rows sorted by descending score, ties broken by ascending node ID."""

    rows: tuple[TopKRow, ...]
    k: int

    def to_csv(self, fp) -> None:
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(["node_id", "score", "attributes"])
        for row in self.rows:
            writer.writerow([row.node_id, _fmt_score(row.score),
                             ";".join(row.attributes)])

    def to_csv_string(self) -> str:
        buf = io.StringIO()
        self.to_csv(buf)
        return buf.getvalue()

    def format_triples(self) -> str:
        """One ``(node, score, List(attr, ...))`` line per row."""
        lines = []
        for row in self.rows:
            attrs = ", ".join(row.attributes)
            lines.append(f"({row.node_id}, {_fmt_score(row.score)}, List({attrs}))")
        return "\n".join(lines)

    def to_records(self) -> list[dict]:
        return [{"node": row.node_id, "score": row.score} for row in self.rows]


def _fmt_score(score) -> str:
    if isinstance(score, (int, np.integer)):
        return str(int(score))
    return repr(float(score))


def top_k_order(scores: np.ndarray, ids: np.ndarray, k: int) -> np.ndarray:
    """Indices of the k best entries under (descending score, ascending ID)."""
    order = np.lexsort((ids, -scores))
    return order[:min(k, scores.size)]


def degree_attributes(deg: int, indeg: int, outdeg: int) -> tuple[str, str, str]:
    return (f"degree={deg}", f"indegree={indeg}", f"outdegree={outdeg}")


def table_from_scores(graph: Graph, scores: np.ndarray, k: int) -> TopKTable:
    """Rank dense-index scores into a TopKTable with degree-breakdown attributes."""
    chosen = top_k_order(scores, graph.id_map, k)
    deg, indeg, outdeg = graph.degrees, graph.indegrees, graph.outdegrees
    rows = tuple(
        TopKRow(
            node_id=int(graph.id_map[v]),
            score=scores[v].item(),
            attributes=degree_attributes(int(deg[v]), int(indeg[v]), int(outdeg[v])),
        )
        for v in chosen
    )
    return TopKTable(rows=rows, k=k)


def top_k_by_degree(graph: Graph, k: int) -> TopKTable:
    """Table of the k highest-undirected-degree nodes."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return table_from_scores(graph, graph.degrees, k)

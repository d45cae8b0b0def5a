"""Micro-batch ingestion with live cumulative top-k statistics.

The edge stream is consumed in fixed-size chunks of data lines.  After each
batch an incremental degree table (per-node counters plus a seen-pair set for
exact parallel-edge/self-loop handling) yields the current top-k by
undirected degree; optionally the cumulative graph is rebuilt and ranked
from scratch per batch.  After the final batch the incremental table matches
the batch pipeline exactly, same tie rules included.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import IO, Iterator

import numpy as np

from .graph import TopKRow, TopKTable, degree_attributes, top_k_order
from .graph_io import EdgeList, build_graph, iter_edge_lines
from .pagerank import pagerank, top_k_pagerank


@dataclass
class BatchStats:
    batch_index: int
    cumulative_edges: int
    cumulative_nodes: int
    top_degree: TopKTable
    top_pagerank: TopKTable | None
    wall_time_ms: float

    def to_json(self) -> str:
        payload = {
            "batch": self.batch_index,
            "cumulative_edges": self.cumulative_edges,
            "cumulative_nodes": self.cumulative_nodes,
            "top_degree": self.top_degree.to_records(),
        }
        if self.top_pagerank is not None:
            payload["top_pagerank"] = self.top_pagerank.to_records()
        payload["ms"] = self.wall_time_ms
        return json.dumps(payload)


def stream_batches(reader, batch_size: int,
                   source_name: str = "<stream>") -> Iterator[EdgeList]:
    """Yield EdgeList chunks of batch_size data lines (last may be short)."""
    if batch_size < 1:
        raise ValueError(f"batch_size must be >= 1, got {batch_size}")
    froms: list[int] = []
    tos: list[int] = []
    for _, u, v in iter_edge_lines(reader, source_name):
        froms.append(u)
        tos.append(v)
        if len(froms) == batch_size:
            yield EdgeList(np.array(froms, dtype=np.int64),
                           np.array(tos, dtype=np.int64), source_name)
            froms, tos = [], []
    if froms:
        yield EdgeList(np.array(froms, dtype=np.int64),
                       np.array(tos, dtype=np.int64), source_name)


class _DegreeTracker:
    """Cumulative per-node degree counters over a stream of arcs.

    Undirected degree counts each distinct {u, v} pair once per endpoint and
    ignores self-loops, mirroring the simple undirected graph view; in/out
    counters run over the raw arcs.
    """

    def __init__(self):
        self.degree: dict[int, int] = {}
        self.indegree: dict[int, int] = {}
        self.outdegree: dict[int, int] = {}
        self.seen_pairs: set[tuple[int, int]] = set()

    def add(self, edges: EdgeList) -> None:
        deg, indeg, outdeg = self.degree, self.indegree, self.outdegree
        seen = self.seen_pairs
        for u, v in zip(edges.from_ids.tolist(), edges.to_ids.tolist()):
            deg.setdefault(u, 0)
            deg.setdefault(v, 0)
            outdeg[u] = outdeg.get(u, 0) + 1
            indeg[v] = indeg.get(v, 0) + 1
            if u == v:
                continue
            pair = (u, v) if u < v else (v, u)
            if pair not in seen:
                seen.add(pair)
                deg[u] += 1
                deg[v] += 1

    @property
    def node_count(self) -> int:
        return len(self.degree)

    def top_k(self, k: int) -> TopKTable:
        ids = np.fromiter(self.degree.keys(), dtype=np.int64,
                          count=len(self.degree))
        scores = np.fromiter(self.degree.values(), dtype=np.int64,
                             count=len(self.degree))
        rows = tuple(
            TopKRow(
                node_id=int(ids[i]),
                score=int(scores[i]),
                attributes=degree_attributes(int(scores[i]),
                                             self.indegree.get(int(ids[i]), 0),
                                             self.outdegree.get(int(ids[i]), 0)),
            )
            for i in top_k_order(scores, ids, k)
        )
        return TopKTable(rows=rows, k=k)


def run_stream(reader, batch_size: int, k: int = 10,
               recompute_pagerank: bool = False,
               source_name: str = "<stream>") -> Iterator[BatchStats]:
    """Process the stream batch by batch, emitting cumulative statistics."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    tracker = _DegreeTracker()
    chunks_f: list[np.ndarray] = []
    chunks_t: list[np.ndarray] = []
    cumulative_edges = 0

    for index, batch in enumerate(stream_batches(reader, batch_size,
                                                 source_name), start=1):
        started = time.perf_counter()
        tracker.add(batch)
        cumulative_edges += batch.line_count
        top_pr = None
        if recompute_pagerank:
            chunks_f.append(batch.from_ids)
            chunks_t.append(batch.to_ids)
            snapshot = EdgeList(np.concatenate(chunks_f),
                                np.concatenate(chunks_t), source_name)
            graph = build_graph(snapshot)
            top_pr = top_k_pagerank(pagerank(graph), graph, k)
        yield BatchStats(
            batch_index=index,
            cumulative_edges=cumulative_edges,
            cumulative_nodes=tracker.node_count,
            top_degree=tracker.top_k(k),
            top_pagerank=top_pr,
            wall_time_ms=(time.perf_counter() - started) * 1e3,
        )


def write_ndjson(stats: Iterator[BatchStats], fp: IO[str]) -> Iterator[BatchStats]:
    """Pass batches through while appending one NDJSON line each."""
    for item in stats:
        fp.write(item.to_json() + "\n")
        yield item

"""Immutable undirected graph with edge-list ingestion and ring (frontier) queries.

Node ids are arbitrary non-negative integers and are preserved exactly as found
in the input; a dense internal indexing (CSR-style arrays) is kept for fast
neighborhood sweeps but never leaks through the public API.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

log = logging.getLogger(__name__)


class EdgeListParseError(ValueError):
    """Malformed edge-list input; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class Graph:
    """Undirected, unweighted, loop-free graph. Immutable after construction.

    Adjacency uses set semantics: no self-loops, no parallel edges, and
    v in neighbors(u) iff u in neighbors(v). All queries are pure, so a
    Graph is safe to share across concurrent readers.
    """

    __slots__ = (
        "_ids", "_index", "_adj", "_indptr", "_indices", "_degrees",
        "num_nodes", "num_edges",
    )

    def __init__(self, edges: Iterable[tuple[int, int]], extra_nodes: Iterable[int] = ()):
        adj: dict[int, set[int]] = {}
        for u, v in edges:
            if u == v:
                continue
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        for v in extra_nodes:
            adj.setdefault(v, set())
        if not adj:
            raise ValueError("graph has no nodes")
        if any(v < 0 for v in adj):
            raise ValueError("node ids must be non-negative")

        self._ids: tuple[int, ...] = tuple(sorted(adj))
        self._index: dict[int, int] = {v: i for i, v in enumerate(self._ids)}
        self._adj: dict[int, frozenset[int]] = {v: frozenset(adj[v]) for v in self._ids}
        self.num_nodes: int = len(self._ids)
        self.num_edges: int = sum(len(s) for s in adj.values()) // 2

        # Dense CSR mirror for numpy-backed sweeps.
        degrees = np.fromiter((len(self._adj[v]) for v in self._ids), dtype=np.int64,
                              count=self.num_nodes)
        indptr = np.zeros(self.num_nodes + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])
        indices = np.empty(indptr[-1], dtype=np.int64)
        for i, v in enumerate(self._ids):
            nbrs = sorted(self._index[w] for w in self._adj[v])
            indices[indptr[i]:indptr[i + 1]] = nbrs
        self._degrees = degrees
        self._indptr = indptr
        self._indices = indices

    # -- public queries ------------------------------------------------

    @property
    def node_ids(self) -> tuple[int, ...]:
        """All node ids in ascending order."""
        return self._ids

    def __contains__(self, v: int) -> bool:
        return v in self._index

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_node(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_node(v)
        return len(self._adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each undirected edge once, as (u, v) with u < v, in sorted order."""
        for u in self._ids:
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._ids == other._ids and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._ids, tuple(sorted((u, v) for u, v in self.edges()))))

    def __repr__(self) -> str:
        return f"Graph(num_nodes={self.num_nodes}, num_edges={self.num_edges})"

    def _check_node(self, v: int) -> None:
        if v not in self._index:
            raise KeyError(f"node {v} not in graph")

    # -- internal dense accessors (package use only) ---------------------

    def _node_index(self, v: int) -> int:
        self._check_node(v)
        return self._index[v]

    def _csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self._indptr, self._indices, self._degrees

    def _id_array(self) -> tuple[int, ...]:
        return self._ids


@dataclass(frozen=True)
class Frontier:
    """Ring of a breadth-first sweep: the nodes at exactly `radius` hops from
    `origin`, plus the cumulative set of everything reached in rings 1..radius.

    The origin itself is never part of `visited`; rings are disjoint across
    successive expansions, so they coincide with BFS level sets.
    """

    origin: int
    radius: int
    current_ring: frozenset[int]
    visited: frozenset[int]


def initial_frontier(g: Graph, origin: int) -> Frontier:
    """Frontier at radius 1: the immediate neighbors of `origin`."""
    ring = g.neighbors(origin)
    return Frontier(origin=origin, radius=1, current_ring=ring, visited=ring)


def expand_frontier(g: Graph, f: Frontier) -> Frontier:
    """Advance one hop: new ring = neighbors of the current ring, minus
    everything already visited and minus the origin. An empty ring is a valid
    result and signals exhaustion of the origin's component.
    """
    ring = set()
    for u in f.current_ring:
        ring |= g.neighbors(u)
    ring -= f.visited
    ring.discard(f.origin)
    new_ring = frozenset(ring)
    return Frontier(
        origin=f.origin,
        radius=f.radius + 1,
        current_ring=new_ring,
        visited=f.visited | new_ring,
    )


def load_edge_list(text: str, node_list_text: str | None = None) -> Graph:
    """Parse line-oriented edge-list content into a Graph.

    Each non-comment, non-blank line holds two whitespace-separated integer
    node ids. Lines starting with '#' are comments. Duplicate lines and
    reversed duplicates collapse to one edge; self-loop lines are dropped
    (a warning reports how many). `node_list_text`, one integer per line,
    may declare extra nodes so that degree-0 nodes are representable.
    """
    edges: list[tuple[int, int]] = []
    self_loops = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(line_no, f"expected 2 tokens, got {len(tokens)}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer token in {tokens}") from None
        if u < 0 or v < 0:
            raise EdgeListParseError(line_no, "node ids must be non-negative")
        if u == v:
            self_loops += 1
            continue
        edges.append((u, v))

    extra = _parse_node_list(node_list_text) if node_list_text is not None else []
    if not edges and not extra:
        raise ValueError("empty edge list: no edges and no node-list entries")
    if self_loops:
        log.warning("dropped %d self-loop line(s)", self_loops)
    return Graph(edges, extra_nodes=extra)


def load_edge_file(path, node_list_path=None) -> Graph:
    """Read an edge-list file (and optional node-list sidecar) from disk."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    node_text = None
    if node_list_path is not None:
        with open(node_list_path, "r", encoding="utf-8") as fh:
            node_text = fh.read()
    return load_edge_list(text, node_text)


def edge_list_text(g: Graph) -> str:
    """Serialize a graph in the accepted edge-list format (sorted, one edge per line)."""
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def _parse_node_list(text: str) -> list[int]:
    nodes = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 1:
            raise EdgeListParseError(line_no, f"expected 1 token, got {len(tokens)}")
        try:
            v = int(tokens[0])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer token {tokens[0]!r}") from None
        if v < 0:
            raise EdgeListParseError(line_no, "node ids must be non-negative")
        nodes.append(v)
    return nodes

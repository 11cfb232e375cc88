"""Yukawa potential centrality (YPC).

A node's influence is scored by summing screened-potential terms over expanding
neighborhood rings. At ring r the term magnitude is

    v_r = k_o * exp(-alpha * (<k_n> / k_o) * r) / r

where k_o is the node's own degree and <k_n> is the mean degree over every
neighbor visited so far (rings 1..r cumulatively). The exponent acts as a
self-inhibition filter: well-connected surroundings relative to the node's own
degree shorten its reach. Accumulation stops once the term magnitude falls
below a threshold, the hop cap is hit, or the next ring is empty, so the
influence radius adapts to the local topology instead of using a fixed cutoff.

Scores are stored negated (score = -sum of magnitudes) so that *more negative
means more influential* and an ascending sort puts the strongest spreader
first. The termination test compares the positive magnitude v_r against the
threshold.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph

DEFAULT_THRESHOLD = 1e-100


def yukawa_potential(g_const: float, m: float, alpha: float, r: float) -> float:
    """Screened two-body potential -g^2 * exp(-alpha*m*r) / r.

    With m = 0 this reduces to the unscreened (Coulomb-form) potential -g^2/r;
    for m > 0 the magnitude decays exponentially with distance r.
    """
    if r <= 0:
        raise ValueError(f"r must be positive, got {r}")
    return -(g_const * g_const) * math.exp(-alpha * m * r) / r


@dataclass(frozen=True)
class YpcParams:
    """Knobs for the score accumulation loop.

    `max_radius` of None resolves to the node count of the graph being scored
    (a diameter upper bound), so in practice termination comes from the
    threshold or ring exhaustion rather than the cap.
    """

    alpha: float = 1.0
    threshold: float = DEFAULT_THRESHOLD
    max_radius: int | None = None

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.threshold <= 0:
            raise ValueError("threshold must be positive")
        if self.max_radius is not None and self.max_radius < 1:
            raise ValueError("max_radius must be >= 1")

    def resolve_max_radius(self, g: Graph) -> int:
        return self.max_radius if self.max_radius is not None else g.num_nodes


@dataclass(frozen=True)
class YpcResult:
    node: int
    score: float            # -sum(per_ring_terms); more negative = more influential
    radius: int             # last ring at which a term was computed
    per_ring_terms: tuple[float, ...] = field(repr=False, default=())


@dataclass(frozen=True)
class RadiusStats:
    min_radius: int
    max_radius: int
    mean_radius: float
    histogram: dict[int, int]


def ypc_single(g: Graph, o: int, p: YpcParams = YpcParams()) -> YpcResult:
    """Score one node. Pure: same graph and params give a bit-identical result."""
    idx = g._node_index(o)
    score, radius, terms = _score_node(g, idx, p.alpha, p.threshold, p.resolve_max_radius(g))
    return YpcResult(node=o, score=score, radius=radius, per_ring_terms=terms)


def ypc_all(g: Graph, p: YpcParams = YpcParams()) -> list[YpcResult]:
    """Score every node, sorted ascending by score (strongest spreader first),
    ties broken by ascending node id. Each node's computation is independent,
    so evaluation order cannot affect any score.
    """
    alpha, threshold = p.alpha, p.threshold
    max_radius = p.resolve_max_radius(g)
    results = []
    for idx, node in enumerate(g.node_ids):
        score, radius, terms = _score_node(g, idx, alpha, threshold, max_radius)
        results.append(YpcResult(node=node, score=score, radius=radius, per_ring_terms=terms))
    results.sort(key=lambda res: (res.score, res.node))
    return results


def radius_stats(results: list[YpcResult]) -> RadiusStats:
    """Summary of realized influence radii over a batch of results."""
    if not results:
        raise ValueError("radius_stats needs at least one result")
    radii = [res.radius for res in results]
    hist: dict[int, int] = {}
    for r in radii:
        hist[r] = hist.get(r, 0) + 1
    return RadiusStats(
        min_radius=min(radii),
        max_radius=max(radii),
        mean_radius=sum(radii) / len(radii),
        histogram=dict(sorted(hist.items())),
    )


def _score_node(g: Graph, idx: int, alpha: float, threshold: float,
                max_radius: int) -> tuple[float, int, tuple[float, ...]]:
    """Ring-expansion loop over the CSR arrays.

    Ring discovery is vectorized; the per-ring term itself is evaluated in
    plain Python floats so results match a set-based reimplementation exactly.
    """
    indptr, indices, degrees = g._csr()
    n = g.num_nodes
    k_o = int(degrees[idx])

    visited = np.zeros(n, dtype=bool)
    visited[idx] = True  # excludes the origin from every ring
    ring = indices[indptr[idx]:indptr[idx + 1]]
    visited[ring] = True
    visited_count = int(ring.size)
    visited_degree_sum = int(degrees[ring].sum()) if ring.size else 0

    r = 1
    terms: list[float] = []
    while True:
        if k_o > 0 and visited_count > 0:
            ratio = (visited_degree_sum / visited_count) / k_o
        else:
            ratio = 0.0
        v = k_o * math.exp(-alpha * ratio * r) / r
        terms.append(v)

        next_ring = _fresh_neighbors(indptr, indices, ring, visited)
        if v < threshold or r >= max_radius or next_ring.size == 0:
            break
        ring = next_ring
        visited_count += int(ring.size)
        visited_degree_sum += int(degrees[ring].sum())
        r += 1

    total = sum(terms)
    score = -total if total != 0.0 else 0.0
    return score, r, tuple(terms)


def _fresh_neighbors(indptr: np.ndarray, indices: np.ndarray, ring: np.ndarray,
                     visited: np.ndarray) -> np.ndarray:
    """Union of neighbors of `ring` not yet visited; marks them visited."""
    if ring.size == 0:
        return ring
    starts = indptr[ring]
    lens = indptr[ring + 1] - starts
    total = int(lens.sum())
    if total == 0:
        return np.empty(0, dtype=indices.dtype)
    # Gather indices[starts[j]:starts[j]+lens[j]] for all ring nodes j at once.
    offsets = np.cumsum(lens)
    positions = np.repeat(starts - np.concatenate(([0], offsets[:-1])), lens)
    positions += np.arange(total, dtype=np.int64)
    nbrs = indices[positions]
    fresh = nbrs[~visited[nbrs]]
    if fresh.size == 0:
        return fresh
    fresh = np.unique(fresh)
    visited[fresh] = True
    return fresh

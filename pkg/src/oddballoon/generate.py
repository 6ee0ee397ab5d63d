"""Isomorphism-deduplicated exhaustive generation and random samplers."""
from __future__ import annotations

import heapq
import random
from functools import lru_cache
from typing import Callable

from .canon import canonical_key, canonical_key_any, component_key
from .embed import creates_copy_with_vertex
from .graphs import (
    Graph,
    _fast_graph,
    add_vertex,
    empty_graph,
    from_edges,
)

Predicate = Callable[[Graph], bool]


def graph_levels(
    max_n: int,
    forbidden: tuple[Graph, ...] = (),
) -> list[list[Graph]]:
    """All graphs up to isomorphism on 0..max_n vertices avoiding the
    forbidden family, grown one vertex at a time with pruning at every step.

    levels[v] holds the v-vertex classes; freeness is hereditary, so pruning
    a candidate prunes all its extensions.
    """
    members = [g for g in forbidden]
    if any(m.n == 0 for m in members):
        raise ValueError("a forbidden member with no vertices excludes every graph")
    levels: list[list[Graph]] = [[empty_graph(0)]]
    for v in range(max_n):
        seen: set[bytes] = set()
        nxt: list[Graph] = []
        for parent in levels[v]:
            for subset in range(1 << v):
                cand = add_vertex(parent, subset)
                if any(creates_copy_with_vertex(cand, m, v) for m in members):
                    continue
                key = canonical_key(cand)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(cand)
        levels.append(nxt)
    return levels


def _edge_growth(
    predicate: Predicate | None,
    max_edges: int | None,
    max_nonisolated: int | None,
    cheap_filter: Predicate | None,
    connected_only: bool,
) -> list[Graph]:
    key_fn = canonical_key_any if connected_only else component_key
    k2 = from_edges(2, [(0, 1)])
    if cheap_filter is not None and not cheap_filter(k2):
        return []
    if predicate is not None and not predicate(k2):
        return []
    classes: list[Graph] = [k2]
    level = [k2]
    m = 1
    while level and (max_edges is None or m < max_edges):
        seen: set[bytes] = set()
        nxt: list[Graph] = []
        for g in level:
            candidates: list[Graph] = []
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    if not g.has_edge(u, v):
                        rows = list(g.rows)
                        rows[u] |= 1 << v
                        rows[v] |= 1 << u
                        candidates.append(_fast_graph(g.n, tuple(rows)))
                candidates.append(add_vertex(g, 1 << u))
            if not connected_only:
                two = add_vertex(g, 0)
                candidates.append(add_vertex(two, 1 << g.n))
            for cand in candidates:
                if max_nonisolated is not None and cand.n > max_nonisolated:
                    continue
                if cheap_filter is not None and not cheap_filter(cand):
                    continue
                key = key_fn(cand)
                if key in seen:
                    continue
                seen.add(key)  # a failing class stays skipped: it would fail again
                if predicate is not None and not predicate(cand):
                    continue
                nxt.append(cand)
        classes.extend(nxt)
        level = nxt
        m += 1
    return classes


def edge_growth_classes(
    predicate: Predicate | None = None,
    max_edges: int | None = None,
    max_nonisolated: int | None = None,
    cheap_filter: Predicate | None = None,
) -> list[Graph]:
    """All iso-classes of graphs with no isolated vertices reachable by
    repeated edge addition (internal edge, pendant vertex, or fresh disjoint
    edge) while the hereditary predicate holds.  Terminates when a level is
    empty; cap with max_edges if the predicate alone does not bound growth.

    cheap_filter runs per candidate before deduplication (use it for bit-ops
    checks like degree caps); predicate runs once per class.
    """
    return _edge_growth(predicate, max_edges, max_nonisolated, cheap_filter, False)


def connected_edge_growth_classes(
    predicate: Predicate | None = None,
    max_edges: int | None = None,
    cheap_filter: Predicate | None = None,
) -> list[Graph]:
    """All CONNECTED iso-classes reachable while the hereditary predicate
    holds, growing by an internal edge or a pendant vertex.

    Complete: a connected graph either has a cycle edge whose removal keeps
    it connected, or is a tree and loses a leaf with its edge; both reversals
    are the moves above and heredity carries the predicates down.
    """
    return _edge_growth(predicate, max_edges, None, cheap_filter, True)


@lru_cache(maxsize=32)
def small_edge_classes(max_edges: int, max_nonisolated: int) -> tuple[Graph, ...]:
    """Cached: every iso-class with 1..max_edges edges, no isolated vertices,
    at most max_nonisolated vertices."""
    return tuple(edge_growth_classes(None, max_edges, max_nonisolated))


@lru_cache(maxsize=8)
def trees_up_to(max_n: int) -> tuple[tuple[Graph, ...], ...]:
    """trees[n] = all free trees on n vertices up to isomorphism."""
    levels: list[tuple[Graph, ...]] = [(), (empty_graph(1),)]
    for n in range(2, max_n + 1):
        seen: set[bytes] = set()
        out = []
        for t in levels[n - 1]:
            for v in range(t.n):
                cand = add_vertex(t, 1 << v)
                key = canonical_key(cand)
                if key not in seen:
                    seen.add(key)
                    out.append(cand)
        levels.append(tuple(out))
    return tuple(levels[: max_n + 1])


# -- random samplers (explicit rng for reproducible audits) --------------


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edges(n, edges)


def random_bipartite_graph(rng: random.Random, nx: int, ny: int, p: float) -> Graph:
    edges = [(u, nx + v) for u in range(nx) for v in range(ny) if rng.random() < p]
    return from_edges(nx + ny, edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform labelled tree via a Prufer sequence."""
    if n <= 1:
        return empty_graph(max(n, 0))
    if n == 2:
        return from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return from_edges(n, edges)


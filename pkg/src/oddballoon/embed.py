"""Subgraph containment (not induced) by backtracking over bit rows.

Candidate images are pruned by host degree and by intersecting the
adjacency rows of already-placed neighbors.  Host vertices that are
interchangeable (equal open or closed neighborhoods, i.e. twins) are
tried once per search node; a twin transposition is a host automorphism
fixing every used vertex, so skipping the siblings is sound.  This is
what keeps queries against join/Turan-shaped hosts flat.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .graphs import Graph, ParameterError, bit_indices, iter_bits


@lru_cache(maxsize=1024)
def _host_degrees(host: Graph) -> tuple[int, ...]:
    return tuple(row.bit_count() for row in host.rows)


def _degree_mask(host: Graph, d: int) -> int:
    degs = _host_degrees(host)
    mask = 0
    for v, dv in enumerate(degs):
        if dv >= d:
            mask |= 1 << v
    return mask


def _pattern_order(pattern: Graph, core: list[int], seed: Sequence[int] = ()) -> list[int]:
    """Connectivity-greedy order over core vertices, optionally starting from
    pre-assigned seed vertices."""
    chosen = list(seed)
    chosen_set = set(chosen)
    remaining = [v for v in core if v not in chosen_set]
    while remaining:
        best = max(
            remaining,
            key=lambda p: (
                sum(1 for q in chosen if pattern.has_edge(p, q)),
                pattern.degree(p),
                -p,
            ),
        )
        chosen.append(best)
        chosen_set.add(best)
        remaining.remove(best)
    return chosen


def _search(
    host: Graph,
    pattern: Graph,
    order: list[int],
    assign: dict[int, int],
    used: int,
) -> bool:
    degmasks: dict[int, int] = {}
    pat_rows = pattern.rows
    host_rows = host.rows
    full = host.vertices_mask()

    prev_neighbors: list[list[int]] = []
    for i, p in enumerate(order):
        prev_neighbors.append([q for q in order[:i] if pat_rows[p] >> q & 1])

    start = len(assign)

    def rec(pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        p = order[pos]
        cand = full & ~used
        for q in prev_neighbors[pos]:
            cand &= host_rows[assign[q]]
        d = pat_rows[p].bit_count()
        dm = degmasks.get(d)
        if dm is None:
            dm = _degree_mask(host, d)
            degmasks[d] = dm
        cand &= dm
        seen_open: set[int] = set()
        seen_closed: set[int] = set()
        m = cand
        while m:
            b = m & -m
            m ^= b
            w = b.bit_length() - 1
            rk = host_rows[w]
            ck = rk | b
            if rk in seen_open or ck in seen_closed:
                continue
            seen_open.add(rk)
            seen_closed.add(ck)
            assign[p] = w
            if rec(pos + 1, used | b):
                return True
            del assign[p]
        return False

    # seeded assignments occupy order[:start]; verify their adjacency holds
    for i in range(start):
        p = order[i]
        for q in prev_neighbors[i]:
            if not host_rows[assign[q]] >> assign[p] & 1:
                return False
    return rec(start, used)


def contains_subgraph(
    host: Graph,
    pattern: Graph,
    anchor: tuple[int, int] | None = None,
) -> bool:
    """True iff an injective map sends pattern edges to host edges.

    With anchor=(u, v) - a host edge - some pattern edge must map onto it
    (in either orientation).
    """
    if pattern.n > host.n or pattern.edge_count() > host.edge_count():
        return False
    core = [v for v in range(pattern.n) if pattern.rows[v]]
    if anchor is None:
        if not core:
            return True  # only isolated vertices; size check above suffices
        order = _pattern_order(pattern, core)
        return _search(host, pattern, order, {}, 0)

    u, v = anchor
    if not host.has_edge(u, v):
        raise ParameterError(f"anchor ({u},{v}) is not a host edge")
    if not core:
        return False
    for p, q in pattern.edges():
        order = _pattern_order(pattern, core, seed=[p, q])
        for hu, hv in ((u, v), (v, u)):
            if host.degree(hu) < pattern.degree(p) or host.degree(hv) < pattern.degree(q):
                continue
            if _search(host, pattern, order, {p: hu, q: hv}, (1 << hu) | (1 << hv)):
                return True
    return False


def embeds_using_vertex(host: Graph, pattern: Graph, hv: int) -> bool:
    """True iff pattern embeds with hv in the image of its non-isolated part.

    Used for incremental freeness checks: when the host grew by one vertex,
    only copies through it are new.
    """
    if pattern.n > host.n or pattern.edge_count() > host.edge_count():
        return False
    core = [v for v in range(pattern.n) if pattern.rows[v]]
    if not core:
        return False
    hd = host.degree(hv)
    for p in core:
        if pattern.degree(p) > hd:
            continue
        order = _pattern_order(pattern, core, seed=[p])
        if _search(host, pattern, order, {p: hv}, 1 << hv):
            return True
    return False


def creates_copy_with_vertex(cand: Graph, pattern: Graph, z: int) -> bool:
    """Freeness test for a host grown by vertex z from a pattern-free parent.

    A new copy either routes a core vertex through z, or - when the pattern
    carries isolated vertices - appears because the host just reached the
    pattern's vertex count and z absorbs an isolated pattern vertex.
    """
    if pattern.n > cand.n or pattern.edge_count() > cand.edge_count():
        return False
    if embeds_using_vertex(cand, pattern, z):
        return True
    return cand.n == pattern.n and contains_subgraph(cand, pattern)


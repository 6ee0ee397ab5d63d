"""Independent brute-force oracles used to freeze expected values.

These deliberately avoid the library's search strategies: matching by
exhaustive edge-subset enumeration, covers by subset sweep, containment by
trying every injective map, colorings by literal per-edge scans.
"""
from __future__ import annotations

from itertools import combinations, permutations

from oddballoon.graphs import Graph


def brute_max_matching(g: Graph) -> int:
    """Enumerate all matchings recursively (fine for n <= 10)."""
    edges = g.edges()
    best = 0

    def rec(i: int, used: int, count: int) -> None:
        nonlocal best
        best = max(best, count)
        if count + (len(edges) - i) <= best:
            return
        for j in range(i, len(edges)):
            u, v = edges[j]
            m = (1 << u) | (1 << v)
            if not used & m:
                rec(j + 1, used | m, count + 1)

    rec(0, 0, 0)
    return best


def brute_min_cover(g: Graph) -> int:
    edges = g.edges()
    if not edges:
        return 0
    for size in range(0, g.n + 1):
        for combo in combinations(range(g.n), size):
            s = set(combo)
            if all(u in s or v in s for u, v in edges):
                return size
    raise AssertionError("unreachable")


def brute_contains(host: Graph, pattern: Graph, anchor=None) -> bool:
    if pattern.n > host.n:
        return False
    core = [v for v in range(pattern.n) if pattern.rows[v]]
    if not core:
        return anchor is None
    pat_edges = [(u, v) for u, v in pattern.edges()]
    for image in permutations(range(host.n), len(core)):
        pos = dict(zip(core, image))
        if all(host.has_edge(pos[u], pos[v]) for u, v in pat_edges):
            if anchor is None:
                return True
            a = tuple(sorted(anchor))
            if any(tuple(sorted((pos[u], pos[v]))) == a for u, v in pat_edges):
                return True
    return False


def slow_f2(n: int, h: Graph) -> int:
    """Literal per-edge scan over all 2-colorings; keep n <= 5."""
    from oddballoon.construct import EdgeColoring

    pairs = list(combinations(range(n), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        red = frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
        best = max(best, slow_uncovered(EdgeColoring(n, red), h))
    return best


def slow_uncovered(coloring, h: Graph) -> int:
    """Per-edge anchored scan written against brute_contains."""
    count = 0
    for g in (coloring.red_graph(), coloring.blue_graph()):
        for e in g.edges():
            if not brute_contains(g, h, anchor=e):
                count += 1
    return count


def petersen() -> Graph:
    from oddballoon.graphs import from_edges

    return from_edges(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
         (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
         (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
    )


def graph_from_mask(n: int, mask: int) -> Graph:
    from oddballoon.graphs import from_edges

    pairs = list(combinations(range(n), 2))
    return from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])

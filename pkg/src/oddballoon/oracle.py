"""Independent brute-force ground truth: exact Turan numbers on small
vertex counts, bounded matching/degree maxima, exhaustive edge-coloring
searches, and audit operations for the inequality lemmas."""
from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import TYPE_CHECKING

import numpy as np

from .canon import canonical_form, canonical_key, canonical_key_any
from .embed import contains_subgraph, creates_copy_with_vertex
from .formulas import chvatal_hanson
from .graphs import (
    CapacityError,
    Graph,
    ParameterError,
    add_vertex,
    bit_indices,
    empty_graph,
    from_edges,
    induced,
    iter_bits,
    star_graph,
    strip_isolated,
    union_all,
)
from .matching import max_matching

if TYPE_CHECKING:  # EdgeColoring lives with the constructions; duck-typed here
    from .construct import EdgeColoring


@dataclass(frozen=True)
class ExResult:
    value: int
    witness: Graph
    nodes_explored: int
    elapsed_ms: float


def ex_exact(n: int, family) -> ExResult:
    """Exact ex(n, family) with a witness, by growing all family-free graphs
    one vertex at a time up to isomorphism, pruning at every step.

    family: iterable of Graphs (a GraphFamily works).  Isolated vertices in
    a member count toward its size, as subgraph containment requires.
    """
    if n > 10:
        raise CapacityError("ex_exact enumerates exhaustively only for n <= 10")
    if n < 0:
        raise ParameterError("ex_exact needs n >= 0")
    members = list(family)
    if not members:
        raise ParameterError("ex_exact needs a nonempty family")
    # an edgeless member on m vertices forbids every graph with >= m vertices
    edgeless_min = min((m.n for m in members if m.edge_count() == 0), default=None)
    if edgeless_min is not None and n >= edgeless_min:
        raise ParameterError(
            f"no family-free graphs on {n} vertices: the family has an edgeless "
            f"member on {edgeless_min} vertices"
        )
    members = [m for m in members if m.edge_count() > 0]
    t0 = time.perf_counter()
    nodes = 0
    level: list[Graph] = [empty_graph(0)]
    for v in range(n):
        seen: set[bytes] = set()
        nxt: list[Graph] = []
        for parent in level:
            for subset in range(1 << v):
                cand = add_vertex(parent, subset)
                nodes += 1
                if any(creates_copy_with_vertex(cand, m, v) for m in members):
                    continue
                key = canonical_key(cand)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(cand)
        level = nxt
    if not level:
        raise ParameterError(f"no family-free graphs on {n} vertices exist")
    best_edges = -1
    best: tuple[bytes, Graph] | None = None
    for g in level:
        e = g.edge_count()
        if e < best_edges:
            continue
        key = canonical_key(g)
        if e > best_edges or (best is not None and key < best[0]):
            best_edges = e
            best = (key, g)
    assert best is not None
    elapsed = (time.perf_counter() - t0) * 1000.0
    return ExResult(best_edges, canonical_form(best[1]), nodes, elapsed)


# -- bounded matching number + maximum degree ----------------------------


@lru_cache(maxsize=8)
def _connected_bounded_classes(nu: int, delta: int) -> tuple[Graph, ...]:
    from .generate import connected_edge_growth_classes

    return tuple(
        connected_edge_growth_classes(
            lambda g: max_matching(g) <= nu,
            cheap_filter=lambda g: g.max_degree() <= delta,
        )
    )


def max_edges_bounded(nu: int, delta: int) -> tuple[int, list[Graph]]:
    """Exhaustive maximum of e(G) over graphs with nu(G) <= nu and
    Delta(G) <= delta, with all edge-maximum witnesses up to isomorphism.

    Edges and matching number are additive over connected components, so it
    suffices to enumerate connected classes exhaustively (both constraints
    are hereditary and monotone under the growth moves) and compose them
    under the matching budget.
    """
    from .canon import component_key

    if nu < 0 or delta < 0:
        raise ParameterError("bounds must be nonnegative")
    if nu == 0 or delta == 0:
        return 0, [empty_graph(0)]

    connected = _connected_bounded_classes(nu, delta)
    by_nu: dict[int, list[Graph]] = {}
    for g in connected:
        by_nu.setdefault(max_matching(g), []).append(g)

    # best[r] = (value, all maximizing component multisets) using budget <= r
    best: list[tuple[int, set[tuple[bytes, ...]]]] = [(0, {()})]
    lookup = {canonical_key_any(g): g for g in connected}
    for r in range(1, nu + 1):
        value, multis = best[r - 1][0], set(best[r - 1][1])
        for v in range(1, r + 1):
            for g in by_nu.get(v, []):
                cand = g.edge_count() + best[r - v][0]
                if cand < value:
                    continue
                gk = canonical_key_any(g)
                new = {tuple(sorted(m + (gk,))) for m in best[r - v][1]}
                if cand > value:
                    value, multis = cand, new
                else:
                    multis |= new
        best.append((value, multis))

    value, multis = best[nu]
    if value == 0:
        return 0, [empty_graph(0)]
    witnesses = [
        canonical_form(union_all([lookup[k] for k in multi])) for multi in multis
    ]
    witnesses.sort(key=component_key)
    return value, witnesses


def ex_bounded_degree_matching(nu: int, delta: int) -> int:
    """Brute-force value of max{e(G) : nu(G) <= nu, Delta(G) <= delta}."""
    if nu > 3 or delta > 3:
        raise CapacityError("ex_bounded_degree_matching enumerates only for bounds <= 3")
    return max_edges_bounded(nu, delta)[0]


def star_matching_max(k: int) -> tuple[int, list[Graph]]:
    """Maximum edges over {S_k, kK_2, S_{k-1} u K_2}-free graphs without
    isolated vertices, with all extremal witnesses up to isomorphism."""
    from .generate import edge_growth_classes

    if k < 2:
        raise ParameterError("star_matching_max needs k >= 2")
    if k > 4:
        raise CapacityError("star_matching_max enumerates only for k <= 4")
    k2 = from_edges(2, [(0, 1)])
    patterns = [
        star_graph(k),
        union_all([k2] * k),
        union_all([star_graph(k - 1), k2]),
    ]
    patterns = [strip_isolated(p) for p in patterns]

    def ok(g: Graph) -> bool:
        return not any(
            p.n <= g.n and p.edge_count() <= g.edge_count() and contains_subgraph(g, p)
            for p in patterns
        )

    classes = edge_growth_classes(ok)
    if not classes:
        return 0, [empty_graph(0)]
    best = max(g.edge_count() for g in classes)
    witnesses = [canonical_form(g) for g in classes if g.edge_count() == best]
    witnesses.sort(key=canonical_key)
    return best, witnesses


# -- monochromatic-copy colorings ----------------------------------------


def _copy_edge_masks(n: int, h: Graph) -> list[int]:
    """Edge bitmasks (over the C(n,2) pair index) of every copy of h in K_n."""
    pairs = list(combinations(range(n), 2))
    pair_idx = {p: i for i, p in enumerate(pairs)}
    core = [v for v in range(h.n) if h.rows[v]]
    core_edges = [(u, v) for u, v in h.edges()]
    masks: set[int] = set()
    for image in permutations(range(n), len(core)):
        pos = dict(zip(core, image))
        mask = 0
        for u, v in core_edges:
            a, b = pos[u], pos[v]
            mask |= 1 << pair_idx[(a, b) if a < b else (b, a)]
        masks.add(mask)
    return sorted(masks)


_POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def _popcount32(arr: np.ndarray) -> np.ndarray:
    out = _POPCOUNT8[arr & 0xFF].astype(np.uint32)
    out += _POPCOUNT8[(arr >> 8) & 0xFF]
    out += _POPCOUNT8[(arr >> 16) & 0xFF]
    out += _POPCOUNT8[(arr >> 24) & 0xFF]
    return out


def f2_exact(n: int, h: Graph) -> int:
    """Maximum over all 2-edge-colorings of K_n of the number of edges in no
    monochromatic copy of h.  One designated edge is fixed red (swapping the
    colors preserves the count, so this halves the search exactly)."""
    if n > 7:
        raise CapacityError("f2_exact enumerates colorings only for n <= 7")
    if n < 0:
        raise ParameterError("f2_exact needs n >= 0")
    num_edges = n * (n - 1) // 2
    if h.n > n or h.edge_count() == 0:
        return num_edges
    if num_edges == 0:
        return 0
    copies = _copy_edge_masks(n, h)
    if not copies:
        return num_edges
    reds = (np.arange(1 << (num_edges - 1), dtype=np.uint32) << 1) | 1
    covered = np.zeros(reds.shape, dtype=np.uint32)
    for mask in copies:
        sub = reds & np.uint32(mask)
        mono = (sub == np.uint32(mask)) | (sub == 0)
        covered[mono] |= np.uint32(mask)
    return int(num_edges - _popcount32(covered).min())


def f2_count_uncovered(coloring: "EdgeColoring", h: Graph) -> int:
    """Edges of the colored complete graph lying in no monochromatic copy of
    h; anchored containment per edge inside its own color class."""
    n = coloring.n
    if n > 40:
        raise CapacityError("f2_count_uncovered caps the host at 40 vertices")
    if h.n > n:
        return n * (n - 1) // 2
    count = 0
    for g in (coloring.red_graph(), coloring.blue_graph()):
        if not contains_subgraph(g, h):
            count += g.edge_count()  # no copy in this class at all
            continue
        for e in g.edges():
            if not contains_subgraph(g, h, anchor=e):
                count += 1
    return count


# -- lemma audits ---------------------------------------------------------


@dataclass(frozen=True)
class PartitionedGraph:
    """A graph with an ordered vertex bipartition (V_0, V_1)."""

    graph: Graph
    v0: tuple[int, ...]
    v1: tuple[int, ...]

    def __post_init__(self) -> None:
        all_v = sorted(self.v0 + self.v1)
        if all_v != list(range(self.graph.n)):
            raise ParameterError("v0, v1 must partition the vertex set")

    def mask(self, i: int) -> int:
        verts = self.v0 if i == 0 else self.v1
        m = 0
        for v in verts:
            m |= 1 << v
        return m

    def side_edges(self, i: int) -> int:
        m = self.mask(i)
        return induced(self.graph, m).edge_count()

    def cross_edges(self) -> int:
        m0 = self.mask(0)
        return sum((self.graph.rows[v] & m0).bit_count() for v in self.v1)


@dataclass(frozen=True)
class PartitionAudit:
    premises_hold: bool
    inequality_holds: bool
    lhs: int
    bound: int


def _star_union(j: int, ell: int) -> Graph:
    k2 = from_edges(2, [(0, 1)])
    return union_all([star_graph(j)] + [k2] * ell)


def partition_premise_patterns(k: int, k1: int) -> list[Graph]:
    """The family {S_{k-l} u l K_2 : 0 <= l <= min(k-k1, k-2) or l = k-1}."""
    ells = set(range(0, min(k - k1, k - 2) + 1)) if min(k - k1, k - 2) >= 0 else set()
    if k - 1 >= 0:
        ells.add(k - 1)
    return [_star_union(k - ell, ell) for ell in sorted(ells) if k - ell >= 1]


def lemma_partition_audit(pg: PartitionedGraph, k: int, k1: int) -> PartitionAudit:
    """Check the partitioned-graph inequality: under the freeness, degree and
    isolation premises, e(G_0)+e(G_1) - (|V_0||V_1| - e(G_cr)) stays below
    (k-1)^2 when k > k1 and below f(k-1,k-1) when k = k1."""
    if k < k1:
        raise ParameterError("need k >= k1")
    if pg.graph.n > 20:
        raise CapacityError("lemma_partition_audit caps at 20 vertices")
    g = pg.graph
    masks = (pg.mask(0), pg.mask(1))
    sides = (pg.v0, pg.v1)
    patterns = partition_premise_patterns(k, k1)

    premises = True
    for i in (0, 1):
        gi = induced(g, masks[i])
        if any(
            p.n <= gi.n and p.edge_count() <= gi.edge_count() and contains_subgraph(gi, p)
            for p in patterns
        ):
            premises = False
            break
        other = masks[1 - i]
        for v in sides[i]:
            d_in = (g.rows[v] & masks[i]).bit_count()
            nb_other = g.rows[v] & other
            nu_nb = max_matching(induced(g, nb_other)) if nb_other else 0
            if d_in + nu_nb > k - 1:
                premises = False
                break
            if k > k1 and d_in == k - 1:
                g_other = induced(g, other)
                pos = {u: idx for idx, u in enumerate(bit_indices(other))}
                if any(g_other.rows[pos[u]] for u in iter_bits(nb_other)):
                    premises = False
                    break
        if not premises:
            break

    e0 = pg.side_edges(0)
    e1 = pg.side_edges(1)
    ecr = pg.cross_edges()
    lhs = e0 + e1 - (len(pg.v0) * len(pg.v1) - ecr)
    if k > k1:
        bound = (k - 1) ** 2
    else:
        bound = chvatal_hanson(k - 1, k - 1) if k >= 1 else 0
    return PartitionAudit(premises, lhs <= bound, lhs, bound)


def degree_sum_audit(g: Graph, b: int, delta: int | None = None) -> bool:
    """Check sum_v min{d(v), b} <= nu(G) * (b + delta).

    delta is the lemma's free parameter: it must dominate the maximum degree
    and satisfy b <= delta - 2; the default is the smallest valid value."""
    if b < 0:
        raise ParameterError("b must be nonnegative")
    dmax = g.max_degree()
    if delta is None:
        delta = max(dmax, b + 2)
    if delta < b + 2 or dmax > delta:
        raise ParameterError(
            f"lemma hypothesis not met: need max degree <= delta and b <= delta-2 "
            f"(got b={b}, delta={delta}, max degree={dmax})"
        )
    lhs = sum(min(d, b) for d in g.degrees())
    return lhs <= max_matching(g) * (b + delta)

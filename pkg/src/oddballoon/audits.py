"""Randomized and exhaustive audits of the supporting lemmas.

Each audit draws reproducible samples from an explicit seed, checks the
lemma's statement literally, and returns the counterexamples found (an
empty list certifies the run).
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .balloon import BalloonSpec, BipartiteTree, bipartition
from .decomp import b_family, decomposition_family, decomposition_oracle, split_vertices
from .generate import (
    graph_levels,
    random_bipartite_graph,
    random_graph,
    random_tree,
    trees_up_to,
)
from .graphs import Graph, bit_indices, complete_graph, is_bipartite
from .matching import hall_violating_set, max_matching, min_vertex_cover
from .oracle import PartitionedGraph, degree_sum_audit, lemma_partition_audit


@dataclass(frozen=True)
class AuditResult:
    name: str
    samples: int
    counterexamples: list
    detail: str = ""

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        verdict = "ok" if self.ok else f"{len(self.counterexamples)} counterexample(s)"
        extra = f" ({self.detail})" if self.detail else ""
        return f"audit {self.name}: samples={self.samples} {verdict}{extra}"


def _tree_from_graph(g: Graph) -> BipartiteTree:
    names = tuple(str(v) for v in range(g.n))
    return BipartiteTree(names, tuple(g.edges()))


def _spec_with_lengths(tree: BipartiteTree, lengths: dict | int) -> BalloonSpec:
    if isinstance(lengths, int):
        return BalloonSpec(tuple((e, lengths) for e in tree.edges))
    return BalloonSpec(tuple(sorted(lengths.items())))


def konig_audit(samples: int = 10_000, seed: int = 0) -> AuditResult:
    """beta = nu on bipartite graphs: exhaustive on all graphs up to 6
    vertices plus random bipartite graphs up to 14 vertices."""
    rng = random.Random(seed)
    bad = []
    checked = 0
    for level in graph_levels(6):
        for g in level:
            if is_bipartite(g):
                checked += 1
                if min_vertex_cover(g) != max_matching(g):
                    bad.append(g)
    while checked < samples:
        nx = rng.randint(1, 7)
        ny = rng.randint(1, 7)
        g = random_bipartite_graph(rng, nx, ny, rng.uniform(0.1, 0.9))
        checked += 1
        if min_vertex_cover(g) != max_matching(g):
            bad.append(g)
    return AuditResult("konig", checked, bad)


def hall_audit(samples: int = 10_000, seed: int = 0) -> AuditResult:
    """nu >= |X| iff every S in X has |N(S)| >= |S|, on random bipartite
    graphs with at most 12 vertices."""
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        nx = rng.randint(1, 6)
        ny = rng.randint(1, 6)
        g = random_bipartite_graph(rng, nx, ny, rng.uniform(0.1, 0.9))
        x_mask = (1 << nx) - 1
        saturates = max_matching(g) >= nx
        hall_holds = hall_violating_set(g, x_mask) is None
        if saturates != hall_holds:
            bad.append(g)
    return AuditResult("hall", samples, bad)


def degree_sum_random_audit(samples: int = 10_000, seed: int = 0) -> AuditResult:
    """The degree-sum inequality on random graphs up to 14 vertices, with b
    drawn from the lemma's admissible range."""
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        n = rng.randint(2, 14)
        g = random_graph(rng, n, rng.uniform(0.1, 0.8))
        b = rng.randint(0, max(g.max_degree() - 2, 0))
        if not degree_sum_audit(g, b):
            bad.append((g, b))
    return AuditResult("degree-sum", samples, bad)


def wang_audit(max_tree_size: int = 8) -> AuditResult:
    """Splitting any single vertex of A in a tree with min degree over A at
    least 2 leaves a matching of size at least a-1+k; exhaustive over all
    trees up to the given size."""
    bad = []
    checked = 0
    for n in range(2, max_tree_size + 1):
        for tg in trees_up_to(max_tree_size)[n]:
            tree = _tree_from_graph(tg)
            side_a, side_b = bipartition(tree)
            orientations = [side_a] if len(side_a) < len(side_b) else [side_a, side_b]
            for side in orientations:
                k = min(tree.degree(v) for v in side)
                if k < 2:
                    continue
                a = len(side)
                for u in side:
                    split_g, _ = split_vertices(tg, {u})
                    checked += 1
                    if max_matching(split_g) < a - 1 + k:
                        bad.append((tree, u))
    return AuditResult("wang", checked, bad)


def covering_audit(max_tree_size: int = 8, seed: int = 0) -> AuditResult:
    """Two statements over all trees up to the given size, with all-triangle,
    all-pentagon and one random odd-length assignment each:
    the covering family is {K_a} iff beta(T) = a, and min degree over A of
    at least 2 forces beta(T) = a."""
    rng = random.Random(seed)
    bad = []
    checked = 0
    ka_key_cache: dict[int, frozenset] = {}
    from .canon import canonical_key
    from .decomp import GraphFamily

    def ka_keys(a: int) -> frozenset:
        if a not in ka_key_cache:
            fam = GraphFamily()
            fam.add(complete_graph(a), strip=False)
            ka_key_cache[a] = fam.keys()
        return ka_key_cache[a]

    for n in range(2, max_tree_size + 1):
        for tg in trees_up_to(max_tree_size)[n]:
            tree = _tree_from_graph(tg)
            assignments = [3, 5]
            random_lengths = {e: rng.choice([3, 5, 7]) for e in tree.edges}
            for lengths in [*assignments, random_lengths]:
                spec = _spec_with_lengths(tree, lengths)
                side_a, _ = bipartition(tree, spec)
                a = len(side_a)
                beta = min_vertex_cover(tg)
                fam = b_family(tree, spec)
                is_ka = fam.keys() == ka_keys(a)
                checked += 1
                if is_ka != (beta == a):
                    bad.append((tree, lengths, "B={K_a} iff beta=a"))
                k = min(tree.degree(v) for v in side_a)
                if k >= 2 and beta != a:
                    bad.append((tree, lengths, "delta(A)>=2 forces beta=a"))
    return AuditResult("covering", checked, bad)


def lemma1_audit(max_tree_edges: int = 3, lengths: tuple[int, ...] = (3, 5)) -> AuditResult:
    """Splitting/peeling family equals the definition-based oracle family,
    for every tree with at most max_tree_edges edges and every assignment of
    the given lengths."""
    from itertools import product

    bad = []
    checked = 0
    for n in range(2, max_tree_edges + 2):
        for tg in trees_up_to(max_tree_edges + 1)[n]:
            tree = _tree_from_graph(tg)
            for combo in product(lengths, repeat=len(tree.edges)):
                spec = _spec_with_lengths(tree, dict(zip(tree.edges, combo)))
                fam = decomposition_family(tree, spec)
                orc = decomposition_oracle(tree, spec)
                checked += 1
                if not fam.iso_equal(orc):
                    bad.append((tree, combo))
    return AuditResult("lemma1", checked, bad)


def partition_audit(samples: int = 10_000, seed: int = 0, max_n: int = 12, max_k: int = 4) -> AuditResult:
    """Random partitioned graphs: wherever the premises hold, the partitioned
    inequality must hold.  Counterexamples are premise-satisfying violations;
    the result also reports how many samples satisfied the premises."""
    rng = random.Random(seed)
    bad = []
    premise_hits = 0
    for _ in range(samples):
        n = rng.randint(0, max_n)
        g = random_graph(rng, n, rng.uniform(0.05, 0.5))
        verts = list(range(n))
        rng.shuffle(verts)
        cut = rng.randint(0, n)
        pg = PartitionedGraph(g, tuple(sorted(verts[:cut])), tuple(sorted(verts[cut:])))
        k1 = rng.randint(0, max_k)
        k = rng.randint(k1, max_k)
        res = lemma_partition_audit(pg, k, k1)
        if res.premises_hold:
            premise_hits += 1
            if not res.inequality_holds:
                bad.append((g, pg.v0, pg.v1, k, k1))
    return AuditResult("partition", samples, bad, detail=f"{premise_hits} premise-satisfying")


AUDIT_NAMES = ("konig", "hall", "degree-sum", "wang", "covering", "lemma1", "partition")


def run_audit(name: str, samples: int = 10_000, seed: int = 0) -> AuditResult:
    """Dispatch by name; sampled audits take samples/seed, exhaustive ones
    run over their fixed corpora."""
    if name == "konig":
        return konig_audit(samples, seed)
    if name == "hall":
        return hall_audit(samples, seed)
    if name == "degree-sum":
        return degree_sum_random_audit(samples, seed)
    if name == "wang":
        return wang_audit()
    if name == "covering":
        return covering_audit(seed=seed)
    if name == "lemma1":
        return lemma1_audit()
    if name == "partition":
        return partition_audit(samples, seed)
    raise KeyError(f"unknown audit {name!r}")

import random
import time

import pytest

from helpers import brute_contains
from oddballoon.embed import contains_subgraph, creates_copy_with_vertex
from oddballoon.generate import random_graph, small_edge_classes
from oddballoon.graphs import (
    ParameterError,
    add_vertex,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    path_graph,
    turan_graph,
)

BOWTIE = from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def test_examples():
    assert contains_subgraph(complete_graph(5), BOWTIE)
    assert not contains_subgraph(cycle_graph(5), complete_graph(3))
    assert not contains_subgraph(turan_graph(20, 2), cycle_graph(5))


def test_self_and_empty_patterns():
    for g in [complete_graph(4), path_graph(5), BOWTIE]:
        assert contains_subgraph(g, g)
        for k in range(g.n + 1):
            assert contains_subgraph(g, empty_graph(k))
        assert not contains_subgraph(g, empty_graph(g.n + 1))


def test_not_induced_semantics():
    # P_3 embeds into K_3 even though K_3 has the extra edge
    assert contains_subgraph(complete_graph(3), path_graph(3))


def test_against_brute_force_fuzz():
    rng = random.Random(2024)
    patterns = [g for g in small_edge_classes(4, 8) if g.n <= 5]
    for _ in range(300):
        host = random_graph(rng, rng.randint(1, 7), rng.uniform(0.2, 0.9))
        pat = rng.choice(patterns)
        assert contains_subgraph(host, pat) == brute_contains(host, pat)


def test_anchored_semantics():
    host = disjoint_union(complete_graph(3), complete_graph(2))
    k3 = complete_graph(3)
    # the K_2 component's edge is in no triangle
    assert not contains_subgraph(host, k3, anchor=(3, 4))
    assert contains_subgraph(host, k3, anchor=(0, 1))
    with pytest.raises(ParameterError):
        contains_subgraph(host, k3, anchor=(0, 3))  # not a host edge


def test_anchored_against_brute_force_fuzz():
    rng = random.Random(77)
    patterns = [g for g in small_edge_classes(3, 6) if g.n <= 4]
    checked = 0
    while checked < 200:
        host = random_graph(rng, rng.randint(2, 6), rng.uniform(0.3, 0.9))
        edges = host.edges()
        if not edges:
            continue
        e = rng.choice(edges)
        pat = rng.choice(patterns)
        assert contains_subgraph(host, pat, anchor=e) == brute_contains(host, pat, anchor=e)
        checked += 1


def test_creates_copy_with_vertex_matches_full_check():
    rng = random.Random(31)
    patterns = [g for g in small_edge_classes(3, 6) if g.n <= 5]
    patterns.append(disjoint_union(complete_graph(2), empty_graph(2)))  # isolated verts
    for _ in range(300):
        parent_n = rng.randint(0, 6)
        parent = random_graph(rng, parent_n, 0.4)
        pat = rng.choice(patterns)
        if brute_contains(parent, pat):
            continue  # helper contract: the parent must be pattern-free
        cand = add_vertex(parent, rng.getrandbits(parent_n) if parent_n else 0)
        assert creates_copy_with_vertex(cand, pat, parent_n) == brute_contains(cand, pat)


def test_dense_host_performance_contract():
    t0 = time.perf_counter()
    for _ in range(20):
        assert contains_subgraph(complete_graph(40), BOWTIE)
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, f"20 bowtie-in-K40 queries took {elapsed:.3f}s"

import random

import pytest

from oddballoon.canon import canonical_form, canonical_key, component_key, is_isomorphic
from oddballoon.generate import graph_levels, random_graph
from oddballoon.graphs import (
    CapacityError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    path_graph,
    relabel,
    star_graph,
)


def test_key_examples():
    c6 = cycle_graph(6)
    k33_minus_pm = from_edges(6, [(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5)])
    assert canonical_key(c6) == canonical_key(k33_minus_pm)
    assert canonical_key(star_graph(3)) != canonical_key(path_graph(4))
    two_k3 = disjoint_union(complete_graph(3), complete_graph(3))
    assert canonical_key(two_k3) != canonical_key(c6)


def test_keys_invariant_under_relabeling():
    rng = random.Random(42)
    for _ in range(200):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.uniform(0.1, 0.9))
        perm = list(range(n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert canonical_key(g) == canonical_key(h)
        assert canonical_form(g) == canonical_form(h)
        assert component_key(g) == component_key(h)


def test_keys_separate_all_small_classes():
    seen = set()
    for level in graph_levels(6):
        for g in level:
            key = canonical_key(g)
            assert key not in seen
            seen.add(key)
    assert len(seen) == 1 + 1 + 2 + 4 + 11 + 34 + 156


def test_isolated_vertices_matter():
    assert canonical_key(empty_graph(1)) != canonical_key(empty_graph(2))
    k2 = from_edges(2, [(0, 1)])
    k2_plus = disjoint_union(k2, empty_graph(1))
    assert canonical_key(k2) != canonical_key(k2_plus)


def test_is_isomorphic_and_cap():
    assert is_isomorphic(complete_bipartite(2, 2), cycle_graph(4))
    assert not is_isomorphic(path_graph(3), complete_graph(3))
    with pytest.raises(CapacityError):
        canonical_key(empty_graph(17))
    ok = canonical_form(complete_bipartite(2, 3))
    assert is_isomorphic(ok, complete_bipartite(2, 3))


def test_component_key_beyond_cap():
    # 18 vertices in small components: still handled
    g = disjoint_union(disjoint_union(complete_graph(6), complete_graph(6)), complete_graph(6))
    h = disjoint_union(disjoint_union(complete_graph(6), complete_graph(6)), complete_graph(6))
    assert component_key(g) == component_key(h)


def test_forest_canonical_form_fuzz():
    # forests exercise the rooted-code route; relabelings must collapse and
    # canonical_form must be idempotent
    from oddballoon.generate import random_tree

    rng = random.Random(77)
    for _ in range(300):
        pieces = [random_tree(rng, rng.randint(1, 5)) for _ in range(rng.randint(1, 3))]
        g = pieces[0]
        for p in pieces[1:]:
            g = disjoint_union(g, p)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert canonical_key(g) == canonical_key(h)
        cf = canonical_form(g)
        assert cf == canonical_form(h)
        assert canonical_form(cf) == cf


def test_forest_vs_cyclic_keys_never_collide():
    from oddballoon.generate import graph_levels

    for level in graph_levels(6):
        for g in level:
            key = canonical_key(g)
            from oddballoon.graphs import is_forest

            assert key.startswith(b"T") == is_forest(g)

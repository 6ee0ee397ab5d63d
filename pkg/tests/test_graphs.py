import pytest

from oddballoon.graphs import (
    CapacityError,
    Graph,
    ParameterError,
    build_standard,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    induced,
    is_bipartite,
    is_forest,
    join,
    path_graph,
    star_graph,
    strip_isolated,
    turan_graph,
)


def test_standard_builders():
    assert turan_graph(5, 2).edge_count() == 6  # K_{2,3}
    assert empty_graph(4).edge_count() == 0
    s3 = star_graph(3)
    assert s3.n == 4 and s3.edge_count() == 3
    assert path_graph(4).edge_count() == 3
    assert cycle_graph(5).edge_count() == 5
    assert complete_graph(6).edge_count() == 15


def test_build_standard_dispatch():
    assert build_standard("turan", 5, 2).edge_count() == 6
    assert build_standard("star", 3).n == 4
    with pytest.raises(ParameterError):
        build_standard("turan", 5)
    with pytest.raises(ParameterError):
        build_standard("moebius", 5)
    with pytest.raises(ParameterError):
        build_standard("cycle", 2)
    with pytest.raises(ParameterError):
        build_standard("turan", 5, 0)


def test_turan_edge_count_formula():
    # number of pairs in distinct parts
    for n in range(0, 15):
        for p in range(1, 5):
            g = build_standard("turan", n, p)
            sizes = [n // p + (1 if i < n % p else 0) for i in range(p)]
            expected = (n * n - sum(s * s for s in sizes)) // 2
            assert g.edge_count() == expected


def test_join_and_union():
    wheelish = join(empty_graph(1), cycle_graph(4))
    assert wheelish.edge_count() == 8
    k23 = join(empty_graph(2), empty_graph(3))
    assert k23.edge_count() == complete_bipartite(2, 3).edge_count() == 6
    two_k3 = disjoint_union(complete_graph(3), complete_graph(3))
    assert two_k3.n == 6 and two_k3.edge_count() == 6
    g, h = complete_graph(4), cycle_graph(5)
    assert join(g, h).edge_count() == g.edge_count() + h.edge_count() + g.n * h.n


def test_graph_invariants_enforced():
    with pytest.raises(ParameterError):
        Graph(2, (0b10,))  # row count mismatch
    with pytest.raises(ParameterError):
        Graph(2, (0b01, 0b00))  # self loop at 0
    with pytest.raises(ParameterError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ParameterError):
        Graph(1, (0b10,))  # bit >= n
    with pytest.raises(ParameterError):
        from_edges(2, [(0, 0)])


def test_capacity_cap(monkeypatch):
    with pytest.raises(CapacityError):
        empty_graph(200)
    monkeypatch.setenv("TB_MAX_VERTICES", "10")
    with pytest.raises(CapacityError):
        empty_graph(11)
    assert empty_graph(10).n == 10
    # the env var may lower but never raise the cap
    monkeypatch.setenv("TB_MAX_VERTICES", "100000")
    with pytest.raises(CapacityError):
        empty_graph(129)


def test_components_and_bipartite():
    g = disjoint_union(cycle_graph(4), path_graph(3))
    comps = connected_components(g)
    assert len(comps) == 2
    assert is_bipartite(g)
    assert not is_bipartite(cycle_graph(5))
    assert is_forest(path_graph(5))
    assert not is_forest(cycle_graph(4))


def test_induced_and_strip():
    g = star_graph(3)
    sub = induced(g, 0b0110)  # center=0 excluded: two leaves, no edges
    assert sub.n == 2 and sub.edge_count() == 0
    h = disjoint_union(complete_graph(2), empty_graph(3))
    assert strip_isolated(h).n == 2

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import subcubic_graphs
from subcubic_packing.corpus import named
from subcubic_packing.graph import (Graph, GraphError, bridges, conflict_pairs, contract_class, edge_distance,
                                    girth, is_bipartite, is_bridgeless, is_matching, shortest_cycle,
                                    structure_stats)


def nx_graph(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def test_edge_distance_on_path():
    g = named("path(5)")  # edges 0..3 in a row
    assert [edge_distance(g, 0, f) for f in range(4)] == [0, 1, 2, 3]


def test_disconnected_edges_are_infinitely_far():
    g = Graph(4, [(0, 1), (2, 3)])
    assert edge_distance(g, 0, 1) == float("inf")
    assert conflict_pairs(g, 5) == set()


def test_out_of_range_vertex_rejected():
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])
    with pytest.raises(GraphError):
        edge_distance(named("k4"), 0, 9)


@settings(max_examples=60, deadline=None)
@given(subcubic_graphs())
def test_edge_distance_matches_line_graph(g):
    h = nx_graph(g)
    lg = nx.line_graph(h)
    d = dict(nx.all_pairs_shortest_path_length(lg))
    for e, f in itertools.combinations(range(g.edge_count), 2):
        a = tuple(g.edges[e]) if tuple(g.edges[e]) in d else tuple(reversed(g.edges[e]))
        b = tuple(g.edges[f]) if tuple(g.edges[f]) in d else tuple(reversed(g.edges[f]))
        assert edge_distance(g, e, f) == d[a].get(b, float("inf"))


@settings(max_examples=60, deadline=None)
@given(subcubic_graphs())
def test_edge_distance_is_a_metric(g):
    m = g.edge_count
    D = g.edge_distances
    for e in range(m):
        assert D[e][e] == 0
        for f in range(m):
            assert D[e][f] == D[f][e]
            for x in range(m):
                assert D[e][x] <= D[e][f] + D[f][x]


@settings(max_examples=40, deadline=None)
@given(subcubic_graphs())
def test_conflicts_grow_with_s(g):
    for s in (1, 2, 3):
        assert conflict_pairs(g, s) <= conflict_pairs(g, s + 1)
    # s = 1 conflicts are exactly the adjacent pairs
    adj = {(e, f) for e, f in itertools.combinations(range(g.edge_count), 2)
           if set(g.edges[e]) & set(g.edges[f])}
    assert conflict_pairs(g, 1) == adj


@settings(max_examples=40, deadline=None)
@given(subcubic_graphs())
def test_bridges_match_networkx(g):
    h = nx_graph(g)
    expected = {frozenset(e) for e in nx.bridges(h)}
    assert {frozenset(g.edges[e]) for e in bridges(g)} == expected
    if g.is_connected():
        assert is_bridgeless(g) == (not expected)
    else:
        with pytest.raises(GraphError):
            is_bridgeless(g)


@settings(max_examples=40, deadline=None)
@given(subcubic_graphs())
def test_girth_and_bipartite_match_networkx(g):
    h = nx_graph(g)
    assert is_bipartite(g) == nx.is_bipartite(h)
    assert girth(g) == nx.girth(h)
    cyc = shortest_cycle(g)
    if cyc is None:
        assert girth(g) == float("inf")
    else:
        assert len(cyc) == girth(g)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert h.has_edge(a, b)


def test_parallel_edges_are_not_bridges():
    g = Graph(3, [(0, 1), (0, 1), (1, 2)])
    assert bridges(g) == [2]
    assert not g.is_simple


def test_contract_perfect_matching_of_k4():
    g = named("k4")
    X = [0, 5]  # 01 and 23
    assert is_matching(g, X)
    c = contract_class(g, X)
    assert c.graph.vertex_count == 2
    assert c.graph.edge_count == 4
    assert sorted(c.vertex_map) == [(0, 1), (2, 3)]
    assert len(c.edge_map) == 4 and not set(c.edge_map) & set(X)


def test_contract_requires_matching():
    with pytest.raises(GraphError):
        contract_class(named("k4"), [0, 1])


def test_structure_stats_petersen():
    st = structure_stats(named("petersen"))
    assert st.max_degree == 3 and st.girth == 5 and not st.bipartite
    assert set(st.edge_weights) == {6}


def test_induced_subgraph_maps_back():
    g = named("petersen")
    sub, vmap, emap = g.induced([0, 1, 2, 3, 4, 5])
    for i, (u, v) in enumerate(sub.edges):
        assert {vmap[u], vmap[v]} == set(g.edges[emap[i]])

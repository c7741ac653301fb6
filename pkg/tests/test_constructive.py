import itertools

import networkx as nx
import pytest

from subcubic_packing.constructive import (SPEC_127, Trichotomy, InvariantViolation, alpha_induced_127, bc_cycles,
                                           claim7_trichotomy, coloring_1112, crossing, crossing_lists,
                                           good_128, good_128_report, proper_3_edge_colorings, theorem_a,
                                           theorem_a_report)
from subcubic_packing.corpus import named
from subcubic_packing.graph import Graph, GraphError
from subcubic_packing.packing import EdgeColoring, PackingSpec, SolveOptions, solve, verify

NAMED = ["k4", "k4_subdivided", "k33", "k33_subdivided", "petersen", "tietze", "wagner", "prism3",
         "cycle(5)", "cycle(6)", "path(4)"]


def from_nx(h):
    h = nx.convert_node_labels_to_integers(h)
    return Graph(h.number_of_nodes(), h.edges())


@pytest.mark.parametrize("name", NAMED)
def test_constructions_verify_on_named_graphs(name):
    g = named(name)
    c = coloring_1112(g)
    assert c.spec == PackingSpec((1, 1, 1, 2)) and verify(g, c).valid
    c = theorem_a(g)
    assert verify(g, c).valid and len(c.spec) in (6, 7)
    rep = good_128_report(g)
    assert rep.coloring.spec == PackingSpec.parse("1,2^8")
    assert verify(g, rep.coloring, SolveOptions(good=True)).valid
    assert rep.fallbacks == 0


def test_contraction_uses_fewer_classes_on_class_one():
    assert theorem_a(named("k33")).spec == PackingSpec.parse("1,1,2^4")
    rep = theorem_a_report(named("petersen"))
    assert rep.coloring.spec == PackingSpec.parse("1,1,2^5")
    assert rep.start.spec == PackingSpec((1, 1, 1, 2))


def test_good_trace_measure_decreases():
    rep = good_128_report(named("tietze"))
    assert rep.trace
    for step, before, after, level in rep.trace:
        assert after < before


def test_good_rejects_non_subcubic():
    star = Graph(5, [(0, i) for i in range(1, 5)])
    with pytest.raises(GraphError):
        good_128(star)


@pytest.mark.parametrize("name", ["k33", "prism3"])
def test_alpha_induced_every_coloring_every_alpha(name):
    g = named(name)
    for pi in proper_3_edge_colorings(g):
        for alpha in (1, 2, 3, "a"):
            c = alpha_induced_127(g, pi, alpha)
            assert c.spec == SPEC_127 and verify(g, c).valid
            a = alpha if isinstance(alpha, int) else 1
            assert set(c.class_members(1)) == set(pi.class_members(a))


def test_alpha_induced_fails_on_wagner_spokes():
    # spokes as the alpha class leave the 8-cycle, whose edges are pairwise
    # within distance 2, so seven 2-classes cannot cover it
    g = named("wagner")
    # rim edge (i, i+1) gets 1 + i % 2, spokes (i, i+4) get 3
    assign = tuple(3 if v - u == 4 else 1 + u % 2 for u, v in g.edges)
    pi = EdgeColoring(assign, PackingSpec((1, 1, 1)))
    assert verify(g, pi).valid
    rim = pi.class_members(1) + pi.class_members(2)
    D = g.edge_distances
    assert all(D[e][f] <= 2 for e, f in itertools.combinations(rim, 2))
    with pytest.raises(InvariantViolation):
        alpha_induced_127(g, pi, 3)
    # the other two classes work
    for alpha in (1, 2):
        assert verify(g, alpha_induced_127(g, pi, alpha)).valid


def test_alpha_induced_rejects_improper_pi():
    g = named("k33")
    with pytest.raises(GraphError):
        alpha_induced_127(g, [1] * g.edge_count, 1)
    with pytest.raises(ValueError):
        alpha_induced_127(g, solve(g, (1, 1, 1)), "d")


def test_bc_cycles_partition_non_alpha_edges():
    g = from_nx(nx.heawood_graph())
    pi = solve(g, (1, 1, 1))
    for a in (1, 2, 3):
        cycles = bc_cycles(g, pi, a)
        assert sum(len(c) for c in cycles) == g.vertex_count
        for cyc in cycles:
            assert len(cyc) % 2 == 0


def _crossings(g, pi, alpha=1):
    for cyc in bc_cycles(g, pi, alpha):
        n = len(cyc)
        if n < 6:
            continue
        for s in range(n):
            P = [cyc[(s + i) % n] for i in range(6)]
            try:
                yield crossing(g, pi, P, alpha)
            except GraphError:
                continue


@pytest.mark.parametrize("maker", [nx.heawood_graph, nx.desargues_graph])
def test_crossing_shape(maker):
    g = from_nx(maker())
    pi = solve(g, (1, 1, 1))
    found = 0
    for cr in _crossings(g, pi):
        found += 1
        assert cr.graph.edge_count == g.edge_count - 7
        assert verify(cr.graph, cr.coloring).valid
        assert [cr.coloring[e] for e in cr.new_edges] == [1, 1]
        for j in range(1, 5):
            assert cr.graph.degrees[cr.path[j]] == 0
    assert found


def test_crossing_preconditions():
    g = named("k33")
    pi = solve(g, (1, 1, 1))
    with pytest.raises(GraphError):
        crossing(g, pi, [0, 3, 1, 4, 2, 5], 1)  # pendants land on the path or colors clash
    with pytest.raises(GraphError):
        crossing(g, pi, [0, 1, 2, 3, 4, 5], 1)


def test_trichotomy_on_heawood_crossings():
    g = from_nx(nx.heawood_graph())
    pi = solve(g, (1, 1, 1))
    seen = 0
    for cr in itertools.islice(_crossings(g, pi), 12):
        sigma = alpha_induced_127(cr.graph, cr.coloring, 1)
        lists = crossing_lists(g, cr, sigma)
        case, wit = claim7_trichotomy(*lists)
        assert case is not Trichotomy.UNMATCHED
        seen += 1
    assert seen


def test_trichotomy_classification():
    assert claim7_trichotomy({1}, {1, 2, 3, 4, 5}, {1})[0] is Trichotomy.CASE1
    assert claim7_trichotomy({1, 2, 3, 4}, {4, 5}, {1, 2, 3, 4}) == (Trichotomy.CASE2, (4,))
    assert claim7_trichotomy({1, 2}, {3, 4, 5, 6}, {7, 8}) == (Trichotomy.CASE3, (1, 7))
    assert claim7_trichotomy({1}, {2}, {3})[0] is Trichotomy.UNMATCHED

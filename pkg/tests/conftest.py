import itertools

from hypothesis import strategies as st

from subcubic_packing.graph import Graph


@st.composite
def subcubic_graphs(draw, max_vertices=8, min_vertices=1):
    """Random simple subcubic graph: shuffle all pairs, keep those that fit."""
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    order = draw(st.permutations(pairs)) if pairs else []
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    deg = [0] * n
    edges = []
    for (u, v), k in zip(order, keep):
        if k and deg[u] < 3 and deg[v] < 3:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, edges)


def naive_colorings(g, spec):
    """Every assignment of classes to edges that satisfies the distance rule."""
    dist = g.edge_distances
    k = len(spec)
    for assign in itertools.product(range(1, k + 1), repeat=g.edge_count):
        if all(assign[e] != assign[f] or dist[e][f] > spec[assign[e] - 1]
               for e in range(g.edge_count) for f in range(e + 1, g.edge_count)):
            yield assign


# criterion -> (passed, detail); filled by test_acceptance and echoed at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")

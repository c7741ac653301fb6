"""Small subcubic graphs up to isomorphism, and packing surveys over them."""

from __future__ import annotations

import enum
import functools
import itertools
import re
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterator

import networkx as nx

from .corpus import read_graph6, write_graph6
from .graph import Graph, GraphError, girth, is_bipartite, is_bridgeless
from .packing import BudgetExhausted, PackingSpec, is_class_one, solve

__all__ = [
    "DEFAULT_CAP_GENERAL",
    "DEFAULT_CAP_CUBIC",
    "canonical_form",
    "enumerate_subcubic",
    "Expect",
    "SurveyPredicate",
    "SurveyReport",
    "passes_filters",
    "run_survey",
]

DEFAULT_CAP_GENERAL = 9
DEFAULT_CAP_CUBIC = 10


# ---------------------------------------------------------------------------
# canonical form


def _refine(adj: list[frozenset[int]], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; splits are ordered by neighbour-count signature."""
    while True:
        where = {}
        for i, cell in enumerate(cells):
            for v in cell:
                where[v] = i
        k = len(cells)
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * k
                for w in adj[v]:
                    counts[where[w]] += 1
                sig[v] = tuple(counts)
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                changed = True
            for key in keys:
                out.append([v for v in cell if sig[v] == key])
        cells = out
        if not changed:
            return cells


def canonical_form(g: Graph) -> bytes:
    """graph6 string of a canonical relabeling; equal iff the graphs are isomorphic.

    Components are canonized separately and laid out in sorted order, which
    keeps unions of many equal components (perfect matchings, say) cheap.
    """
    if not g.is_simple:
        raise GraphError("canonical_form needs a simple graph")
    comps = g.components()
    if len(comps) <= 1:
        return _canonical_connected(g)
    forms = sorted((len(c), _canonical_connected(g.induced(c)[0])) for c in comps)
    return write_graph6(_union(tuple(f for _, f in forms)))


def _canonical_connected(g: Graph) -> bytes:
    """Individualization-refinement: refine the degree partition, branch on
    every vertex of the first smallest non-trivial cell, and keep the
    lexicographically smallest adjacency code over all discrete leaves.
    """
    n = g.vertex_count
    adj = list(g.neighbors)
    deg = g.degrees
    cells = [[v for v in range(n) if deg[v] == d] for d in sorted(set(deg))]
    best: list = [None, None]

    def code(order: list[int]) -> tuple:
        bits = []
        for j in range(n):
            vj = order[j]
            for i in range(j):
                bits.append(1 if order[i] in adj[vj] else 0)
        return tuple(bits)

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            c = code(order)
            if best[0] is None or c < best[0]:
                best[0], best[1] = c, order
            return
        size = min(len(c) for c in cells if len(c) > 1)
        idx = next(i for i, c in enumerate(cells) if len(c) == size)
        cell = cells[idx]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    if n == 0:
        return write_graph6(g)
    search(cells)
    order = best[1]
    pos = {v: i for i, v in enumerate(order)}
    relabeled = Graph(n, sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges))
    return write_graph6(relabeled)


# ---------------------------------------------------------------------------
# generation


@functools.lru_cache(maxsize=None)
def _connected(n: int) -> tuple[bytes, ...]:
    """Canonical forms of connected subcubic graphs on n vertices, sorted.

    Every connected graph has a vertex whose removal keeps it connected, so
    extending each (n-1)-vertex graph by one vertex joined to 1..3 vertices of
    degree < 3 reaches every class; duplicates are removed by canonical form.
    """
    if n <= 0:
        return ()
    if n == 1:
        return (canonical_form(Graph(1)),)
    seen = set()
    for form in _connected(n - 1):
        h = read_graph6(form)
        free = [v for v in range(n - 1) if h.degrees[v] < 3]
        for r in (1, 2, 3):
            for nbrs in itertools.combinations(free, r):
                g = Graph(n, list(h.edges) + [(v, n - 1) for v in nbrs])
                seen.add(canonical_form(g))
    return tuple(sorted(seen))


def _check_cap(n: int, cubic_only: bool, cap: int | None) -> None:
    if cap is None:
        cap = DEFAULT_CAP_CUBIC if cubic_only else DEFAULT_CAP_GENERAL
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}; pass a larger cap explicitly")


def _disconnected(n: int) -> list[tuple[bytes, ...]]:
    """Multisets of connected canonical forms whose orders sum to n."""
    out = []

    def parts(left: int, max_part: int):
        if left == 0:
            yield ()
            return
        for p in range(min(left, max_part), 0, -1):
            for rest in parts(left - p, p):
                yield (p,) + rest

    for partition in parts(n, n):
        pools = [(size, count) for size, count in
                 sorted({p: partition.count(p) for p in partition}.items(), reverse=True)]
        choices = [list(itertools.combinations_with_replacement(_connected(size), count))
                   for size, count in pools]
        for combo in itertools.product(*choices):
            out.append(tuple(f for group in combo for f in group))
    return out


def _union(forms: tuple[bytes, ...]) -> Graph:
    edges, offset = [], 0
    for f in forms:
        h = read_graph6(f)
        edges += [(u + offset, v + offset) for u, v in h.edges]
        offset += h.vertex_count
    return Graph(offset, edges)


def enumerate_subcubic(n: int, connected: bool = True, cubic_only: bool = False,
                       cap: int | None = None) -> Iterator[Graph]:
    """One simple subcubic graph per isomorphism class on exactly ``n`` vertices.

    Order is deterministic (sorted canonical graph6).  ``cap`` defaults to 10
    for cubic and 9 for general enumeration; larger orders must be requested.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_cap(n, cubic_only, cap)
    if n == 0:
        if not connected:
            yield Graph(0)
        return
    if connected:
        for form in _connected(n):
            g = read_graph6(form)
            if not cubic_only or g.is_cubic:
                yield g
        return
    graphs = []
    for forms in _disconnected(n):
        g = _union(forms)
        if cubic_only and not g.is_cubic:
            continue
        graphs.append((canonical_form(g), g))
    graphs.sort(key=lambda t: t[0])
    for _, g in graphs:
        yield g


# ---------------------------------------------------------------------------
# surveys


class Expect(enum.Enum):
    ALL_ADMIT = "ALL-ADMIT"
    FIND_COUNTEREXAMPLES = "FIND-COUNTEREXAMPLES"


_FILTER_RE = re.compile(r"^(CUBIC|CLASS1|BIPARTITE|PLANAR|TREE|BRIDGELESS|GIRTH>=(\d+)|MAX-EDGE-WEIGHT<=(\d+))$")


def _norm_filter(f: str) -> str:
    key = f.strip().upper().replace(" ", "").replace("≥", ">=").replace("≤", "<=")
    if not _FILTER_RE.match(key):
        raise ValueError(f"unknown filter {f!r}")
    return key


@dataclass(frozen=True)
class SurveyPredicate:
    spec: PackingSpec
    filters: tuple[str, ...] = ()
    expect: Expect = Expect.ALL_ADMIT

    def __post_init__(self):
        object.__setattr__(self, "spec", PackingSpec.parse(self.spec))
        object.__setattr__(self, "filters", tuple(sorted({_norm_filter(f) for f in self.filters})))
        if not isinstance(self.expect, Expect):
            object.__setattr__(self, "expect", Expect(self.expect))


def passes_filters(g: Graph, filters) -> bool:
    """Conjunction of the named structural filters."""
    for f in filters:
        f = _norm_filter(f)
        if f == "CUBIC":
            ok = g.is_cubic
        elif f == "CLASS1":
            ok = is_class_one(g)
        elif f == "BIPARTITE":
            ok = is_bipartite(g)
        elif f == "PLANAR":
            nxg = nx.MultiGraph()
            nxg.add_nodes_from(range(g.vertex_count))
            nxg.add_edges_from(g.edges)
            ok = nx.check_planarity(nx.Graph(nxg))[0]
        elif f == "TREE":
            ok = g.is_connected() and g.edge_count == g.vertex_count - 1
        elif f == "BRIDGELESS":
            ok = all(is_bridgeless(g.induced(c)[0]) for c in g.components())
        elif f.startswith("GIRTH>="):
            ok = girth(g) >= int(f[7:])
        else:
            w = int(f.split("<=")[1])
            deg = g.degrees
            ok = all(deg[u] + deg[v] <= w for u, v in g.edges)
        if not ok:
            return False
    return True


@dataclass
class SurveyReport:
    predicate: SurveyPredicate
    n_min: int
    n_max: int
    connected: bool
    tested: int = 0
    counterexamples: list[str] = field(default_factory=list)
    undecided: list[str] = field(default_factory=list)
    timings: list[tuple[str, float]] | None = None

    VERSION = 1

    def dumps(self) -> str:
        p = self.predicate
        lines = [
            f"survey-report: {self.VERSION}",
            f"spec: {p.spec}",
            f"filters: {','.join(p.filters) if p.filters else '-'}",
            f"expect: {p.expect.value}",
            f"n-range: {self.n_min}..{self.n_max}",
            f"connected: {'yes' if self.connected else 'no'}",
            f"tested: {self.tested}",
            f"counterexamples: {len(self.counterexamples)}",
            f"undecided: {len(self.undecided)}",
            "---",
        ]
        lines += [f"counterexample {s}" for s in self.counterexamples]
        lines += [f"undecided {s}" for s in self.undecided]
        if self.timings is not None:
            lines += [f"time {s} {t:.6f}" for s, t in self.timings]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str, reverify: bool = True) -> "SurveyReport":
        header, _, body = text.partition("---\n")
        kv = {}
        for line in header.splitlines():
            if line.strip():
                k, _, v = line.partition(":")
                kv[k.strip()] = v.strip()
        if int(kv.get("survey-report", "0")) != cls.VERSION:
            raise ValueError(f"unsupported survey report version {kv.get('survey-report')!r}")
        filters = () if kv["filters"] == "-" else tuple(kv["filters"].split(","))
        pred = SurveyPredicate(PackingSpec.parse(kv["spec"]), filters, Expect(kv["expect"]))
        lo, hi = (int(x) for x in kv["n-range"].split(".."))
        rep = cls(pred, lo, hi, kv["connected"] == "yes", int(kv["tested"]))
        for line in body.splitlines():
            kind, _, rest = line.partition(" ")
            if kind == "counterexample":
                rep.counterexamples.append(rest)
            elif kind == "undecided":
                rep.undecided.append(rest)
            elif kind == "time":
                s, t = rest.split()
                rep.timings = (rep.timings or []) + [(s, float(t))]
        if reverify:
            for s in rep.counterexamples:
                if solve(read_graph6(s), pred.spec) is not None:
                    raise ValueError(f"counterexample {s} admits {pred.spec}")
        return rep

    @property
    def holds(self) -> bool:
        """ALL-ADMIT holds iff nothing failed or stayed undecided."""
        return not self.counterexamples and not self.undecided


def _evaluate(args) -> tuple[str, str, float]:
    g6, spec_text, budget = args
    g = read_graph6(g6)
    t0 = time.perf_counter()
    try:
        res = "ok" if solve(g, spec_text, budget=budget) is not None else "none"
    except BudgetExhausted:
        res = "undecided"
    return g6, res, time.perf_counter() - t0


def run_survey(p: SurveyPredicate, n_max: int, n_min: int = 1, *, connected: bool = True,
               jobs: int = 1, budget: int | None = None, timings: bool = False,
               cap: int | None = None) -> SurveyReport:
    """Check ``p.spec`` on every enumerated graph passing the filters."""
    cubic = "CUBIC" in p.filters
    _check_cap(n_max, cubic, cap)
    work = []
    for n in range(n_min, n_max + 1):
        for g in enumerate_subcubic(n, connected=connected, cubic_only=cubic, cap=cap):
            if passes_filters(g, p.filters):
                work.append((write_graph6(g).decode(), str(p.spec), budget))
    rep = SurveyReport(p, n_min, n_max, connected, tested=len(work))
    if jobs > 1:
        with Pool(jobs) as pool:
            results = pool.map(_evaluate, work, chunksize=max(1, len(work) // (4 * jobs)))
    else:
        results = [_evaluate(w) for w in work]
    for g6, res, dt in results:
        if res == "none":
            rep.counterexamples.append(g6)
        elif res == "undecided":
            rep.undecided.append(g6)
    if timings:
        rep.timings = [(g6, dt) for g6, _, dt in results]
    return rep

"""Coloring constructions: (1,1,1,2), contraction to (1,1,2^5)/(1,1,2^4),
the good (1,2^8) reduction algorithm, alpha-induced (1,2^7) colorings and
the path-crossing surgery.

Every construction returns an :class:`EdgeColoring` that passes ``verify``;
places where a proof is only an existence argument are realized by bounded
searches with the exact solver.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .choosability import Kind, LineTopology, list_color_line
from .graph import Graph, GraphError, bridges, contract_class, find_edge, shortest_cycle
from .packing import EdgeColoring, PackingSpec, SolveOptions, solve, verify

__all__ = [
    "InvariantViolation",
    "SPEC_1112",
    "SPEC_128",
    "SPEC_127",
    "coloring_1112",
    "theorem_a",
    "ContractionReport",
    "theorem_a_report",
    "good_128",
    "GoodReport",
    "good_128_report",
    "alpha_induced_127",
    "proper_3_edge_colorings",
    "bc_cycles",
    "Crossing",
    "crossing",
    "crossing_lists",
    "Trichotomy",
    "claim7_trichotomy",
]

SPEC_1112 = PackingSpec((1, 1, 1, 2))
SPEC_128 = PackingSpec((1,) + (2,) * 8)
SPEC_127 = PackingSpec((1,) + (2,) * 7)
SPEC_111 = PackingSpec((1, 1, 1))


class InvariantViolation(RuntimeError):
    """A construction the theory guarantees came back empty."""


def _require_subcubic(g: Graph) -> None:
    if not g.is_subcubic:
        raise GraphError(f"expected a subcubic graph, maximum degree is {g.max_degree}")


def coloring_1112(g: Graph) -> EdgeColoring:
    _require_subcubic(g)
    c = solve(g, SPEC_1112)
    if c is None:
        raise InvariantViolation("no (1,1,1,2)-coloring found for a subcubic graph")
    return c


# ---------------------------------------------------------------------------
# contraction: (1,1,2^5), or (1,1,2^4) from a proper 3-edge-coloring


def _vertex_coloring(n: int, adj: list[set[int]], k: int) -> list[int] | None:
    """Exact k-coloring by DSATUR-ordered backtracking."""
    color = [-1] * n

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = len({color[u] for u in adj[v] if color[u] >= 0})
            kk = (-sat, -len(adj[v]), v)
            if key is None or kk < key:
                best, key = v, kk
        return best

    def rec(done: int) -> bool:
        if done == n:
            return True
        v = pick()
        taken = {color[u] for u in adj[v]}
        for c in range(k):
            if c not in taken:
                color[v] = c
                if rec(done + 1):
                    return True
        color[v] = -1
        return False

    return list(color) if rec(0) else None


@dataclass
class ContractionReport:
    coloring: EdgeColoring
    start: EdgeColoring  # the (1,1,1,2) or (1,1,1) coloring we began with
    contracted_class: int | None
    vertex_colors_needed: int | None
    fallback: bool


def theorem_a_report(g: Graph) -> ContractionReport:
    """Contract one matching class and recolor it with 2-classes.

    Starts from a proper 3-edge-coloring when one exists (result spec
    (1,1,2^4)), otherwise from a (1,1,1,2)-coloring (result spec (1,1,2^5)).
    """
    _require_subcubic(g)
    start = solve(g, SPEC_111)
    class_one = start is not None
    if start is None:
        start = coloring_1112(g)
    extra = 0 if class_one else 1  # the (1,1,1,2) start brings one 2-class along
    out_spec = PackingSpec((1, 1) + (2,) * (4 + extra))
    for X_cls in (3, 2, 1):
        X = start.class_members(X_cls)
        con = contract_class(g, X)
        cg = con.graph
        x_vertices = [i for i, members in enumerate(con.vertex_map) if len(members) == 2]
        index = {v: i for i, v in enumerate(x_vertices)}
        adj: list[set[int]] = [set() for _ in x_vertices]
        for a, b in cg.edges:
            if a in index and b in index and a != b:
                adj[index[a]].add(index[b])
                adj[index[b]].add(index[a])
        vc = None
        used = None
        for k in range(0, 5):
            vc = _vertex_coloring(len(x_vertices), adj, k)
            if vc is not None:
                used = k
                break
        if vc is None:
            continue  # needs 5 colors; try another class
        # X edge -> vertex color
        edge_color = {}
        for e in X:
            u, v = g.edges[e]
            rep = next(i for i, members in enumerate(con.vertex_map) if u in members)
            edge_color[e] = vc[index[rep]]
        others = [c for c in (1, 2, 3) if c != X_cls]
        relabel = {others[0]: 1, others[1]: 2}
        if not class_one:
            relabel[4] = 3
        base = 3 + extra
        assignment = tuple(edge_color[e] + base if e in edge_color else relabel[start[e]]
                           for e in range(g.edge_count))
        col = EdgeColoring(assignment, out_spec)
        if not verify(g, col).valid:
            raise InvariantViolation("lifted contraction coloring failed verification")
        return ContractionReport(col, start, X_cls, used, False)
    # every matching class needs 5 vertex colors: solve directly
    col = solve(g, out_spec)
    if col is None:
        raise InvariantViolation(f"no {out_spec}-coloring found")
    return ContractionReport(col, start, None, 5, True)


def theorem_a(g: Graph) -> EdgeColoring:
    return theorem_a_report(g).coloring


# ---------------------------------------------------------------------------
# good (1,2^8): reduction algorithm


@dataclass
class GoodReport:
    coloring: EdgeColoring
    trace: list[tuple[str, int, int, str]] = field(default_factory=list)  # (step, measure, measure', level)
    fallbacks: int = 0


def _rebuild(g: Graph, drop_vertices: set[int], drop_edges: set[int] = frozenset(),
             add_edges: Sequence[tuple[int, int]] = (), new_vertices: int = 0):
    """Graph with vertices/edges removed and edges added.

    Added edges may refer to new vertices as ``g.vertex_count + i``.  Returns
    ``(graph, edge_map)`` where ``edge_map[e']`` is the old edge id, or
    ``-(i + 1)`` for the i-th added edge.
    """
    keep_v = [v for v in range(g.vertex_count) if v not in drop_vertices]
    keep_v += [g.vertex_count + i for i in range(new_vertices)]
    index = {v: i for i, v in enumerate(keep_v)}
    edges, emap = [], []
    for e, (u, v) in enumerate(g.edges):
        if e in drop_edges or u in drop_vertices or v in drop_vertices:
            continue
        edges.append((index[u], index[v]))
        emap.append(e)
    for i, (u, v) in enumerate(add_edges):
        edges.append((index[u], index[v]))
        emap.append(-(i + 1))
    return Graph(len(keep_v), edges), emap


def _third(g: Graph, v: int, exclude: set[int]) -> int:
    rest = [w for w in g.neighbors[v] if w not in exclude]
    return rest[0]


class _Good:
    def __init__(self, budget: int | None):
        self.budget = budget
        self.trace: list[tuple[str, int, int, str]] = []
        self.fallbacks = 0
        self.opts_good = True

    def color(self, g: Graph) -> list[int]:
        m = g.edge_count
        if m == 0:
            return []
        measure = g.vertex_count + m

        # parallel edges and loops
        seen = set()
        for e, (u, v) in enumerate(g.edges):
            key = (min(u, v), max(u, v))
            if u == v or key in seen:
                sub, keep = g.without_edges([e])
                return self._lift(g, "parallel-or-loop", measure, sub, keep, {}, {e}, set())
            seen.add(key)

        # components and isolated vertices
        comps = g.components()
        if len(comps) > 1:
            out = [0] * m
            for comp in comps:
                sub, _vmap, emap = g.induced(comp)
                if sub.edge_count == 0:
                    continue
                self.trace.append(("component", measure, sub.vertex_count + sub.edge_count, "-"))
                for i, c in enumerate(self.color(sub)):
                    out[emap[i]] = c
            return out

        if g.max_degree <= 2:
            self.trace.append(("path-or-cycle", measure, 0, "direct"))
            return self._path_or_cycle(g)

        deg = g.degrees
        # 1- and 2-vertices
        for v in range(g.vertex_count):
            if deg[v] <= 2:
                sub, emap = _rebuild(g, {v})
                free = set(g.incidence[v])
                local = {f for w in g.neighbors[v] for f in g.incidence[w]} - free
                return self._lift(g, f"deg{deg[v]}-vertex", measure, sub, emap, {}, free, local)

        # now cubic, simple and connected
        br = bridges(g)
        if br:
            return self._bridge(g, br[0], measure)

        if g.vertex_count == 4:
            self.trace.append(("k4", measure, 0, "direct"))
            return self._solve_direct(g)

        tri = self._triangle(g)
        if tri is not None:
            return self._triangle_step(g, tri, measure)

        cyc = shortest_cycle(g)
        if len(cyc) == 4:
            return self._square_step(g, cyc, measure)
        return self._long_cycle_step(g, cyc, measure)

    # -- helpers ---------------------------------------------------------

    def _solve_direct(self, g: Graph) -> list[int]:
        c = solve(g, SPEC_128, SolveOptions(good=True))
        if c is None:
            raise InvariantViolation("no good (1,2^8)-coloring found")
        return list(c.assignment)

    def _path_or_cycle(self, g: Graph) -> list[int]:
        # walk the component in order
        start = next((v for v in range(g.vertex_count) if g.degrees[v] == 1), None)
        is_cycle = start is None
        if is_cycle:
            start = g.edges[0][0]
        order = []
        prev_edge = None
        v = start
        while True:
            nxt = [f for f in g.incidence[v] if f != prev_edge and f not in order]
            if not nxt:
                break
            f = nxt[0]
            order.append(f)
            prev_edge = f
            v = g.other_end(f, v)
        n = len(order)
        out = [0] * g.edge_count
        if not is_cycle or n % 3 == 0:
            for i, f in enumerate(order):
                out[f] = 2 + i % 3
            return out
        topo = LineTopology(Kind.CYCLE, n)
        col = list_color_line(topo, [range(2, 10)] * n)
        for i, f in enumerate(order):
            out[f] = col[i]
        return out

    def _extend(self, g: Graph, partial: dict[int, int], free: set[int], local: set[int]) -> tuple[list[int], str]:
        near = set()
        dist = g.edge_distances
        for e in free | local:
            near.update(f for f in range(g.edge_count) if dist[e][f] <= 2)
        levels = [("free", free), ("local", free | local), ("near", free | local | near)]
        for name, unlocked in levels:
            forced = {e: c for e, c in partial.items() if e not in unlocked}
            try:
                c = solve(g, SPEC_128, SolveOptions(good=True, forced=forced), budget=self.budget)
            except GraphError:
                continue
            if c is not None:
                return list(c.assignment), name
        self.fallbacks += 1
        return self._solve_direct(g), "fallback"

    def _lift(self, g: Graph, step: str, measure: int, sub: Graph, emap: list[int],
              new_assign: dict[int, int], free: set[int], local: set[int],
              added_to: dict[int, list[int]] | None = None) -> list[int]:
        """Color ``sub`` recursively, pull the colors back to ``g`` and extend."""
        sub_measure = sub.vertex_count + sub.edge_count
        if sub_measure >= measure:
            raise InvariantViolation(f"{step}: reduction did not shrink the graph")
        sub_col = self.color(sub)
        partial = dict(new_assign)
        for i, c in enumerate(sub_col):
            old = emap[i]
            if old >= 0:
                partial[old] = c
            elif added_to is not None:
                for e in added_to[-old - 1]:
                    partial[e] = c
        out, level = self._extend(g, partial, free, local)
        self.trace.append((step, measure, sub_measure, level))
        return out

    def _bridge(self, g: Graph, b: int, measure: int) -> list[int]:
        u, v = g.edges[b]
        sub, _ = g.without_edges([b])
        side_of = {}
        for comp in sub.components():
            for x in comp:
                side_of[x] = comp
        cols = {}
        parts = {}
        for end in (u, v):
            verts = side_of[end]
            part, vmap, emap = g.induced(verts + [u if end == v else v])
            cols[end] = self._lift_plain(part, "bridge-side", measure)
            parts[end] = (part, vmap, emap)
        pu, _, emu = parts[u]
        pv, _, emv = parts[v]
        col_u = {emu[i]: c for i, c in enumerate(cols[u])}
        col_v = {emv[i]: c for i, c in enumerate(cols[v])}
        # permute the 2-colors of the v side
        target = col_u[b]
        avoid = {col_u[f] for f in g.incidence[u] if f != b and col_u[f] != 1}
        perm = {col_v[b]: target}
        for f in g.incidence[v]:
            if f == b or col_v[f] == 1 or col_v[f] in perm:
                continue
            choice = next(c for c in range(2, 10) if c not in perm.values() and c not in avoid and c != target)
            perm[col_v[f]] = choice
        rest_src = [c for c in range(2, 10) if c not in perm]
        rest_dst = [c for c in range(2, 10) if c not in perm.values()]
        perm.update(zip(rest_src, rest_dst))
        perm[1] = 1
        out = [0] * g.edge_count
        for e, c in col_u.items():
            out[e] = c
        for e, c in col_v.items():
            out[e] = perm[c]
        col = EdgeColoring(tuple(out), SPEC_128)
        level = "permute"
        if not verify(g, col, SolveOptions(good=True)).valid:
            out, level = self._extend(g, dict(enumerate(out)), {b}, set(g.incidence[u]) | set(g.incidence[v]))
        self.trace.append(("bridge", measure, max(p[0].vertex_count + p[0].edge_count for p in parts.values()), level))
        return out

    def _lift_plain(self, part: Graph, step: str, measure: int) -> list[int]:
        if part.vertex_count + part.edge_count >= measure:
            raise InvariantViolation(f"{step}: reduction did not shrink the graph")
        return self.color(part)

    @staticmethod
    def _triangle(g: Graph):
        for u in range(g.vertex_count):
            for v in g.neighbors[u]:
                if v <= u:
                    continue
                for w in g.neighbors[u] & g.neighbors[v]:
                    if w > v:
                        return (u, v, w)
        return None

    def _triangle_step(self, g: Graph, tri, measure: int) -> list[int]:
        u, v, w = tri
        # is some edge of the triangle in a second triangle?
        for a, b, c in ((u, v, w), (v, w, u), (u, w, v)):
            common = (g.neighbors[a] & g.neighbors[b]) - {c}
            if common:
                x = min(common)
                wp = _third(g, c, {a, b})
                xp = _third(g, x, {a, b})
                e_cc = find_edge(g, c, wp)
                e_xx = find_edge(g, x, xp)
                core = {a, b, c, x}
                free = {f for f in range(g.edge_count)
                        if g.edges[f][0] in core and g.edges[f][1] in core}
                if wp != xp:
                    sub, emap = _rebuild(g, core, add_edges=[(wp, xp)])
                    return self._lift(g, "two-triangles", measure, sub, emap, {}, free, {e_cc, e_xx},
                                      added_to={0: [e_cc, e_xx]})
                sub, emap = _rebuild(g, core)
                return self._lift(g, "two-triangles", measure, sub, emap, {}, free | {e_cc, e_xx}, set())
        up = _third(g, u, {v, w})
        vp = _third(g, v, {u, w})
        wp = _third(g, w, {u, v})
        pend = [find_edge(g, u, up), find_edge(g, v, vp), find_edge(g, w, wp)]
        free = {find_edge(g, u, v), find_edge(g, v, w), find_edge(g, u, w)}
        x = g.vertex_count
        sub, emap = _rebuild(g, {u, v, w}, add_edges=[(up, x), (vp, x), (wp, x)], new_vertices=1)
        return self._lift(g, "triangle", measure, sub, emap, {}, free, set(pend),
                          added_to={0: [pend[0]], 1: [pend[1]], 2: [pend[2]]})

    def _square_step(self, g: Graph, cyc: list[int], measure: int) -> list[int]:
        u, v, w, z = cyc
        core = set(cyc)
        up, vp, wp, zp = (_third(g, x, core) for x in cyc)
        pend = {x: find_edge(g, x, xp) for x, xp in zip(cyc, (up, vp, wp, zp))}
        cyc_edges = {find_edge(g, a, b) for a, b in ((u, v), (v, w), (w, z), (z, u))}
        add, added_to, free = [], {}, set(cyc_edges)
        for (a, ap), (b, bp) in (((u, up), (w, wp)), ((v, vp), (z, zp))):
            if ap != bp:
                added_to[len(add)] = [pend[a], pend[b]]
                add.append((ap, bp))
            else:
                free |= {pend[a], pend[b]}
        sub, emap = _rebuild(g, core, add_edges=add)
        return self._lift(g, "4-cycle", measure, sub, emap, {}, free, set(pend.values()), added_to=added_to)

    def _long_cycle_step(self, g: Graph, cyc: list[int], measure: int) -> list[int]:
        core = set(cyc)
        n = len(cyc)
        cyc_edges = {find_edge(g, cyc[i], cyc[(i + 1) % n]) for i in range(n)}
        pend = {find_edge(g, x, _third(g, x, core)) for x in cyc}
        sub, emap = _rebuild(g, core)
        return self._lift(g, f"{n}-cycle", measure, sub, emap, {e: 1 for e in pend}, cyc_edges, pend)


def good_128_report(g: Graph, budget: int | None = None) -> GoodReport:
    _require_subcubic(g)
    runner = _Good(budget)
    out = runner.color(g)
    col = EdgeColoring(tuple(out), SPEC_128)
    if not verify(g, col, SolveOptions(good=True)).valid:
        raise InvariantViolation("good (1,2^8) construction failed verification")
    return GoodReport(col, runner.trace, runner.fallbacks)


def good_128(g: Graph) -> EdgeColoring:
    """Good (1,2^8)-coloring: class 1 is the matching class and avoids 2⁻-vertices."""
    return good_128_report(g).coloring


# ---------------------------------------------------------------------------
# alpha-induced (1,2^7)


def _alpha_index(alpha) -> int:
    if isinstance(alpha, str):
        key = alpha.strip().lower()
        if key not in ("a", "b", "c"):
            raise ValueError(f"alpha must be a, b or c, got {alpha!r}")
        return "abc".index(key) + 1
    if alpha not in (1, 2, 3):
        raise ValueError(f"alpha must be 1, 2 or 3, got {alpha!r}")
    return int(alpha)


def _as_pi(g: Graph, pi) -> EdgeColoring:
    if not isinstance(pi, EdgeColoring):
        pi = EdgeColoring(tuple(pi), SPEC_111)
    if len(pi) != g.edge_count:
        raise GraphError("pi must color every edge")
    if tuple(pi.spec.classes) != (1, 1, 1):
        pi = EdgeColoring(pi.assignment, SPEC_111)
    if not pi.is_total or not verify(g, pi).valid:
        raise GraphError("pi is not a proper 3-edge-coloring")
    return pi


def proper_3_edge_colorings(g: Graph):
    """Proper 3-edge-colorings, one per renaming orbit of the three colors."""
    from .packing import iter_solutions
    return iter_solutions(g, SPEC_111)


def alpha_induced_127(g: Graph, pi, alpha) -> EdgeColoring:
    """(1,2^7)-coloring whose class 1 is exactly the alpha class of ``pi``."""
    pi = _as_pi(g, pi)
    a = _alpha_index(alpha)
    forced = {e: 1 for e in pi.class_members(a)}
    forbid = {e: {1} for e in range(g.edge_count) if e not in forced}
    col = solve(g, SPEC_127, SolveOptions(forced=forced, forbid=forbid))
    if col is None:
        raise InvariantViolation("no alpha-induced (1,2^7)-coloring for a proper 3-edge-coloring")
    return col


# ---------------------------------------------------------------------------
# bc-cycles and crossings


def bc_cycles(g: Graph, pi, alpha) -> list[list[int]]:
    """Cycles formed by the two colors other than ``alpha``, as vertex lists."""
    pi = _as_pi(g, pi)
    a = _alpha_index(alpha)
    bc = [e for e in range(g.edge_count) if pi[e] != a]
    seen: set[int] = set()
    out = []
    for e in bc:
        if e in seen:
            continue
        # walk along bc edges
        start, cur = g.edges[e]
        verts = [start]
        edges = [e]
        prev = e
        closed = False
        while True:
            if cur == start:
                closed = True
                break
            verts.append(cur)
            nxt = [f for f in g.incidence[cur] if f != prev and pi[f] != a]
            if not nxt:
                break
            prev = nxt[0]
            edges.append(prev)
            cur = g.other_end(prev, cur)
        seen.update(edges)
        if closed:
            out.append(verts)
    return out


@dataclass
class Crossing:
    path: tuple[int, ...]  # u_0..u_5
    pendants: dict[int, int]  # u_i -> u_i' for i = 0..5
    graph: Graph  # G' (vertices of g kept, u_1..u_4 become isolated)
    coloring: EdgeColoring  # pi'
    edge_map: list[int]  # G' edge -> g edge, or -1 for the two new edges
    new_edges: tuple[int, int]  # ids in G' of u_1'u_3' and u_2'u_4'
    removed: tuple[int, ...]  # g edge ids deleted
    alpha: int


def crossing(g: Graph, pi, P: Sequence[int], alpha=1) -> Crossing:
    """Replace a 6-vertex path of a bc-cycle and its four inner pendants by
    the edges u_1'u_3' and u_2'u_4', both colored alpha."""
    pi = _as_pi(g, pi)
    a = _alpha_index(alpha)
    P = tuple(P)
    if len(P) != 6 or len(set(P)) != 6:
        raise GraphError("P must be 6 distinct vertices")
    path_edges = []
    for x, y in zip(P, P[1:]):
        e = find_edge(g, x, y)
        if e is None:
            raise GraphError(f"P is not a path: {x} and {y} are not adjacent")
        if pi[e] == a:
            raise GraphError(f"path edge {x}-{y} has color alpha; P must lie on a bc-cycle")
        path_edges.append(e)
    for e, f in zip(path_edges, path_edges[1:]):
        if pi[e] == pi[f]:
            raise GraphError("path edges must alternate between the two non-alpha colors")
    on_cycle = any(all(x in cyc for x in P) for cyc in bc_cycles(g, pi, a))
    if not on_cycle:
        raise GraphError("P does not lie on a bc-cycle")
    pendants = {}
    pend_edges = {}
    for x in P:
        es = [f for f in g.incidence[x] if pi[f] == a]
        if not es:
            raise GraphError(f"vertex {x} has no alpha-colored pendant edge")
        pend_edges[x] = es[0]
        pendants[x] = g.other_end(es[0], x)
    u = P
    up = [pendants[x] for x in P]
    if any(up[j] in P[1:5] for j in range(1, 5)):
        raise GraphError("an inner pendant of P ends on u_1..u_4, so the pendant edges are not distinct")
    if up[1] == up[3] or up[2] == up[4]:
        raise GraphError("u_1' = u_3' or u_2' = u_4'; the new edges would be loops")
    removed = tuple(sorted(set(path_edges) | {pend_edges[u[j]] for j in range(1, 5)}))
    keep = [e for e in range(g.edge_count) if e not in set(removed)]
    edges = [g.edges[e] for e in keep] + [(up[1], up[3]), (up[2], up[4])]
    gp = Graph(g.vertex_count, edges)
    emap = keep + [-1, -1]
    colors = tuple(pi[e] for e in keep) + (a, a)
    pip = EdgeColoring(colors, SPEC_111)
    if not verify(gp, pip).valid:
        raise InvariantViolation("crossing broke properness")
    m = len(keep)
    return Crossing(P, pendants, gp, pip, emap, (m, m + 1), removed, a)


def crossing_lists(g: Graph, cr: Crossing, sigma_prime: EdgeColoring) -> tuple[set[int], set[int], set[int]]:
    """Available 2-classes L_1, L_2, L_3 of u_1u_2, u_2u_3, u_3u_4 after pulling
    an alpha-induced coloring of G' back to g and coloring the four inner
    pendants with the 1-class."""
    assign: list[int | None] = [None] * g.edge_count
    for i, old in enumerate(cr.edge_map):
        if old >= 0:
            assign[old] = sigma_prime[i]
    u = cr.path
    for j in range(1, 5):
        e = find_edge(g, u[j], cr.pendants[u[j]])
        assign[e] = 1
    partial = EdgeColoring(tuple(assign), sigma_prime.spec)
    out = []
    for i in (1, 2, 3):
        e = find_edge(g, u[i], u[i + 1])
        out.append({c for c in partial.available_classes(g, e) if sigma_prime.spec.distance(c) == 2})
    return tuple(out)


class Trichotomy(enum.Enum):
    CASE1 = 1
    CASE2 = 2
    CASE3 = 3
    UNMATCHED = 0


def claim7_trichotomy(L1, L2, L3) -> tuple[Trichotomy, tuple]:
    """Classify the available lists on the middle three path edges.

    CASE1: |L2| >= 5.  CASE2(x): x in L2 leaves at least 3 colors in both L1
    and L3.  CASE3(x, y): |L2| >= 4, L1 and L3 disjoint, x in L1 - L2 and
    y in L3 - L2.  Anything else is UNMATCHED.
    """
    L1, L2, L3 = set(L1), set(L2), set(L3)
    if len(L2) >= 5:
        return Trichotomy.CASE1, ()
    for x in sorted(L2):
        if len(L1 - {x}) >= 3 and len(L3 - {x}) >= 3:
            return Trichotomy.CASE2, (x,)
    if len(L2) >= 4 and not (L1 & L3):
        xs = sorted(L1 - L2)
        ys = sorted(L3 - L2)
        if xs and ys:
            return Trichotomy.CASE3, (xs[0], ys[0])
    return Trichotomy.UNMATCHED, ()

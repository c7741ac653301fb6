"""Strong list edge-coloring of paths, cycles and chorded paths D_n.

Positions are 1-based in the public API (``L[0]`` is the list of e_1).  The
conflict relation is always read off the actual graph via edge distance.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .graph import Graph, GraphError, edge_distance
from .polynomials import PolySpec, find_certificate

__all__ = [
    "Kind",
    "LineTopology",
    "Mode",
    "Verdict",
    "Outcome",
    "list_color_line",
    "check_pattern",
    "trick_check",
    "bad_cycle_lists",
    "bad_cycle_lists_c_readings",
    "expand_pattern",
]


class Kind(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    DN = "dn"


@dataclass(frozen=True)
class LineTopology:
    kind: Kind
    length: int

    def __post_init__(self):
        kind = Kind(self.kind) if not isinstance(self.kind, Kind) else self.kind
        object.__setattr__(self, "kind", kind)
        low = {Kind.PATH: 1, Kind.CYCLE: 3, Kind.DN: 5}[kind]
        if self.length < low:
            raise GraphError(f"{kind.value} topology needs length >= {low}")

    @cached_property
    def graph(self) -> Graph:
        """Underlying graph; edge ids 0..n-1 are the colorable edges e_1..e_n."""
        n = self.length
        if self.kind is Kind.CYCLE:
            return Graph(n, [(i, (i + 1) % n) for i in range(n)])
        edges = [(i, i + 1) for i in range(n)]
        if self.kind is Kind.DN:
            edges.append((1, n - 1))  # chord u_1 u_{n-1}, never colored
        return Graph(n + 1, edges)

    @cached_property
    def conflicts(self) -> tuple[frozenset[int], ...]:
        """0-based neighbour sets of the strong conflict relation on positions."""
        n = self.length
        g = self.graph
        out = [set() for _ in range(n)]
        for i, j in itertools.combinations(range(n), 2):
            if edge_distance(g, i, j) <= 2:
                out[i].add(j)
                out[j].add(i)
        return tuple(frozenset(s) for s in out)

    def conflict_pairs(self) -> set[tuple[int, int]]:
        """1-based conflicting position pairs."""
        return {(i + 1, j + 1) for i in range(self.length) for j in self.conflicts[i] if i < j}

    def poly_spec(self) -> PolySpec:
        if self.kind is Kind.PATH:
            return PolySpec.P(1, self.length)
        if self.kind is Kind.CYCLE:
            return PolySpec.C(self.length)
        return PolySpec.D(self.length)


def _check_lists(t: LineTopology, L: Sequence) -> list[frozenset]:
    if len(L) != t.length:
        raise ValueError(f"expected {t.length} lists, got {len(L)}")
    lists = [frozenset(x) for x in L]
    if any(not x for x in lists):
        raise ValueError("lists must be non-empty")
    return lists


def _backtrack(t: LineTopology, lists: list[frozenset], limit: int | None = None):
    """Yield strong list colorings (as 0-based tuples) in lexicographic order."""
    n = t.length
    before = [sorted(j for j in t.conflicts[i] if j < i) for i in range(n)]
    color = [None] * n
    count = 0

    def rec(i):
        nonlocal count
        if i == n:
            count += 1
            yield tuple(color)
            return
        for c in sorted(lists[i]):
            if all(color[j] != c for j in before[i]):
                color[i] = c
                yield from rec(i + 1)
                if limit is not None and count >= limit:
                    return
        color[i] = None

    yield from rec(0)


def list_color_line(t: LineTopology, L: Sequence) -> tuple | None:
    """A strong coloring from the lists, or ``None`` when none exists."""
    lists = _check_lists(t, L)
    return next(_backtrack(t, lists, limit=1), None)


# ---------------------------------------------------------------------------
# pattern checks


class Mode(enum.Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"
    CERTIFICATE = "certificate"


class Verdict(enum.Enum):
    CHOOSABLE = "CHOOSABLE"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    CERTIFIED = "CERTIFIED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class Outcome:
    verdict: Verdict
    universe: int | None = None
    lists: list[frozenset] | None = None  # counterexample
    monomial: tuple[int, ...] | None = None  # certificate
    explanation: str = ""
    stats: dict = field(default_factory=dict)

    def __str__(self) -> str:
        parts = [self.verdict.value]
        if self.universe is not None:
            parts.append(f"universe={self.universe}")
        if self.lists is not None:
            parts.append("lists=" + " ".join("{" + ",".join(map(str, sorted(x))) + "}" for x in self.lists))
        if self.monomial is not None:
            parts.append("monomial=" + ",".join(map(str, self.monomial)))
        if self.explanation:
            parts.append(self.explanation)
        return " ".join(parts)


def expand_pattern(text: str | Sequence[int]) -> list[int]:
    """``"2,2,3^4,2"`` -> ``[2, 2, 3, 3, 3, 3, 2]``."""
    if not isinstance(text, str):
        return [int(x) for x in text]
    out = []
    for tok in text.replace("(", "").replace(")", "").split(","):
        tok = tok.strip()
        if not tok:
            continue
        if "^" in tok:
            base, rep = tok.split("^")
            out += [int(base)] * int(rep)
        else:
            out.append(int(tok))
    return out


class _Exhaustive:
    """DFS over list assignments carrying the set of reachable frontier colorings.

    After fixing L_1..L_i the relevant information is the set of colorings of
    the frontier positions (those still in conflict with a later position)
    that extend to a strong coloring of e_1..e_i.  Colors not appearing in any
    frontier state are interchangeable, so a new list is chosen as a subset of
    the frontier colors plus some number of "other" colors; the concrete
    other colors are the smallest ones outside the frontier palette.

    Two prunings keep this small.  A list whose resulting state set contains
    the state set of another candidate list is skipped (fewer reachable
    states is always at least as good for finding a counterexample), and
    state sets are memoized up to renaming of colors.
    """

    def __init__(self, t: LineTopology, sizes: list[int], universe: int, budget: int | None):
        self.t = t
        self.sizes = sizes
        self.U = universe
        self.budget = budget
        self.nodes = 0
        n = t.length
        conf = t.conflicts
        frontier = []
        for i in range(n):
            frontier.append(tuple(j for j in range(i + 1) if any(k > i for k in conf[j])))
        # for step i: indices (into the previous frontier) of earlier conflicting
        # positions, and how to build the next frontier from (old state, new color)
        self.plan = []
        prev: tuple = ()
        for i in range(n):
            pos = {j: k for k, j in enumerate(prev)}
            blockers = tuple(pos[j] for j in conf[i] if j < i)
            take = tuple(-1 if q == i else pos[q] for q in frontier[i])
            self.plan.append((blockers, take))
            prev = frontier[i]
        self.memo: set = set()

    def run(self) -> list[frozenset] | None:
        self.lists: list[frozenset] = []
        return self._rec(0, frozenset([()]))

    @staticmethod
    def _canonical(states: frozenset) -> tuple:
        if not states:
            return ()
        width = len(next(iter(states)))
        palette = sorted({c for s in states for c in s})
        sig = {}
        for c in palette:
            sig[c] = tuple(sum(1 for s in states if s[k] == c) for k in range(width))
        order = sorted(palette, key=lambda c: sig[c])
        groups = [list(g) for _, g in itertools.groupby(order, key=lambda c: sig[c])]
        best = None
        for perm in itertools.product(*(itertools.permutations(g) for g in groups)):
            flat = [c for grp in perm for c in grp]
            ren = {c: r for r, c in enumerate(flat)}
            form = tuple(sorted(tuple(ren[c] for c in s) for s in states))
            if best is None or form < best:
                best = form
        return best

    def _rec(self, i: int, states: frozenset) -> list[frozenset] | None:
        n = self.t.length
        if not states:
            # already uncolorable: complete with arbitrary lists
            rest = [frozenset(range(1, s + 1)) for s in self.sizes[i:]]
            return list(self.lists) + rest
        if i == n:
            return None
        key = (i, self._canonical(states))
        if key in self.memo:
            return None
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _Budget()
        palette = sorted({c for s in states for c in s})
        others_pool = [c for c in range(1, self.U + 1) if c not in palette]
        size = self.sizes[i]
        blockers, take = self.plan[i]
        # per-color successor states, so each list is a union of these
        per_color = {}
        for c in palette + others_pool[:size]:
            out = set()
            for s in states:
                if any(s[b] == c for b in blockers):
                    continue
                out.add(tuple(c if q < 0 else s[q] for q in take))
            per_color[c] = frozenset(out)
        cands = {}
        for r in range(min(size, len(palette)), -1, -1):
            j = size - r
            if j > len(others_pool):
                continue
            for sub in itertools.combinations(palette, r):
                L = frozenset(sub) | frozenset(others_pool[:j])
                new = frozenset().union(*(per_color[c] for c in L))
                cands.setdefault(new, L)
        # drop dominated candidates (strict supersets of another candidate)
        keys = sorted(cands, key=len)
        kept = []
        for ns in keys:
            if any(k <= ns for k in kept):
                continue
            kept.append(ns)
        for ns in kept:
            self.lists.append(cands[ns])
            res = self._rec(i + 1, ns)
            self.lists.pop()
            if res is not None:
                return res
        self.memo.add(key)
        return None


class _Budget(Exception):
    pass


def check_pattern(t: LineTopology, pattern, universe: int | None = None,
                  mode: Mode | str = Mode.EXHAUSTIVE, *, seed: int = 0, trials: int = 1000,
                  budget: int | None = 2_000_000) -> Outcome:
    """Decide (or sample, or certify) choosability of ``t`` for list sizes ``pattern``.

    EXHAUSTIVE works over a bounded color universe, by default max(pattern)+2,
    and records it in the outcome.  Hitting ``budget`` search nodes yields
    INCONCLUSIVE, never a pass.
    """
    sizes = expand_pattern(pattern)
    mode = Mode(mode) if not isinstance(mode, Mode) else mode
    if len(sizes) != t.length:
        raise ValueError(f"pattern has {len(sizes)} entries, topology has {t.length} edges")
    if any(s < 1 for s in sizes):
        raise ValueError("list sizes must be positive")
    if universe is None:
        universe = max(sizes) + 2
    if universe < max(sizes):
        raise ValueError("universe smaller than the largest list")

    if mode is Mode.CERTIFICATE:
        spec = t.poly_spec()
        m = find_certificate(spec, sizes)
        if m is None:
            return Outcome(Verdict.INCONCLUSIVE, explanation="no monomial with non-zero coefficient fits the sizes")
        return Outcome(Verdict.CERTIFIED, monomial=m, explanation=f"coefficient in {spec} is non-zero")

    if mode is Mode.RANDOM:
        rng = random.Random(seed)
        colors = list(range(1, universe + 1))
        for trial in range(trials):
            L = [frozenset(rng.sample(colors, s)) for s in sizes]
            if list_color_line(t, L) is None:
                return Outcome(Verdict.COUNTEREXAMPLE, universe=universe, lists=L,
                               explanation=f"found on trial {trial + 1}")
        return Outcome(Verdict.INCONCLUSIVE, universe=universe,
                       explanation=f"{trials} random assignments all colorable (seed {seed})")

    search = _Exhaustive(t, sizes, universe, budget)
    try:
        bad = search.run()
    except _Budget:
        return Outcome(Verdict.INCONCLUSIVE, universe=universe,
                       explanation=f"exhaustive budget of {budget} nodes exceeded",
                       stats={"nodes": search.nodes})
    stats = {"nodes": search.nodes}
    if bad is not None:
        assert list_color_line(t, bad) is None
        return Outcome(Verdict.COUNTEREXAMPLE, universe=universe, lists=bad, stats=stats)
    return Outcome(Verdict.CHOOSABLE, universe=universe, stats=stats)


# ---------------------------------------------------------------------------
# the propagation trick and the explicit bad cycles


def trick_check(L: Sequence, X) -> bool:
    """On a path whose inner lists are the 3-set X, colorings repeat with period 3.

    Returns True iff every strong coloring of the path satisfies
    ``c(e_1) == c(e_n)`` (vacuously true if there is none).
    """
    X = frozenset(X)
    lists = [frozenset(x) for x in L]
    n = len(lists)
    if len(X) != 3:
        raise ValueError("X must have exactly 3 colors")
    if n % 3 != 1 or n < 4:
        raise ValueError("path length must be 1 mod 3 and at least 4")
    if any(not x <= X for x in lists):
        raise ValueError("every list must be a subset of X")
    if len(lists[0]) < 2:
        raise ValueError("first list needs at least 2 colors")
    if any(x != X for x in lists[1:-1]):
        raise ValueError("middle lists must equal X")
    if not lists[-1]:
        raise ValueError("last list must be non-empty")
    t = LineTopology(Kind.PATH, n)
    return all(c[0] == c[-1] for c in _backtrack(t, lists))


def _cycle_lists(n: int, head: list[set], middle: set, tail: list[set]) -> list[frozenset]:
    mid = [middle] * (n - len(head) - len(tail))
    return [frozenset(x) for x in head + mid + tail]


def bad_cycle_lists_c_readings(n: int) -> tuple[list[frozenset], list[frozenset]]:
    """Both readings of the n = 2 mod 3 family, whose L_{n-3}, L_{n-2} are ambiguous.

    Reading A: L_{n-3} = {1,3,4}, L_{n-2} = {1,2,3}.  Reading B swaps them.
    """
    head = [{1, 2, 3}, {1, 2, 3}, {2, 3}, {1, 2, 3}, {1, 2, 3, 4, 5}, {1, 3, 4}, {1, 3}]
    a = _cycle_lists(n, head, {1, 3, 4}, [{1, 3, 4}, {1, 2, 3}, {1, 2, 3, 4}, {1, 2}])
    b = _cycle_lists(n, head, {1, 3, 4}, [{1, 2, 3}, {1, 3, 4}, {1, 2, 3, 4}, {1, 2}])
    return a, b


def bad_cycle_lists(n: int) -> list[frozenset]:
    """Lists of sizes (3,3,2,3,5,3,2,3^{n-9},4,2) from which C_n cannot be colored."""
    if n < 10:
        raise ValueError("the bad cycle families need n >= 10")
    r = n % 3
    if r == 0:
        head = [{1, 2, 3}, {1, 2, 3}, {2, 3}, {1, 2, 3}, {1, 2, 3, 4, 5}, {1, 3, 4}, {1, 4}]
        return _cycle_lists(n, head, {1, 3, 4}, [{2, 3, 4}, {1, 2, 3, 4}, {1, 2}])
    if r == 1:
        head = [{1, 2, 3}, {1, 2, 3}, {2, 3}, {2, 3, 5}, {1, 2, 3, 4, 5}, {1, 4, 5}, {1, 4}]
        return _cycle_lists(n, head, {1, 3, 4}, [{1, 2, 4}, {1, 2, 3, 4}, {1, 2}])
    a, b = bad_cycle_lists_c_readings(n)
    t = LineTopology(Kind.CYCLE, n)
    if list_color_line(t, a) is None:
        return a
    if list_color_line(t, b) is None:
        return b
    raise AssertionError(f"neither reading of the n={n} family is uncolorable")

"""Exact S-packing edge-coloring: verification, backtracking search and helpers.

Classes are numbered ``1..k`` in the order of the packing sequence, so for
``(1, 2^8)`` class 1 is the matching class and classes 2..9 are induced
matchings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .graph import Graph, GraphError, conflict_masks

__all__ = [
    "PackingSpec",
    "EdgeColoring",
    "SolveOptions",
    "Verification",
    "BudgetExhausted",
    "verify",
    "solve",
    "iter_solutions",
    "admits",
    "chromatic_index",
    "is_class_one",
    "strong_index",
    "sdr",
    "max_exact2_set",
]


class BudgetExhausted(Exception):
    """The search hit its node budget before deciding; the instance is UNDECIDED."""

    def __init__(self, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} nodes")
        self.nodes = nodes


_SPEC_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


@dataclass(frozen=True)
class PackingSpec:
    """Non-decreasing sequence ``(s_1, ..., s_k)`` of class distances."""

    classes: tuple[int, ...]

    def __post_init__(self):
        cls = tuple(int(s) for s in self.classes)
        object.__setattr__(self, "classes", cls)
        if not cls:
            raise ValueError("a packing spec needs at least one class")
        if any(s < 1 for s in cls):
            raise ValueError("class distances must be positive")
        if any(a > b for a, b in zip(cls, cls[1:])):
            raise ValueError(f"packing spec must be non-decreasing: {cls}")

    @classmethod
    def parse(cls, text: str | Sequence[int] | "PackingSpec") -> "PackingSpec":
        """Parse ``"1,2^8"`` style exponent notation (also accepts a sequence)."""
        if isinstance(text, PackingSpec):
            return text
        if not isinstance(text, str):
            return cls(tuple(text))
        body = text.strip().strip("()")
        out: list[int] = []
        for tok in body.split(","):
            m = _SPEC_TOKEN.match(tok)
            if not m:
                raise ValueError(f"bad packing spec token {tok!r} in {text!r}")
            out.extend([int(m.group(1))] * int(m.group(2) or 1))
        return cls(tuple(out))

    def __len__(self) -> int:
        return len(self.classes)

    def __str__(self) -> str:
        parts = []
        i = 0
        while i < len(self.classes):
            j = i
            while j < len(self.classes) and self.classes[j] == self.classes[i]:
                j += 1
            run = j - i
            parts.append(f"{self.classes[i]}^{run}" if run > 1 else str(self.classes[i]))
            i = j
        return "(" + ",".join(parts) + ")"

    def distance(self, cls: int) -> int:
        """``s_i`` for the 1-based class index ``cls``."""
        return self.classes[cls - 1]

    @property
    def one_classes(self) -> list[int]:
        return [i + 1 for i, s in enumerate(self.classes) if s == 1]


@dataclass(frozen=True)
class EdgeColoring:
    """Edge -> class map; ``assignment[e]`` is a 1-based class or ``None`` when uncolored."""

    assignment: tuple[int | None, ...]
    spec: PackingSpec

    def __post_init__(self):
        k = len(self.spec)
        for e, c in enumerate(self.assignment):
            if c is not None and not (1 <= c <= k):
                raise ValueError(f"edge {e}: class {c} outside 1..{k}")

    @property
    def is_total(self) -> bool:
        return all(c is not None for c in self.assignment)

    def __getitem__(self, e: int) -> int | None:
        return self.assignment[e]

    def __len__(self) -> int:
        return len(self.assignment)

    def class_members(self, cls: int) -> list[int]:
        return [e for e, c in enumerate(self.assignment) if c == cls]

    def classes_used(self) -> set[int]:
        return {c for c in self.assignment if c is not None}

    def one_edge_counts(self, g: Graph) -> list[int]:
        """Per-vertex count of incident edges in an s=1 class."""
        ones = set(self.spec.one_classes)
        return [sum(1 for e in g.incidence[v] if self.assignment[e] in ones) for v in range(g.vertex_count)]

    def two_edge_counts(self, g: Graph) -> list[int]:
        """Per-vertex count of incident edges in an s=2 class."""
        twos = {i + 1 for i, s in enumerate(self.spec.classes) if s == 2}
        return [sum(1 for e in g.incidence[v] if self.assignment[e] in twos) for v in range(g.vertex_count)]

    def available_classes(self, g: Graph, e: int) -> set[int]:
        """Classes ``e`` could take given the other colored edges."""
        dist = g.edge_distances[e]
        free = set(range(1, len(self.spec) + 1))
        for f, c in enumerate(self.assignment):
            if f != e and c is not None and dist[f] <= self.spec.distance(c):
                free.discard(c)
        return free

    def relabeled(self, spec: PackingSpec, mapping: Mapping[int, int]) -> "EdgeColoring":
        return EdgeColoring(tuple(None if c is None else mapping[c] for c in self.assignment), spec)


@dataclass(frozen=True)
class SolveOptions:
    """Side constraints for :func:`solve` and :func:`verify`.

    ``good`` forbids s=1 classes on edges touching a vertex of degree at most 2;
    ``forced`` pins edges to classes; ``forbid`` removes classes from single edges.
    """

    good: bool = False
    forced: Mapping[int, int] = field(default_factory=dict)
    forbid: Mapping[int, Iterable[int]] = field(default_factory=dict)


@dataclass
class Verification:
    valid: bool
    violations: list[tuple]

    def __bool__(self) -> bool:
        return self.valid


def _good_blocked_edges(g: Graph) -> set[int]:
    deg = g.degrees
    return {e for e, (u, v) in enumerate(g.edges) if deg[u] <= 2 or deg[v] <= 2}


def verify(g: Graph, c: EdgeColoring, opts: SolveOptions | None = None) -> Verification:
    """Check a total coloring; every failure is listed.

    Violations are ``(class, (e, f))`` for two edges of one class that are too
    close, and ``(class, vertex)`` for a good-constraint failure at ``vertex``.
    """
    opts = opts or SolveOptions()
    if len(c) != g.edge_count:
        raise GraphError(f"coloring has {len(c)} entries for {g.edge_count} edges")
    if not c.is_total:
        raise GraphError("verify expects a total coloring")
    dist = g.edge_distances
    violations: list[tuple] = []
    by_class: dict[int, list[int]] = {}
    for e, cls in enumerate(c.assignment):
        by_class.setdefault(cls, []).append(e)
    for cls in sorted(by_class):
        s = c.spec.distance(cls)
        members = by_class[cls]
        for i, e in enumerate(members):
            for f in members[i + 1:]:
                if dist[e][f] <= s:
                    violations.append((cls, (e, f)))
    if opts.good:
        ones = set(c.spec.one_classes)
        deg = g.degrees
        for v in range(g.vertex_count):
            if deg[v] <= 2:
                for e in g.incidence[v]:
                    if c.assignment[e] in ones:
                        violations.append((c.assignment[e], v))
    return Verification(not violations, violations)


class _Search:
    """Backtracking with forward checking over per-edge bitmask domains."""

    def __init__(self, g: Graph, spec: PackingSpec, opts: SolveOptions, budget: int | None):
        self.g = g
        self.spec = spec
        self.k = k = len(spec)
        self.m = m = g.edge_count
        self.budget = budget
        self.nodes = 0
        by_s = {s: conflict_masks(g, s) for s in set(spec.classes)}
        # conflict[c][e]: edges that may not share class c with e
        self.conflict = [None] + [by_s[spec.distance(c)] for c in range(1, k + 1)]
        # static tie-break: larger strongest-conflict degree first
        strongest = by_s[max(spec.classes)]
        self.weight = [bin(x).count("1") for x in strongest]

        full = (1 << (k + 1)) - 2  # bits 1..k
        domains = [full] * m
        if opts.good:
            ones = 0
            for c in spec.one_classes:
                ones |= 1 << c
            for e in _good_blocked_edges(g):
                domains[e] &= ~ones
        for e, banned in opts.forbid.items():
            g.check_edge(e)
            for c in banned:
                domains[e] &= ~(1 << c)
        touched: set[int] = set()
        for e, c in opts.forced.items():
            g.check_edge(e)
            if not (1 <= c <= k):
                raise GraphError(f"forced class {c} outside 1..{k}")
            touched.add(c)
        for banned in opts.forbid.values():
            touched.update(banned)
        # interchangeable classes: same s and not singled out by forced/forbid
        self.group_of = [None] * (k + 1)
        self.groups: list[list[int]] = []
        groups: dict[int, list[int]] = {}
        for c in range(1, k + 1):
            if c not in touched:
                groups.setdefault(spec.distance(c), []).append(c)
        for members in groups.values():
            if len(members) > 1:
                for c in members:
                    self.group_of[c] = len(self.groups)
                self.groups.append(members)
        self.domains = domains
        self.forced = dict(opts.forced)

    def run_initial(self) -> tuple[list[int], list[int]] | None:
        """Apply forced assignments; ``None`` if they are infeasible."""
        domains = list(self.domains)
        assign = [0] * self.m
        for e, c in sorted(self.forced.items()):
            if not domains[e] >> c & 1:
                raise GraphError(f"forced assignment edge {e} -> class {c} is inconsistent")
            assign[e] = c
            domains[e] = 1 << c
            mask = self.conflict[c][e]
            bit = ~(1 << c)
            f = 0
            while mask:
                if mask & 1 and not assign[f]:
                    domains[f] &= bit
                    if not domains[f]:
                        if f in self.forced:
                            raise GraphError(f"forced assignments on edges {e} and {f} conflict")
                        return None
                elif mask & 1 and assign[f] == c:
                    raise GraphError(f"forced assignments on edges {e} and {f} conflict")
                mask >>= 1
                f += 1
        return domains, assign

    def solutions(self) -> Iterator[list[int]]:
        start = self.run_initial()
        if start is None:
            return
        domains, assign = start
        used = [0] * (self.k + 1)
        for c in assign:
            if c:
                used[c] += 1
        yield from self._dfs(domains, assign, used)

    def _dfs(self, domains: list[int], assign: list[int], used: list[int]) -> Iterator[list[int]]:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted(self.nodes)
        # pick the most constrained unassigned edge
        best = -1
        best_key = None
        for e in range(self.m):
            if assign[e]:
                continue
            key = (bin(domains[e]).count("1"), -self.weight[e])
            if best_key is None or key < best_key:
                best, best_key = e, key
        if best < 0:
            yield list(assign)
            return
        e = best
        dom = domains[e]
        for c in range(1, self.k + 1):
            if not dom >> c & 1:
                continue
            grp = self.group_of[c]
            if grp is not None and not used[c]:
                # only the lowest unused class of an interchangeable group may open
                if any(not used[d] for d in self.groups[grp] if d < c):
                    continue
            new_domains = list(domains)
            new_domains[e] = 1 << c
            mask = self.conflict[c][e]
            bit = ~(1 << c)
            ok = True
            while mask:
                low = mask & -mask
                f = low.bit_length() - 1
                mask ^= low
                if not assign[f]:
                    nd = new_domains[f] & bit
                    if not nd:
                        ok = False
                        break
                    new_domains[f] = nd
            if not ok:
                continue
            assign[e] = c
            used[c] += 1
            yield from self._dfs(new_domains, assign, used)
            used[c] -= 1
            assign[e] = 0


def iter_solutions(g: Graph, spec: PackingSpec | str, opts: SolveOptions | None = None,
                   budget: int | None = None) -> Iterator[EdgeColoring]:
    """All colorings, one per orbit under renaming of interchangeable classes."""
    spec = PackingSpec.parse(spec)
    search = _Search(g, spec, opts or SolveOptions(), budget)
    for assign in search.solutions():
        yield EdgeColoring(tuple(assign), spec)


def solve(g: Graph, spec: PackingSpec | str, opts: SolveOptions | None = None,
          budget: int | None = None) -> EdgeColoring | None:
    """Find an S-packing edge-coloring of ``g`` or prove there is none.

    Returns ``None`` only when no coloring exists. With a node ``budget`` the
    search may raise :class:`BudgetExhausted` instead, which decides nothing.
    """
    return next(iter_solutions(g, spec, opts, budget), None)


def admits(g: Graph, spec: PackingSpec | str, **kwargs) -> bool:
    return solve(g, spec, **kwargs) is not None


def chromatic_index(g: Graph) -> int:
    """3 or 4 for a subcubic graph of maximum degree 3."""
    if g.max_degree != 3:
        raise GraphError(f"chromatic_index expects maximum degree 3, got {g.max_degree}")
    return 3 if solve(g, (1, 1, 1)) is not None else 4


def is_class_one(g: Graph) -> bool:
    """Chromatic index equals maximum degree (any maximum degree)."""
    delta = g.max_degree
    if delta == 0:
        return True
    return solve(g, (1,) * delta) is not None


def _greedy_clique(masks: list[int]) -> int:
    best = 0
    for start in range(len(masks)):
        cand = masks[start]
        size = 1
        while cand:
            # take the candidate with most neighbours inside the candidate set
            f = max((x for x in range(len(masks)) if cand >> x & 1),
                    key=lambda x: (bin(masks[x] & cand).count("1"), -x))
            size += 1
            cand &= masks[f]
        best = max(best, size)
    return best


def strong_index(g: Graph, budget: int | None = None) -> int:
    """Minimum number of induced matchings partitioning ``E(g)``."""
    if g.edge_count == 0:
        return 0
    if any(u == v for u, v in g.edges):
        raise GraphError("a loop is never in an induced matching with a proper end")
    k = _greedy_clique(conflict_masks(g, 2))
    while solve(g, (2,) * k, budget=budget) is None:
        k += 1
    return k


def sdr(families: Sequence[Iterable]) -> list | None:
    """System of distinct representatives via augmenting paths, or ``None``."""
    sets = [sorted(set(A), key=repr) for A in families]
    owner: dict = {}  # element -> family index

    def augment(i: int, seen: set) -> bool:
        for x in sets[i]:
            if x in seen:
                continue
            seen.add(x)
            if x not in owner or augment(owner[x], seen):
                owner[x] = i
                return True
        return False

    for i in range(len(sets)):
        if not augment(i, set()):
            return None
    rep = [None] * len(sets)
    for x, i in owner.items():
        rep[i] = x
    return rep


def max_exact2_set(g: Graph) -> set[int]:
    """A largest edge set whose members are pairwise at distance exactly 2."""
    if not g.is_subcubic:
        raise GraphError("max_exact2_set expects a subcubic graph")
    m = g.edge_count
    dist = g.edge_distances
    adj = [sum(1 << f for f in range(m) if dist[e][f] == 2) for e in range(m)]
    best = 0

    def expand(clique: int, cand: int) -> None:
        nonlocal best
        if not cand:
            if bin(clique).count("1") > bin(best).count("1"):
                best = clique
            return
        if bin(clique).count("1") + bin(cand).count("1") <= bin(best).count("1"):
            return
        while cand:
            low = cand & -cand
            e = low.bit_length() - 1
            cand ^= low
            expand(clique | low, cand & adj[e])

    expand(0, (1 << m) - 1)
    return {e for e in range(m) if best >> e & 1}

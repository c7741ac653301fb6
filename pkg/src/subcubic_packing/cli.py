"""Command-line entry point.

Exit codes: 0 decided/constructed, 1 no coloring or counterexample,
2 usage or input error, 3 undecided (budget exhausted or inconclusive).
"""

from __future__ import annotations

import argparse
import os
import re
import sys

from . import choosability as ch
from .constructive import (InvariantViolation, alpha_induced_127, coloring_1112, good_128_report,
                           theorem_a_report)
from .corpus import ParseError, named, read_graph, write_graph
from .enumeration import Expect, SurveyPredicate, run_survey
from .graph import Graph, GraphError, structure_stats
from .packing import (BudgetExhausted, EdgeColoring, PackingSpec, SolveOptions, admits,
                      chromatic_index, solve, strong_index, verify)
from .polynomials import PolyError, PolySpec, coeff

OK, NONE, USAGE, UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load_graph(text: str) -> Graph:
    """A file path (EDGELIST, or graph6 for .g6/.graph6) or a named graph."""
    if os.path.exists(text):
        with open(text, "rb") as fh:
            data = fh.read()
        fmt = "GRAPH6" if text.endswith((".g6", ".graph6")) else "EDGELIST"
        return read_graph(data, fmt)
    for name in (text, os.path.splitext(os.path.basename(text))[0]):
        try:
            return named(name)
        except GraphError:
            continue
    raise UsageError(f"--graph: {text!r} is neither a readable file nor a named graph")


def format_coloring(g: Graph, c: EdgeColoring) -> list[str]:
    lines = [f"spec: {c.spec}"]
    for e, (u, v) in enumerate(g.edges):
        lines.append(f"edge {u}-{v}: {c[e]}")
    return lines


_EDGE_LINE = re.compile(r"^\s*(?:edge\s+)?(\d+)\s*-\s*(\d+)\s*:\s*(\d+)\s*$")


def parse_coloring(g: Graph, text: str, spec: PackingSpec | None) -> EdgeColoring:
    """Read ``edge u-v: class`` lines (as printed by ``solve``) plus an optional spec line."""
    pending: dict[tuple[int, int], list[int]] = {}
    for e, (u, v) in enumerate(g.edges):
        pending.setdefault((min(u, v), max(u, v)), []).append(e)
    assign: list[int | None] = [None] * g.edge_count
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#") or s.startswith("verdict"):
            continue
        if s.startswith("spec:"):
            if spec is None:
                spec = PackingSpec.parse(s[5:].strip())
            continue
        m = _EDGE_LINE.match(s)
        if not m:
            raise UsageError(f"coloring line {lineno}: cannot parse {line!r}")
        u, v, c = int(m.group(1)), int(m.group(2)), int(m.group(3))
        ids = pending.get((min(u, v), max(u, v)))
        if not ids:
            raise UsageError(f"coloring line {lineno}: no (remaining) edge {u}-{v} in the graph")
        assign[ids.pop(0)] = c
    if spec is None:
        raise UsageError("coloring has no 'spec:' line and no --spec was given")
    if any(c is None for c in assign):
        raise UsageError("coloring does not cover every edge")
    return EdgeColoring(tuple(assign), spec)


def _print(lines) -> None:
    for line in lines:
        print(line)


# ---------------------------------------------------------------------------
# subcommands


def cmd_solve(a) -> int:
    g = load_graph(a.graph)
    spec = PackingSpec.parse(a.spec)
    forced = {}
    for item in a.force_class or []:
        cls, _, edges = item.partition("=")
        if not edges:
            raise UsageError(f"--force-class expects CLASS=E1,E2,..., got {item!r}")
        for tok in edges.split(","):
            tok = tok.strip()
            if tok:
                forced[int(tok)] = int(cls)
    try:
        c = solve(g, spec, SolveOptions(good=a.good, forced=forced), budget=a.budget)
    except BudgetExhausted as exc:
        print(f"verdict: UNDECIDED ({exc})")
        return UNDECIDED
    if c is None:
        print(f"verdict: NONE (no {spec}-packing edge-coloring{' that is good' if a.good else ''})")
        return NONE
    _print(format_coloring(g, c))
    print("verdict: FOUND")
    return OK


def cmd_verify(a) -> int:
    g = load_graph(a.graph)
    with open(a.coloring) as fh:
        text = fh.read()
    c = parse_coloring(g, text, PackingSpec.parse(a.spec) if a.spec else None)
    res = verify(g, c, SolveOptions(good=a.good))
    for cls, what in res.violations:
        print(f"violation class {cls}: {what}")
    print(f"verdict: {'VALID' if res.valid else 'INVALID'}")
    return OK if res.valid else NONE


def cmd_index(a) -> int:
    g = load_graph(a.graph)
    if a.chromatic:
        print(f"chromatic_index: {chromatic_index(g)}")
    else:
        try:
            print(f"strong_index: {strong_index(g, budget=a.budget)}")
        except BudgetExhausted as exc:
            print(f"verdict: UNDECIDED ({exc})")
            return UNDECIDED
    return OK


def _poly_spec(a) -> PolySpec:
    kind = a.poly.upper()
    if kind in ("F", "F4CYCLE"):
        return PolySpec.F4CYCLE()
    if kind == "P":
        if a.k is None or a.n is None:
            raise UsageError("--poly P needs --k and --n (n is the last index l)")
        return PolySpec.P(a.k, a.n)
    if a.n is None:
        raise UsageError(f"--poly {kind} needs --n")
    return PolySpec(kind, n=a.n)


def cmd_coeff(a) -> int:
    spec = _poly_spec(a)
    mono = [int(x) for x in a.monomial.split(",") if x.strip()]
    if spec.kind == "P" and len(mono) == spec.l - spec.k + 1 and spec.k > 1:
        mono = [0] * (spec.k - 1) + mono  # given over X_k..X_l only
    if len(mono) != spec.var_count:
        raise UsageError(f"--monomial has {len(mono)} exponents, {spec} has {spec.var_count} variables")
    print(coeff(spec, mono))
    return OK


def cmd_choose(a) -> int:
    sizes = ch.expand_pattern(a.pattern)
    t = ch.LineTopology(ch.Kind(a.topology.lower()), len(sizes))
    out = ch.check_pattern(t, sizes, a.universe, ch.Mode(a.mode.lower()),
                           seed=a.seed, trials=a.trials, budget=a.budget)
    print(f"topology: {t.kind.value} {t.length}")
    print(f"pattern: {','.join(map(str, sizes))}")
    print(f"verdict: {out}")
    if out.verdict in (ch.Verdict.CHOOSABLE, ch.Verdict.CERTIFIED):
        return OK
    if out.verdict is ch.Verdict.COUNTEREXAMPLE:
        return NONE
    return UNDECIDED


def cmd_construct(a) -> int:
    g = load_graph(a.graph)
    method = a.method.lower()
    if method == "1112":
        c = coloring_1112(g)
    elif method == "theorem-a":
        rep = theorem_a_report(g)
        c = rep.coloring
        print(f"contracted class: {rep.contracted_class}; vertex colors: {rep.vertex_colors_needed}"
              f"{'; solver fallback' if rep.fallback else ''}")
    elif method == "good-128":
        rep = good_128_report(g)
        c = rep.coloring
        for step, before, after, level in rep.trace:
            print(f"step {step}: {before} -> {after} ({level})")
        print(f"fallbacks: {rep.fallbacks}")
    elif method == "alpha-induced":
        if a.pi:
            with open(a.pi) as fh:
                pi = parse_coloring(g, fh.read(), PackingSpec((1, 1, 1)))
        else:
            pi = solve(g, (1, 1, 1))
            if pi is None:
                print("verdict: NONE (graph is not 3-edge-colorable)")
                return NONE
        c = alpha_induced_127(g, pi, a.alpha)
    else:
        raise UsageError(f"--method: unknown method {a.method!r}")
    _print(format_coloring(g, c))
    print("verdict: FOUND")
    return OK


def cmd_named(a) -> int:
    g = named(a.name)
    st = structure_stats(g)
    print(f"name: {a.name}")
    print(f"vertices: {g.vertex_count}")
    print(f"edges: {g.edge_count}")
    print(f"max_degree: {st.max_degree}")
    print(f"girth: {st.girth}")
    print(f"bipartite: {'yes' if st.bipartite else 'no'}")
    if a.chromatic_index:
        print(chromatic_index(g))
    if a.strong_index:
        print(strong_index(g))
    code = OK
    for spec in a.admits or []:
        ok = admits(g, spec)
        print(f"admits {PackingSpec.parse(spec)}: {'yes' if ok else 'no'}")
        if not ok:
            code = NONE
    if a.write:
        sys.stdout.write(write_graph(g, a.write).decode())
        if a.write.upper() == "GRAPH6":
            print()
    return code


def cmd_survey(a) -> int:
    filters = [f for f in (a.filters or "").split(",") if f.strip()]
    pred = SurveyPredicate(PackingSpec.parse(a.spec), tuple(filters), Expect(a.expect.upper()))
    rep = run_survey(pred, a.n_max, a.n_min, connected=not a.disconnected, jobs=a.jobs,
                     budget=a.budget, cap=a.cap)
    text = rep.dumps()
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    if rep.undecided:
        return UNDECIDED
    if pred.expect is Expect.ALL_ADMIT and rep.counterexamples:
        return NONE
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="subcubic-packing", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="find an S-packing edge-coloring or prove none exists")
    s.add_argument("--graph", required=True)
    s.add_argument("--spec", required=True, help='e.g. "1,2^8"')
    s.add_argument("--good", action="store_true", help="no 1-class edge at a vertex of degree <= 2")
    s.add_argument("--force-class", action="append", metavar="CLASS=E1,E2")
    s.add_argument("--budget", type=int)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check a coloring file")
    s.add_argument("--graph", required=True)
    s.add_argument("--coloring", required=True)
    s.add_argument("--spec")
    s.add_argument("--good", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("index", help="chromatic or strong chromatic index")
    s.add_argument("--graph", required=True)
    grp = s.add_mutually_exclusive_group(required=True)
    grp.add_argument("--chromatic", action="store_true")
    grp.add_argument("--strong", action="store_true")
    s.add_argument("--budget", type=int)
    s.set_defaults(func=cmd_index)

    s = sub.add_parser("coeff", help="coefficient of a monomial in P, C, D, Q or F")
    s.add_argument("--poly", required=True, choices=["P", "C", "D", "Q", "F", "p", "c", "d", "q", "f"])
    s.add_argument("--k", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--monomial", required=True, help="comma-separated exponents")
    s.set_defaults(func=cmd_coeff)

    s = sub.add_parser("choose", help="list-coloring pattern checks on paths, cycles, D_n")
    s.add_argument("--topology", required=True, choices=["path", "cycle", "dn"])
    s.add_argument("--pattern", required=True, help='e.g. "2,3^4,1"')
    s.add_argument("--universe", type=int)
    s.add_argument("--mode", default="exhaustive", choices=["exhaustive", "random", "certificate"])
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--budget", type=int, default=2_000_000)
    s.set_defaults(func=cmd_choose)

    s = sub.add_parser("construct", help="run a coloring construction")
    s.add_argument("--graph", required=True)
    s.add_argument("--method", required=True, choices=["1112", "theorem-a", "good-128", "alpha-induced"])
    s.add_argument("--pi", help="proper 3-edge-coloring file for alpha-induced")
    s.add_argument("--alpha", default="a", choices=["a", "b", "c"])
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("named", help="named graph facts")
    s.add_argument("name")
    s.add_argument("--strong-index", action="store_true")
    s.add_argument("--chromatic-index", action="store_true")
    s.add_argument("--admits", action="append", metavar="SPEC")
    s.add_argument("--write", choices=["edgelist", "graph6", "EDGELIST", "GRAPH6"])
    s.set_defaults(func=cmd_named)

    s = sub.add_parser("survey", help="check a spec over all small subcubic graphs")
    s.add_argument("--spec", required=True)
    s.add_argument("--filters", default="")
    s.add_argument("--n-min", type=int, default=1)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--expect", default="ALL-ADMIT", choices=["ALL-ADMIT", "FIND-COUNTEREXAMPLES",
                                                             "all-admit", "find-counterexamples"])
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--budget", type=int)
    s.add_argument("--cap", type=int)
    s.add_argument("--disconnected", action="store_true", help="include disconnected graphs")
    s.add_argument("--out")
    s.set_defaults(func=cmd_survey)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    try:
        return a.func(a)
    except (UsageError, GraphError, ParseError, PolyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return NONE


if __name__ == "__main__":
    sys.exit(main())

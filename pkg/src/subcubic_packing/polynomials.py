"""Coloring polynomials as products of linear differences, and exact coefficients.

Variables are 1-based (``X_1 .. X_n``) everywhere in this module's public API.
A monomial is given as a sequence of exponents ``(e_1, ..., e_n)``; shorter
sequences are padded with zeros.

Coefficients are extracted without expanding the product: factors are
consumed one at a time while only exponent vectors that still divide the
target are kept, and a variable is checked against its target exponent (and
dropped from the state) as soon as its last factor has been consumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

# a factor (i, j) stands for (X_i - X_j)
Factor = tuple[int, int]


class PolyError(ValueError):
    pass


@dataclass(frozen=True)
class PolySpec:
    """Which polynomial: ``P`` (k, l), ``C``/``D``/``Q`` (n) or ``F4CYCLE``."""

    kind: str
    k: int | None = None
    l: int | None = None
    n: int | None = None

    def __post_init__(self):
        kind = self.kind.upper()
        object.__setattr__(self, "kind", kind)
        if kind == "P":
            if self.k is None or self.l is None or not 1 <= self.k <= self.l:
                raise PolyError("P(k, l) needs 1 <= k <= l")
        elif kind in ("C", "D", "Q"):
            if self.n is None or self.n < 5:
                raise PolyError(f"{kind}(n) needs n >= 5")
        elif kind != "F4CYCLE":
            raise PolyError(f"unknown polynomial kind {self.kind!r}")

    @classmethod
    def P(cls, k: int, l: int) -> "PolySpec":
        return cls("P", k=k, l=l)

    @classmethod
    def C(cls, n: int) -> "PolySpec":
        return cls("C", n=n)

    @classmethod
    def D(cls, n: int) -> "PolySpec":
        return cls("D", n=n)

    @classmethod
    def Q(cls, n: int) -> "PolySpec":
        return cls("Q", n=n)

    @classmethod
    def F4CYCLE(cls) -> "PolySpec":
        return cls("F4CYCLE")

    @property
    def var_count(self) -> int:
        if self.kind == "P":
            return self.l
        if self.kind == "F4CYCLE":
            return 6
        return self.n

    def __str__(self) -> str:
        if self.kind == "P":
            return f"P({self.k},{self.l})"
        if self.kind == "F4CYCLE":
            return "F4CYCLE"
        return f"{self.kind}({self.n})"


def path_factors(k: int, l: int) -> list[Factor]:
    if not 1 <= k <= l:
        raise PolyError("path polynomial needs 1 <= k <= l")
    if k == l:
        return []
    out = [(k + 1, k)]
    for i in range(k + 2, l + 1):
        out += [(i, i - 2), (i, i - 1)]
    return out


def q_factors(n: int) -> list[Factor]:
    return [(n - 1, n - 2), (n - 1, n - 3), (n, n - 1), (n, n - 2),
            (1, n - 1), (1, n), (2, n)]


def cycle_factors(n: int) -> list[Factor]:
    out = [(1, n - 1), (1, n), (2, n), (2, 1)]
    for i in range(3, n + 1):
        out += [(i, i - 2), (i, i - 1)]
    return out


def f4cycle_factors() -> list[Factor]:
    return [(1, 2), (1, 3), (1, 4), (1, 5),
            (2, 3), (2, 4), (2, 5), (2, 6),
            (3, 5), (3, 6), (4, 6), (4, 5), (5, 6)]


def build_poly(spec: PolySpec) -> list[Factor]:
    """Factor list ``[(i, j), ...]`` meaning ``prod (X_i - X_j)``; empty means 1."""
    if spec.kind == "P":
        return path_factors(spec.k, spec.l)
    if spec.kind == "C":
        return cycle_factors(spec.n)
    if spec.kind == "D":
        return cycle_factors(spec.n) + [(2, spec.n - 1)]
    if spec.kind == "Q":
        return q_factors(spec.n)
    return f4cycle_factors()


def _as_exponents(m: Sequence[int] | Mapping[int, int], nvars: int) -> tuple[int, ...]:
    if isinstance(m, Mapping):
        exps = [0] * nvars
        for var, e in m.items():
            if not 1 <= var <= nvars:
                raise PolyError(f"variable X_{var} outside X_1..X_{nvars}")
            exps[var - 1] = e
        return tuple(exps)
    exps = tuple(m)
    if len(exps) > nvars:
        if any(exps[nvars:]):
            raise PolyError(f"monomial uses variables beyond X_{nvars}")
        exps = exps[:nvars]
    if any(e < 0 for e in exps):
        raise PolyError("negative exponent")
    return exps + (0,) * (nvars - len(exps))


def factors_coefficient(factors: Sequence[Factor], m: Sequence[int]) -> int:
    """Coefficient of the monomial with exponents ``m`` (1-based vars) in ``prod (X_i - X_j)``."""
    nvars = max([len(m)] + [max(f) for f in factors])
    target = _as_exponents(m, nvars)
    if sum(target) != len(factors):
        return 0
    last = {}
    remaining = [0] * (nvars + 1)
    for t, (i, j) in enumerate(factors):
        last[i] = t
        last[j] = t
        remaining[i] += 1
        remaining[j] += 1
    for var in range(1, nvars + 1):
        if target[var - 1] > remaining[var]:
            return 0

    # state: tuple of (var, exponent so far) for live variables -> coefficient
    states: dict[tuple, int] = {(): 1}
    live: list[int] = []
    for t, (i, j) in enumerate(factors):
        remaining[i] -= 1
        remaining[j] -= 1
        for var in (i, j):
            if var not in live:
                live.append(var)
        live.sort()
        nxt: dict[tuple, int] = {}
        for key, coef in states.items():
            cur = dict(key)
            for var, sign in ((i, 1), (j, -1)):
                e = cur.get(var, 0) + 1
                if e > target[var - 1]:
                    continue
                new = dict(cur)
                new[var] = e
                nk = tuple((v, new.get(v, 0)) for v in live)
                nxt[nk] = nxt.get(nk, 0) + sign * coef
        # retire variables whose last factor was this one
        closing = [v for v in (i, j) if last[v] == t]
        states = {}
        for key, coef in nxt.items():
            if not coef:
                continue
            cur = dict(key)
            ok = True
            for v in live:
                # prune: not enough factors left to reach the target exponent
                if cur[v] + remaining[v] < target[v - 1]:
                    ok = False
                    break
            if not ok:
                continue
            if closing:
                key = tuple((v, e) for v, e in key if v not in closing)
            states[key] = states.get(key, 0) + coef
        for v in closing:
            if v in live:
                live.remove(v)
    return states.get((), 0)


def coeff(spec: PolySpec, m: Sequence[int] | Mapping[int, int]) -> int:
    """Exact coefficient of ``m`` in the fully expanded polynomial of ``spec``."""
    exps = _as_exponents(m, spec.var_count)
    factors = build_poly(spec)
    if not factors:
        return 1 if not any(exps) else 0
    return factors_coefficient(factors, exps)


def degree(spec: PolySpec) -> int:
    return len(build_poly(spec))


class SparsePoly:
    """Integer polynomial as ``{exponent tuple: coefficient}`` (no zero coefficients)."""

    def __init__(self, var_count: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.var_count = var_count
        self.terms: dict[tuple[int, ...], int] = {}
        for mono, c in (terms or {}).items():
            if c:
                self.terms[_as_exponents(mono, var_count)] = c

    @classmethod
    def constant(cls, var_count: int, c: int = 1) -> "SparsePoly":
        return cls(var_count, {(0,) * var_count: c})

    @classmethod
    def difference(cls, var_count: int, i: int, j: int) -> "SparsePoly":
        xi = [0] * var_count
        xj = [0] * var_count
        xi[i - 1] = 1
        xj[j - 1] = 1
        out = cls(var_count)
        out.terms[tuple(xi)] = 1
        out.terms[tuple(xj)] = out.terms.get(tuple(xj), 0) - 1
        out.terms = {k: v for k, v in out.terms.items() if v}
        return out

    @classmethod
    def from_factors(cls, factors: Iterable[Factor], var_count: int) -> "SparsePoly":
        out = cls.constant(var_count)
        for i, j in factors:
            out = out * cls.difference(var_count, i, j)
        return out

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        n = max(self.var_count, other.var_count)
        acc: dict[tuple[int, ...], int] = {}
        for a, ca in self.terms.items():
            a = a + (0,) * (n - len(a))
            for b, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(a, b + (0,) * (n - len(b))))
                acc[key] = acc.get(key, 0) + ca * cb
        return SparsePoly(n, acc)

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        n = max(self.var_count, other.var_count)
        acc: dict[tuple[int, ...], int] = {}
        for src in (self.terms, other.terms):
            for a, c in src.items():
                key = a + (0,) * (n - len(a))
                acc[key] = acc.get(key, 0) + c
        return SparsePoly(n, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        n = max(self.var_count, other.var_count)
        pad = lambda t: {k + (0,) * (n - len(k)): v for k, v in t.items()}  # noqa: E731
        return pad(self.terms) == pad(other.terms)

    def coefficient(self, m: Sequence[int] | Mapping[int, int]) -> int:
        return self.terms.get(_as_exponents(m, self.var_count), 0)

    def collect(self, var_exponents: Mapping[int, int]) -> "SparsePoly":
        """Coefficient polynomial of ``prod X_v^e`` over ``var_exponents`` (those vars exactly)."""
        out: dict[tuple[int, ...], int] = {}
        for mono, c in self.terms.items():
            if all(mono[v - 1] == e for v, e in var_exponents.items()):
                rest = list(mono)
                for v in var_exponents:
                    rest[v - 1] = 0
                out[tuple(rest)] = out.get(tuple(rest), 0) + c
        return SparsePoly(self.var_count, out)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"SparsePoly({self.var_count}, {len(self.terms)} terms)"


# ---------------------------------------------------------------------------
# closed forms for path polynomials

_EQ2 = {0: -1, 1: 1, 2: 0}
_EQ3 = {0: 0, 1: -1, 2: 1}
PATTERNS = ("EQ2", "EQ3", "EQ4", "EQ5")


def pattern_monomial(k: int, l: int, pattern: str) -> tuple[int, ...]:
    """Exponents over ``X_1..X_l`` of the monomial a closed-form pattern refers to.

    EQ2: ``X_k X_{k+1}^2..X_{l-2}^2 X_{l-1} X_l``;  EQ3: ``X_k X_{k+1}^2..X_{l-1}^2``;
    EQ4: ``X_k X_{k+1} X_{k+2}^2..X_{l-1}^2 X_l`` (mirror of EQ2);
    EQ5: ``X_{k+1}^2..X_{l-1}^2 X_l`` (mirror of EQ3).
    """
    if k + 2 > l:
        raise PolyError("closed forms need k + 2 <= l")
    e = [0] * l
    pattern = _norm_pattern(pattern)
    if pattern == "EQ2":
        e[k - 1] = 1
        for i in range(k + 1, l - 1):
            e[i - 1] = 2
        e[l - 2] += 1
        e[l - 1] += 1
    elif pattern == "EQ3":
        e[k - 1] = 1
        for i in range(k + 1, l):
            e[i - 1] = 2
    elif pattern == "EQ4":
        e[k - 1] += 1
        e[k] += 1
        for i in range(k + 2, l):
            e[i - 1] = 2
        e[l - 1] += 1
    else:
        for i in range(k + 1, l):
            e[i - 1] = 2
        e[l - 1] = 1
    return tuple(e)


def _norm_pattern(pattern: str) -> str:
    p = pattern.upper().replace("-LHS", "")
    if p not in PATTERNS:
        raise PolyError(f"unknown pattern {pattern!r}")
    return p


def p_closed_form(k: int, l: int, pattern: str) -> int:
    """Coefficient of :func:`pattern_monomial` in ``P(k, l)`` from the mod-3 tables."""
    if k + 2 > l:
        raise PolyError("closed forms need k + 2 <= l")
    r = (l - k) % 3
    pattern = _norm_pattern(pattern)
    return {"EQ2": _EQ2[r], "EQ3": _EQ3[r], "EQ4": -_EQ2[r], "EQ5": -_EQ3[r]}[pattern]


def path_sequences(max_len: int) -> tuple[dict[int, int], dict[int, int]]:
    """``a_d`` and ``b_d`` by direct extraction, indexed by ``d = l - k`` (k = 1).

    ``a_d`` is the EQ2 coefficient and ``b_d`` the EQ3 coefficient of ``P(1, 1+d)``
    for ``d >= 2``; ``a_1 = 1`` is the value the recurrence extends backwards to.
    """
    a = {1: 1}
    b = {}
    for d in range(2, max_len + 1):
        a[d] = coeff(PolySpec.P(1, 1 + d), pattern_monomial(1, 1 + d, "EQ2"))
        b[d] = coeff(PolySpec.P(1, 1 + d), pattern_monomial(1, 1 + d, "EQ3"))
    return a, b


# ---------------------------------------------------------------------------
# the chorded-path coefficient decomposition for n >= 10


def chorded_target_monomial(n: int) -> tuple[int, ...]:
    """``X1^2 X2^3 X3 X4^2 X5^4 X6^2 X7 X8^2..X_{n-2}^2 X_{n-1}^3 X_n``."""
    if n < 10:
        raise PolyError("needs n >= 10")
    e = [2, 3, 1, 2, 4, 2, 1] + [2] * (n - 9) + [3, 1]
    return tuple(e)


def alpha_monomial(n: int) -> tuple[int, ...]:
    e = list(chorded_target_monomial(n))
    e[1] -= 1  # X2^2
    return tuple(e)


def beta_monomial(n: int) -> tuple[int, ...]:
    e = list(chorded_target_monomial(n))
    e[n - 2] -= 1  # X_{n-1}^2
    return tuple(e)


class ChordedSplit(NamedTuple):
    n: int
    alpha: int
    beta: int
    d: int
    r_terms: dict[tuple[int, ...], int]  # R_{n,2,1} over X_1..X_{n-2}
    beta_parts: list[int]  # p_{1,n-2} of the cofactor of each R term
    beta_from_r: int


def r21_polynomial(n: int) -> SparsePoly:
    """``R_{n,2,1}``: coefficient of ``X_{n-1}^2 X_n`` in ``Q_n``, over ``X_1..X_{n-2}``."""
    q = SparsePoly.from_factors(q_factors(n), n)
    return q.collect({n - 1: 2, n: 1})


def r21_order(n: int) -> list[tuple[int, ...]]:
    """R term monomials in the order ``X1^2X2X_{n-3}, X1^2X_{n-3}X_{n-2}, X1X2X_{n-3}X_{n-2},
    X1^2X_{n-2}^2, X1X_{n-3}X_{n-2}^2, X2X_{n-3}X_{n-2}^2``."""
    def mono(**powers):
        e = [0] * n
        for var, p in powers.items():
            e[int(var[1:]) - 1] += p
        return tuple(e)

    a, b = n - 3, n - 2
    return [
        mono(x1=2, x2=1, **{f"x{a}": 1}),
        mono(x1=2, **{f"x{a}": 1, f"x{b}": 1}),
        mono(x1=1, x2=1, **{f"x{a}": 1, f"x{b}": 1}),
        mono(x1=2, **{f"x{b}": 2}),
        mono(x1=1, **{f"x{a}": 1, f"x{b}": 2}),
        mono(x2=1, **{f"x{a}": 1, f"x{b}": 2}),
    ]


def lemma9_coeffs(n: int) -> ChordedSplit:
    """The two cycle coefficients behind the chorded-path target and their difference.

    ``alpha`` and ``beta`` are defined so that ``d = alpha - beta``; ``beta`` is
    computed both directly and from the ``R_{n,2,1}`` split into six path
    coefficients.
    """
    if n < 10:
        raise PolyError("lemma9_coeffs needs n >= 10")
    cn = PolySpec.C(n)
    alpha = coeff(cn, alpha_monomial(n))
    beta = -coeff(cn, beta_monomial(n))
    d = coeff(PolySpec.D(n), chorded_target_monomial(n))

    r = r21_polynomial(n)
    r_terms = {mono[: n - 2]: c for mono, c in r.terms.items()}
    rest = beta_monomial(n)[: n - 2]
    p = PolySpec.P(1, n - 2)
    parts = []
    for mono in r21_order(n):
        cof = tuple(x - y for x, y in zip(rest, mono))
        parts.append(coeff(p, cof) if min(cof) >= 0 else 0)
    beta_from_r = 0
    for mono, c in r_terms.items():
        cof = tuple(x - y for x, y in zip(rest, mono))
        if min(cof) >= 0:
            beta_from_r -= c * coeff(p, cof)
    return ChordedSplit(n, alpha, beta, d, r_terms, parts, beta_from_r)


# monomials d_n(m_n) != 0 for the small chorded paths, n = 6..11
SMALL_D_MONOMIALS: dict[int, tuple[int, ...]] = {
    6: (2, 3, 2, 2, 2, 2),
    7: (2, 3, 2, 2, 2, 2, 2),
    8: (2, 2, 2, 3, 2, 1, 3, 2),
    9: (2, 3, 2, 2, 2, 2, 2, 2, 2),
    10: (2, 3, 2, 2, 2, 2, 2, 2, 2, 2),
    11: (2, 2, 2, 3, 2, 2, 2, 2, 1, 3, 2),
}


def choosability_certificate(conflicts: Iterable[tuple[int, int]], list_sizes: Sequence[int],
                             m: Sequence[int], spec: PolySpec) -> bool:
    """True iff ``m`` certifies list-colorability from lists of the given sizes.

    Requires a non-zero coefficient, total degree equal to the polynomial's
    degree and every exponent strictly below its list size. ``conflicts`` (1-based
    position pairs) must be exactly the factor pairs of ``spec``; otherwise the
    polynomial does not encode the coloring problem and ``False`` is returned.
    """
    if len(m) != len(list_sizes):
        raise PolyError("monomial and list sizes disagree in length")
    factors = build_poly(spec)
    want = {frozenset(p) for p in conflicts}
    have = {frozenset(p) for p in factors}
    if want != have:
        return False
    if sum(m) != len(factors):
        return False
    if any(e >= s for e, s in zip(m, list_sizes)):
        return False
    return coeff(spec, m) != 0


def find_certificate(spec: PolySpec, list_sizes: Sequence[int],
                     limit: int = 200_000) -> tuple[int, ...] | None:
    """A monomial certifying ``list_sizes`` for ``spec``, or ``None``.

    Candidates are tried in decreasing lexicographic order of exponents; at most
    ``limit`` of them are examined.
    """
    deg = degree(spec)
    caps = [s - 1 for s in list_sizes]
    if sum(caps) < deg:
        return None
    suffix = [0] * (len(caps) + 1)
    for i in range(len(caps) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    tried = 0
    prefix: list[int] = []

    def rec(i: int, left: int) -> tuple[int, ...] | None:
        nonlocal tried
        if i == len(caps):
            tried += 1
            mono = tuple(prefix)
            return mono if coeff(spec, mono) != 0 else None
        for e in range(min(caps[i], left), -1, -1):
            if left - e > suffix[i + 1] or tried >= limit:
                break
            prefix.append(e)
            found = rec(i + 1, left - e)
            prefix.pop()
            if found is not None:
                return found
        return None

    return rec(0, deg)


def expand(spec: PolySpec) -> SparsePoly:
    """Full expansion (small cases and cross-checks only)."""
    return SparsePoly.from_factors(build_poly(spec), spec.var_count)


def permuted_coefficient(spec: PolySpec, m: Sequence[int], order: Sequence[int]) -> int:
    factors = build_poly(spec)
    return factors_coefficient([factors[i] for i in order], _as_exponents(m, spec.var_count))


__all__ = [
    "PolySpec", "PolyError", "SparsePoly", "build_poly", "coeff", "degree",
    "p_closed_form", "pattern_monomial", "path_sequences", "lemma9_coeffs",
    "ChordedSplit", "r21_polynomial", "choosability_certificate",
    "find_certificate", "expand", "SMALL_D_MONOMIALS", "chorded_target_monomial",
    "factors_coefficient", "permuted_coefficient", "alpha_monomial", "beta_monomial",
    "r21_order", "f4cycle_factors",
]


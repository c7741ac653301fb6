import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from subcubic_packing.choosability import Kind, LineTopology
from subcubic_packing.polynomials import (SMALL_D_MONOMIALS, PolyError, PolySpec, SparsePoly, build_poly,
                                          choosability_certificate, coeff, degree, expand, find_certificate,
                                          lemma9_coeffs, p_closed_form, path_sequences, pattern_monomial,
                                          permuted_coefficient, r21_polynomial)


def sympy_coeff(spec, m):
    xs = sympy.symbols(f"x1:{spec.var_count + 1}")
    f = sympy.Integer(1)
    for i, j in build_poly(spec):
        f *= xs[i - 1] - xs[j - 1]
    poly = sympy.Poly(sympy.expand(f), *xs)
    return int(poly.coeff_monomial(tuple(m)))


SMALL = [PolySpec.P(1, 4), PolySpec.P(2, 6), PolySpec.C(5), PolySpec.C(6), PolySpec.D(6), PolySpec.Q(6)]


@pytest.mark.parametrize("spec", SMALL, ids=str)
def test_coefficients_match_sympy(spec):
    full = expand(spec)
    rng = random.Random(7)
    monos = list(full.terms)
    rng.shuffle(monos)
    for m in monos[:15]:
        assert coeff(spec, m) == full.terms[m] == sympy_coeff(spec, m)


def test_degree_is_factor_count():
    assert degree(PolySpec.C(7)) == 14
    assert degree(PolySpec.D(7)) == 15
    assert degree(PolySpec.P(1, 1)) == 0
    assert degree(PolySpec.F4CYCLE()) == 13


def test_wrong_degree_monomial_has_zero_coefficient():
    assert coeff(PolySpec.C(5), (1, 1, 1, 1, 1)) == 0


def test_bad_specs_rejected():
    for args in (("P", 3, 2), ("C", None, None, 4), ("Z",)):
        with pytest.raises(PolyError):
            PolySpec(*args)
    with pytest.raises(PolyError):
        coeff(PolySpec.C(5), (1, 2, 0, 0, 0, 1))
    with pytest.raises(PolyError):
        coeff(PolySpec.C(5), (-1, 2))
    # short monomials are padded with zero exponents
    assert coeff(PolySpec.F4CYCLE(), (2, 4, 2, 2, 3)) == coeff(PolySpec.F4CYCLE(), {1: 2, 2: 4, 3: 2, 4: 2, 5: 3})


@settings(max_examples=25, deadline=None)
@given(st.integers(5, 8), st.randoms(use_true_random=False))
def test_coefficient_invariant_under_factor_order(n, rnd):
    spec = PolySpec.C(n)
    terms = expand(spec).terms
    m = rnd.choice(sorted(terms))
    order = list(range(len(build_poly(spec))))
    rnd.shuffle(order)
    assert permuted_coefficient(spec, m, order) == terms[m]


def test_sparse_poly_arithmetic():
    a = SparsePoly.difference(2, 1, 2)  # x1 - x2
    sq = a * a
    assert sq.coefficient((2, 0)) == 1 and sq.coefficient((1, 1)) == -2
    assert (a + a).coefficient((1, 0)) == 2
    assert a * SparsePoly.constant(2) == a


@pytest.mark.parametrize("pattern", ["EQ2", "EQ3", "EQ4", "EQ5"])
def test_closed_forms_match_extraction(pattern):
    for k in (1, 2, 3):
        for l in range(k + 2, k + 13):
            m = pattern_monomial(k, l, pattern)
            assert p_closed_form(k, l, pattern) == coeff(PolySpec.P(k, l), m), (k, l)


def test_path_sequence_recurrence():
    a, b = path_sequences(14)
    assert (a[1], a[2], a[3]) == (1, 0, -1)
    for d in range(3, 15):
        assert a[d] == -a[d - 1] - a[d - 2]


def test_small_chorded_path_table():
    assert [coeff(PolySpec.D(n), SMALL_D_MONOMIALS[n]) for n in range(6, 12)] == [2, 1, -1, 2, 1, -1]


def test_decomposition_consistent():
    for n in range(10, 15):
        r = lemma9_coeffs(n)
        assert r.alpha == 0
        assert r.beta == r.beta_from_r
        assert r.d == r.alpha + r.beta


def test_r21_has_six_terms():
    for n in (10, 11, 12):
        assert len(r21_polynomial(n)) == 6


def test_f4cycle_alternative_certificate():
    f = PolySpec.F4CYCLE()
    assert coeff(f, (2, 4, 2, 2, 2, 1)) == -1
    assert sympy_coeff(f, (2, 4, 2, 2, 2, 1)) == -1
    assert sympy_coeff(f, (2, 4, 2, 2, 3, 0)) == 0


def test_certificate_for_chorded_path():
    t = LineTopology(Kind.DN, 8)
    sizes = (3, 3, 3, 5, 3, 2, 4, 3)
    m = find_certificate(t.poly_spec(), sizes)
    assert m is not None
    assert choosability_certificate(t.conflict_pairs(), sizes, m, t.poly_spec())
    assert not choosability_certificate(t.conflict_pairs(), (2,) * 8, m, t.poly_spec())


def test_certificate_rejects_mismatched_conflicts():
    spec = PolySpec.C(5)
    m = (2, 2, 2, 2, 2)
    assert not choosability_certificate({(1, 2)}, (5,) * 5, m, spec)


def test_cycle_conflicts_equal_factor_pairs():
    for n in range(5, 10):
        t = LineTopology(Kind.CYCLE, n)
        assert {frozenset(p) for p in t.conflict_pairs()} == {frozenset(p) for p in build_poly(PolySpec.C(n))}

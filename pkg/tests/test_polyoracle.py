from __future__ import annotations

import pytest
import sympy
from hypothesis import given, strategies as st

from invcyclo.exceptions import BudgetError, DomainError, InexactDivisionError
from invcyclo.numtheory import make_family_triple
from invcyclo.polyoracle import (
    IntPolynomial,
    cyclotomic,
    cyclotomic_by_division,
    f_polynomial,
    format_sparse,
    height_of,
    inverse_cyclotomic,
    inverse_cyclotomic_by_division,
    poly_exact_div,
    poly_mul,
    psi_product_form,
    set_degree_budget,
    get_degree_budget,
    totient,
)

P = IntPolynomial
PSI15 = P([-1, -1, -1, 0, 0, 1, 1, 1])


def naive_mul(f, g):
    out = [0] * (len(f.coeffs) + len(g.coeffs))
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] += a * b
    return P(out)


def sympy_cyclotomic(n):
    x = sympy.Symbol("x")
    return P(reversed(sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()))


def test_zero_polynomial():
    z = P([0, 0])
    assert z.is_zero() and z.degree is None and z.coeffs == ()
    assert height_of(z) == 0


def test_mul_examples():
    assert poly_mul(P([1, 1]), P([1, -1])) == P([1, 0, -1])
    assert poly_mul(P([-1, 0, 0, 1]), P([1, 1, 1, 1, 1])) == PSI15
    assert poly_mul(PSI15, P()).is_zero()


ints = st.lists(st.integers(-20, 20), max_size=12)


@given(ints, ints)
def test_mul_matches_naive(a, b):
    f, g = P(a), P(b)
    prod = poly_mul(f, g)
    assert prod == naive_mul(f, g)
    if not f.is_zero() and not g.is_zero():
        assert prod.degree == f.degree + g.degree


@given(ints, st.lists(st.integers(-5, 5), min_size=1, max_size=6).filter(lambda c: c[-1] in (1, -1)))
def test_exact_div_inverts_mul(a, b):
    f, g = P(a), P(b)
    assert poly_exact_div(poly_mul(f, g), g) == f


def test_exact_div_examples():
    assert poly_exact_div(P([-1, 0, 1]), P([-1, 1])) == P([1, 1])
    assert poly_exact_div(P.binomial(15), cyclotomic(15)) == PSI15
    with pytest.raises(InexactDivisionError):
        poly_exact_div(P([1, 0, 1]), P([-1, 1]))
    with pytest.raises(InexactDivisionError):
        poly_exact_div(P([1, 2]), P([1, 2, 1]))
    with pytest.raises(InexactDivisionError):
        poly_exact_div(P([0, 1]), P([0, 2]))
    with pytest.raises(ZeroDivisionError):
        poly_exact_div(P([1]), P())


def test_cyclotomic_examples():
    assert cyclotomic(1) == P([-1, 1])
    assert cyclotomic(15) == P([1, -1, 0, 1, -1, 1, 0, -1, 1])
    assert cyclotomic(561).degree == 2 * 10 * 16


def test_cyclotomic_matches_sympy_and_division_route():
    for n in list(range(1, 121)) + [165, 195, 231, 255, 385, 561]:
        ref = sympy_cyclotomic(n)
        assert cyclotomic(n) == ref, n
        assert cyclotomic_by_division(n) == ref, n
        assert cyclotomic(n).degree == totient(n)


def test_inverse_cyclotomic_examples():
    assert inverse_cyclotomic(15) == PSI15
    assert inverse_cyclotomic(6) == P([-1, -1, 0, 1, 1])
    assert inverse_cyclotomic(561).degree == 241


def test_inverse_cyclotomic_routes_agree():
    for n in list(range(2, 200)) + [385, 561, 595, 1001]:
        psi = inverse_cyclotomic(n)
        assert psi == inverse_cyclotomic_by_division(n), n
        assert psi.degree == n - totient(n)
        # Anti-reciprocal for n >= 2.
        d = psi.degree
        assert all(psi[m] == -psi[d - m] for m in range(d + 1)), n


def test_inverse_cyclotomic_domain():
    with pytest.raises(DomainError):
        inverse_cyclotomic(1)


def test_psi_product_form_examples():
    assert psi_product_form(3, 11, 17) == inverse_cyclotomic(561)
    g = psi_product_form(4, 9, 25)
    assert g[0] == -1
    assert g.degree == 4 * 9 + 9 * 25 + 25 * 4 - 4 - 9 - 25 + 1
    with pytest.raises(DomainError):
        psi_product_form(2, 4, 5)


def test_psi_product_form_matches_division_for_primes():
    for p, q, r in [(3, 5, 7), (3, 7, 11), (5, 7, 11), (3, 11, 17), (5, 7, 19)]:
        assert psi_product_form(p, q, r) == inverse_cyclotomic_by_division(p * q * r)


def test_f_polynomial():
    t = make_family_triple(3, 11, 17)
    f = f_polynomial(t)
    assert f.degree == t.tau == 54
    assert f(1) == 3
    assert f[0] == 1
    assert f.coeffs == f.coeffs[::-1]


def test_psi_factors_through_f_small():
    for p, q, r in [(3, 11, 17), (5, 7, 17), (5, 7, 19), (5, 11, 31)]:
        t = make_family_triple(p, q, r)
        assert inverse_cyclotomic(t.n) == poly_mul(P.binomial(q * r), f_polynomial(t))


def test_height_examples():
    assert height_of(PSI15) == 1
    assert height_of(P([-5, 1])) == 5
    assert height_of(inverse_cyclotomic(561)) == 2


def test_format_sparse():
    assert format_sparse(PSI15) == "-1*x^0 -1*x^1 -1*x^2 +1*x^5 +1*x^6 +1*x^7"
    assert format_sparse(P()) == "0"
    assert str(P([0, 3])) == "3*x^1"


def test_degree_budget():
    old = get_degree_budget()
    try:
        set_degree_budget(100)
        with pytest.raises(BudgetError):
            inverse_cyclotomic(561)
        with pytest.raises(BudgetError):
            poly_mul(P.binomial(60), P.binomial(60))
    finally:
        set_degree_budget(old)
    assert inverse_cyclotomic(561).degree == 241


def test_psi_factors_through_f_sweep():
    from invcyclo.search import family_triples

    for t in family_triples(20000):
        psi = inverse_cyclotomic(t.n)
        f = f_polynomial(t)
        assert psi == poly_mul(P.binomial(t.q * t.r), f)
        assert f(1) == t.p and psi(1) == 0


def test_sum_rules():
    for p, q in [(3, 5), (5, 7), (7, 29), (11, 13)]:
        assert cyclotomic(p * q)(1) == 1
        assert inverse_cyclotomic(p * q)(1) == 0

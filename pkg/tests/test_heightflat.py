from __future__ import annotations

import itertools

import pytest

from invcyclo.coeffengine import e_summation
from invcyclo.exceptions import ConsistencyError
from invcyclo.heightflat import h_witnesses, height_formula, is_flat, moree_bound_1996
from invcyclo.numtheory import is_prime, make_family_triple
from invcyclo.polyoracle import f_polynomial, height_of, inverse_cyclotomic
from invcyclo.search import family_members, family_triples

T = make_family_triple


@pytest.mark.parametrize("pqr, expected", [((3, 11, 17), 2), ((5, 11, 31), 1), ((5, 7, 19), 2), ((5, 7, 17), 2)])
def test_height_examples(pqr, expected):
    t = T(*pqr)
    assert height_formula(t) == expected
    assert height_of(inverse_cyclotomic(t.n)) == expected


def test_witnesses_examples():
    rep = h_witnesses(T(3, 11, 17), oracle=True)
    assert (rep.m1, rep.m2, rep.e_m1, rep.e_m2) == (17, 1, 2, -1)
    assert e_summation(T(3, 11, 17), 17) == 2 and e_summation(T(3, 11, 17), 1) == -1
    assert rep.c_formula == rep.h_formula == rep.c_oracle == 2 and rep.verified
    rep = h_witnesses(T(5, 11, 31))
    assert rep.m1 == 0 and rep.e_m1 == 1 and rep.c_oracle is None and rep.verified is None


def test_witnesses_against_f_height():
    for t in family_triples(20000):
        rep = h_witnesses(t)
        pq = t.p * t.q
        assert rep.m1 < pq and rep.m2 < pq
        f = f_polynomial(t)
        assert f[rep.m1] == rep.e_m1 >= 0 >= rep.e_m2 == f[rep.m2]
        assert max(rep.e_m1, -rep.e_m2) == height_of(f) == rep.h_formula


def test_witness_check_detects_corruption(monkeypatch):
    import invcyclo.heightflat as hf

    monkeypatch.setattr(hf, "e_closed", lambda t, m: 0)
    with pytest.raises(ConsistencyError):
        hf.h_witnesses(T(3, 11, 17))
    assert hf.h_witnesses(T(3, 11, 17), verify=False).e_m1 == 0


@pytest.mark.parametrize(
    "pqr, flat, conds",
    [
        ((5, 11, 31), True, (False, False, False, True)),
        ((3, 11, 17), False, (False, False, False, False)),
        ((5, 11, 37), True, (False, False, False, True)),
    ],
)
def test_is_flat_examples(pqr, flat, conds):
    v = is_flat(T(*pqr))
    assert v.flat is flat and v.conditions == conds
    assert (height_of(inverse_cyclotomic(T(*pqr).n)) == 1) is flat


def _primes(lo, hi):
    return [n for n in range(lo, hi) if is_prime(n)]


def test_flatness_identity_and_bounds():
    for p, q in itertools.combinations(_primes(3, 120), 2):
        for r, _, _ in family_members(p, q):
            t = T(p, q, r)
            c = height_formula(t)
            v = is_flat(t)
            assert v.flat == (c == 1)
            assert 1 <= c <= p - 1
            if v.cond_a or v.cond_b:
                assert 2 * r > p * q


@pytest.mark.parametrize("pqr, bound", [((3, 11, 17), 2), ((5, 7, 19), 3)])
def test_moree_bound_examples(pqr, bound):
    t = T(*pqr)
    assert moree_bound_1996(t) == bound
    assert height_formula(t) <= bound


def test_moree_bound_gate():
    seen_absent = False
    for t in family_triples(200000):
        b = moree_bound_1996(t)
        if t.deg_psi >= 2 * t.q * t.r:
            assert b is None
            seen_absent = True
        else:
            assert b is not None and height_formula(t) <= b
    assert seen_absent

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from twobridge_tqft.errors import InvalidInput
from twobridge_tqft.exactalg import UniPoly
from twobridge_tqft.identities import (continuant_exchange, eps_palindromic, iota_squares_to_minus_one,
                                        matrix_identity, riley_squarefree)
from twobridge_tqft.twobridge import (_continuant_tables, continuant, continuant_P, continuant_Q,
                                       coprime_odd_pairs, eps_value, make_params, riley, riley_pair)


@st.composite
def pairs(draw, pmax=61):
    p = draw(st.integers(1, (pmax - 1) // 2)) * 2 + 1
    q = draw(st.sampled_from([q for q, _ in [(q, 0) for q in range(1, p, 2)] if __import__("math").gcd(p, q) == 1]))
    return p, q


def test_params_examples():
    a = make_params(5, 3)
    assert a.eps == (1, -1, -1, 1) and a.ell == 3 and a.ell_prime == 3
    b = make_params(3, 1)
    assert b.eps == (1, 1) and b.ell == 1 and b.ell_prime == 5
    c = make_params(7, 3)
    assert c.ell == 5 and c.ell_prime == 9


@pytest.mark.parametrize("p,q", [(4, 1), (5, 2), (9, 3), (5, 5), (5, 7), (1, 1), (5, 0), (5, -1)])
def test_invalid_pairs(p, q):
    with pytest.raises(InvalidInput):
        make_params(p, q)


def test_continuant_examples():
    assert continuant_P(make_params(5, 3), 4) == UniPoly([1, 0, -1, 0, 1])
    assert continuant_P(make_params(7, 3), 0) == UniPoly([1])
    assert continuant_P(make_params(5, 1), 4) == UniPoly([1, 0, 3, 0, 1])
    assert continuant_Q(make_params(9, 5), 1) == UniPoly([1])
    assert continuant_Q(make_params(5, 3), 3) == UniPoly([1, 0, 1])
    assert continuant_Q(make_params(3, 1), 2) == UniPoly([0, 1])
    assert riley(make_params(3, 1)) == UniPoly([1, 0, 1])
    with pytest.raises(InvalidInput):
        continuant_P(make_params(5, 3), 5)


@pytest.mark.parametrize("p,q", oracles.coprime_odd(13))
def test_continuants_match_determinant_oracle(p, q):
    prm = make_params(p, q)
    for k in range(-1, p):
        assert list(continuant_P(prm, k).coeffs) == oracles.coeffs(oracles.P(p, q, k))
        assert list(continuant_Q(prm, k).coeffs) == oracles.coeffs(oracles.Q(p, q, k))
    assert (prm.ell, prm.ell_prime) == oracles.ell_pair(p, q)


@settings(max_examples=40, deadline=None)
@given(pairs(pmax=201))
def test_packed_pair_matches_table(pq):
    P, _ = _continuant_tables(*pq)
    top, below = riley_pair(make_params(*pq))
    assert top == list(P[-1]) and below == list(P[-2])


@settings(max_examples=60, deadline=None)
@given(pairs(pmax=99))
def test_eps_palindromic(pq):
    assert eps_palindromic(*pq)


@given(st.integers(1, 60).map(lambda v: 2 * v + 1), st.integers(-500, 500))
def test_eps_extension_rules(p, k):
    q = 1
    if k % p:
        assert eps_value(p, q, k + p) == -eps_value(p, q, k)
        assert eps_value(p, q, -k) == -eps_value(p, q, k)


@settings(max_examples=25, deadline=None)
@given(pairs(pmax=41))
def test_matrix_identity(pq):
    assert matrix_identity(*pq)


@settings(max_examples=40, deadline=None)
@given(pairs(pmax=121))
def test_iota_and_squarefree(pq):
    assert iota_squares_to_minus_one(*pq)
    assert riley_squarefree(*pq)


def test_coprime_odd_pairs():
    assert list(coprime_odd_pairs(7)) == [(3, 1), (5, 1), (5, 3), (7, 1), (7, 3), (7, 5)]
    assert list(coprime_odd_pairs(9, include_q1=False))[-1] == (9, 7)


def test_generic_continuant():
    assert continuant([]) == 1
    assert continuant([Fraction(2)]) == 2
    assert continuant([2, 3]) == 7
    assert continuant([2, 3, 4]) == 30  # K(a,b,c) = abc + a + c


@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=6), min_size=12, max_size=12),
       st.integers(1, 4), st.integers(0, 3), st.integers(1, 4))
def test_continuant_exchange_identity(values, i, k, extra):
    j = k + extra
    assert continuant_exchange(values, i, k, j)


def test_continuant_reversal():
    v = [Fraction(1, 3), 2, Fraction(-5, 2), 7]
    assert continuant(v) == continuant(v[::-1])

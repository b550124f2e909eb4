from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from twobridge_tqft.exactalg import UniPoly, format_poly, is_squarefree, poly_gcd

small = st.lists(st.integers(-20, 20), min_size=0, max_size=8)
fracs = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), max_size=7)
X = sp.Symbol("X")


def to_sympy(p: UniPoly):
    return sp.Poly([sp.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)] or [0], X)


def test_construction_and_normalization():
    p = UniPoly([Fraction(1, 2), 0, "3/4", 0, 0])
    assert p.degree == 2
    assert list(p.coeffs) == [Fraction(1, 2), 0, Fraction(3, 4)]
    assert p.den == 4 and p.num == (2, 0, 3)
    assert UniPoly().is_zero() and UniPoly().degree == -1
    assert UniPoly([0, 0]) == UniPoly()


def test_json_roundtrip_and_format():
    p = UniPoly([1, 0, -1, 0, Fraction(1, 2)])
    assert p.to_json() == ["1/1", "0/1", "-1/1", "0/1", "1/2"]
    assert UniPoly.from_json(p.to_json()) == p
    assert format_poly(UniPoly([1, 0, -1, 0, 1]), "X") == "X^4 - X^2 + 1"


@given(fracs, fracs, fracs)
def test_ring_axioms(a, b, c):
    a, b, c = UniPoly(a), UniPoly(b), UniPoly(c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == UniPoly()


@given(fracs, fracs.filter(lambda v: any(v)))
def test_divmod_identity(a, b):
    a, b = UniPoly(a), UniPoly(b)
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_gcd_examples():
    assert poly_gcd(UniPoly([-1, 0, 1]), UniPoly([1, -2, 1])) == UniPoly([-1, 1])
    assert poly_gcd(UniPoly([2, 4]), UniPoly()) == UniPoly([Fraction(1, 2), 1])
    h1 = UniPoly([12, 23, 16, 4])
    assert poly_gcd(h1, h1.derivative()) == UniPoly([1])


@settings(max_examples=60)
@given(small, small, small)
def test_gcd_divides_and_is_monic(a, b, c):
    a, b, c = UniPoly(a), UniPoly(b), UniPoly(c)
    x, y = a * c, b * c
    g = poly_gcd(x, y)
    if x.is_zero() and y.is_zero():
        assert g.is_zero()
        return
    assert g.leading_coefficient() == 1
    assert (x % g).is_zero() and (y % g).is_zero()
    want = sp.gcd(to_sympy(x), to_sympy(y)).monic()
    assert to_sympy(g).as_expr() == want.as_expr()


def test_squarefree_examples():
    assert is_squarefree(UniPoly([1, 0, 1]))
    assert not is_squarefree(UniPoly([1, -2, 1]))
    assert is_squarefree(UniPoly([1, 0, -1, 0, 1]))
    with pytest.raises(ValueError):
        is_squarefree(UniPoly())


@settings(max_examples=40)
@given(small.filter(lambda v: any(v)))
def test_squarefree_matches_discriminant_oracle(v):
    p = UniPoly(v)
    if p.degree < 1:
        return
    sq = to_sympy(p)
    assert is_squarefree(p) == (sp.discriminant(sq) != 0)


def test_evaluation_and_derivative():
    p = UniPoly([1, 2, 3])
    assert p(2) == 17
    assert p.derivative() == UniPoly([2, 6])
    assert p ** 3 == p * p * p

import pytest
from hypothesis import given, strategies as st

from twobridge_tqft.exactalg import LaurentBiPoly, laurent_mul, newton_polygon

U = LaurentBiPoly.monomial(1, 0)
Ui = LaurentBiPoly.monomial(-1, 0)
V = LaurentBiPoly.monomial(0, 1)
Vi = LaurentBiPoly.monomial(0, -1)

terms = st.dictionaries(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
    max_size=6,
).map(LaurentBiPoly)


def test_mul_examples():
    assert laurent_mul(U, Ui) == LaurentBiPoly.constant(1)
    assert laurent_mul(V - Vi, V + Vi) == V * V - Vi * Vi
    q = LaurentBiPoly({(2, 1): 1, (-2, -1): -1})
    assert q * q == LaurentBiPoly({(4, 2): 1, (0, 0): -2, (-4, -2): 1})


@given(terms, terms, terms)
def test_ring_laws(a, b, c):
    assert laurent_mul(a, b) == laurent_mul(b, a)
    assert laurent_mul(laurent_mul(a, b), c) == laurent_mul(a, laurent_mul(b, c))
    assert laurent_mul(a, b + c) == laurent_mul(a, b) + laurent_mul(a, c)


def test_json_sorted_quadruples():
    p = LaurentBiPoly({(2, 1): (1, 0), (-2, -1): (-1, 0), (0, 3): (0, 2)})
    assert p.to_json() == [[-2, -1, -1, 0], [0, 3, 0, 2], [2, 1, 1, 0]]
    assert LaurentBiPoly.from_json(p.to_json()) == p


def test_newton_polygon_examples():
    assert newton_polygon(LaurentBiPoly({(2, 1): 1, (-2, -1): -1})) == [(-2, -1), (2, 1)]
    assert newton_polygon(LaurentBiPoly.constant(1)) == [(0, 0)]
    with pytest.raises(ValueError):
        newton_polygon(LaurentBiPoly())


def test_newton_polygon_drops_collinear_points():
    sq = LaurentBiPoly({(0, 0): 1, (1, 0): 1, (2, 0): 1, (2, 2): 1, (0, 2): 1, (1, 1): 1})
    assert newton_polygon(sq) == [(0, 0), (2, 0), (2, 2), (0, 2)]
    line = LaurentBiPoly({(0, 0): 1, (1, 1): 1, (3, 3): 1})
    assert newton_polygon(line) == [(0, 0), (3, 3)]


def test_substitutions():
    q = LaurentBiPoly({(2, 1): 1, (-2, -1): -1})
    assert q.substitute(u_sign=-1) == q
    assert q.substitute(v_sign=-1) == -q
    assert q.substitute(invert=True) == -q
    assert q.at_u(1) == V - Vi
    assert q.specialize(3) == LaurentBiPoly({(5, 0): 1, (-5, 0): -1})


def test_homogeneous_part_of_exponential():
    # U V - 1 at U = e^u, V = e^v: order 1 is u + v, order 2 is (u+v)^2/2
    p = U * V - LaurentBiPoly.constant(1)
    assert p.homogeneous_part(0) == {}
    assert p.homogeneous_part(1) == {(1, 0): (1, 0), (0, 1): (1, 0)}
    assert p.homogeneous_part(2) == {(2, 0): (1, 0), (1, 1): (2, 0), (0, 2): (1, 0)}

"""Sparse Laurent polynomials in U, V with Gaussian-integer coefficients."""
from math import comb


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


_IPOW = ((1, 0), (0, 1), (-1, 0), (0, -1))


class LaurentBiPoly:
    """Finite map (i, j) -> (re, im) standing for sum (re + i*im) U^i V^j."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            if isinstance(c, int):
                c = (c, 0)
            if c[0] or c[1]:
                clean[(int(key[0]), int(key[1]))] = (int(c[0]), int(c[1]))
        self.terms = clean

    @classmethod
    def monomial(cls, i, j, coeff=(1, 0)):
        return cls({(i, j): coeff})

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    # ---- ring operations
    def __add__(self, o):
        out = dict(self.terms)
        for k, c in o.terms.items():
            a = out.get(k, (0, 0))
            out[k] = (a[0] + c[0], a[1] + c[1])
        return LaurentBiPoly(out)

    def __neg__(self):
        return LaurentBiPoly({k: (-c[0], -c[1]) for k, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, int):
            return LaurentBiPoly({k: (c[0] * o, c[1] * o) for k, c in self.terms.items()})
        if isinstance(o, tuple):
            return LaurentBiPoly({k: _gmul(c, o) for k, c in self.terms.items()})
        return laurent_mul(self, o)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = LaurentBiPoly.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def times_i(self, k):
        return self * _IPOW[k % 4]

    def conj(self):
        return LaurentBiPoly({k: (c[0], -c[1]) for k, c in self.terms.items()})

    # ---- substitutions
    def substitute(self, u_sign=1, v_sign=1, invert=False):
        """Evaluate at (u_sign*U^s, v_sign*V^s) with s = -1 if invert else 1."""
        s = -1 if invert else 1
        out = {}
        for (i, j), c in self.terms.items():
            f = (u_sign ** (i % 2)) * (v_sign ** (j % 2))
            out[(s * i, s * j)] = (f * c[0], f * c[1])
        return LaurentBiPoly(out)

    def at_u(self, u):
        """Set U = u (u = +1 or -1); result is a polynomial in V alone."""
        out = {}
        for (i, j), c in self.terms.items():
            f = u ** (i % 2)
            a = out.get((0, j), (0, 0))
            out[(0, j)] = (a[0] + f * c[0], a[1] + f * c[1])
        return LaurentBiPoly(out)

    def specialize(self, n):
        """U = t, V = t^n; the result is stored with t in the U slot."""
        out = {}
        for (i, j), c in self.terms.items():
            k = (i + n * j, 0)
            a = out.get(k, (0, 0))
            out[k] = (a[0] + c[0], a[1] + c[1])
        return LaurentBiPoly(out)

    def v_slice(self, j):
        """Coefficient of V^j, a Laurent polynomial in U."""
        return LaurentBiPoly({(a, 0): c for (a, b), c in self.terms.items() if b == j})

    def v_range(self):
        js = [j for _, j in self.terms]
        return min(js), max(js)

    def shift(self, di, dj):
        return LaurentBiPoly({(i + di, j + dj): c for (i, j), c in self.terms.items()})

    def is_real(self):
        return all(c[1] == 0 for c in self.terms.values())

    def is_zero(self):
        return not self.terms

    def homogeneous_part(self, order):
        """Degree-``order`` part of f(e^u, e^v), as {(a, b): (re, im) / order!}.

        Returns integer numerators keyed by (power of u, power of v); the
        common denominator is order!.
        """
        out = {}
        for (i, j), c in self.terms.items():
            for a in range(order + 1):
                w = comb(order, a) * i ** a * j ** (order - a)
                if w:
                    prev = out.get((a, order - a), (0, 0))
                    out[(a, order - a)] = (prev[0] + w * c[0], prev[1] + w * c[1])
        return {k: v for k, v in out.items() if v != (0, 0)}

    # ---- comparison and serialization
    def __eq__(self, o):
        return isinstance(o, LaurentBiPoly) and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"LaurentBiPoly({self.to_json()})"

    def to_json(self):
        return [[i, j, c[0], c[1]] for (i, j), c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, rows):
        return cls({(r[0], r[1]): (r[2], r[3]) for r in rows})


def laurent_mul(a: LaurentBiPoly, b: LaurentBiPoly) -> LaurentBiPoly:
    out = {}
    for (i1, j1), c1 in a.terms.items():
        for (i2, j2), c2 in b.terms.items():
            k = (i1 + i2, j1 + j2)
            pr = _gmul(c1, c2)
            prev = out.get(k)
            out[k] = pr if prev is None else (prev[0] + pr[0], prev[1] + pr[1])
    return LaurentBiPoly(out)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(p: LaurentBiPoly):
    """Vertices of the convex hull of the support.

    Counter-clockwise from the lexicographically smallest exponent pair;
    collinear support points are dropped.  A segment gives its two ends,
    a single monomial gives one point.
    """
    pts = sorted(p.terms)
    if not pts:
        raise ValueError("the zero polynomial has empty support")
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for q in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], q) <= 0:
            lower.pop()
        lower.append(q)
    for q in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], q) <= 0:
            upper.pop()
        upper.append(q)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull

"""Quotient rings Q[x]/(m) with eager reduction, inverses and traces."""
from fractions import Fraction

from . import _intpoly as ip
from .poly import UniPoly, _as_fraction
from ..errors import NotInvertible

# Barrett reduction pays off once the modulus is this large
_BARRETT_MIN_DEGREE = 24


class QuotientRing:
    """Q[x]/(modulus).  Immutable; elements hold a reference to their ring."""

    def __init__(self, modulus: UniPoly):
        if modulus.degree < 1:
            raise ValueError("quotient modulus must have degree >= 1")
        self.modulus = modulus
        self.n = modulus.degree
        self._m = modulus.primitive_part()
        if self._m[-1] < 0:
            self._m = [-c for c in self._m]
        self._lc = self._m[-1]
        self._unit = self._lc == 1
        self._binv = None

    @property
    def degree(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and (other is self or other.modulus == self.modulus)

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"QuotientRing({self.modulus!r})"

    # ---- reduction of integer numerators
    def _barrett(self):
        if self._binv is None:
            self._binv = ip.series_inverse(self._m[::-1], self.n)
        return self._binv

    def _reduce_monic(self, a):
        n, m = self.n, self._m
        if len(a) <= n:
            return a
        if n >= _BARRETT_MIN_DEGREE and len(a) - n > 4:
            g = self._barrett()
            while len(a) > n:
                # reduce the top (at most n) quotient digits in one shot
                top = min(len(a) - n, n)
                hi = a[len(a) - top - n:]
                k = len(hi) - n
                q = ip.mul(hi[::-1][:k], g[:k])[:k]
                q = (q + [0] * (k - len(q)))[::-1]
                qm = ip.mul(q, m)
                base = len(a) - len(hi)
                low = list(a[:base]) + [hi[i] - (qm[i] if i < len(qm) else 0) for i in range(n)]
                a = ip.trim(low)
            return a
        a = list(a)
        for i in range(len(a) - 1, n - 1, -1):
            c = a[i]
            if c:
                sh = i - n
                for j in range(n):
                    a[sh + j] -= c * m[j]
        del a[n:]
        return ip.trim(a)

    def _reduce(self, num, den):
        """Reduce numerator/den; returns (num, den) with len(num) <= n."""
        if len(num) <= self.n:
            return list(num), den
        if self._unit:
            return self._reduce_monic(list(num)), den
        steps = len(num) - self.n
        r = ip.prem(list(num), self._m)
        return r, den * self._lc ** steps

    def reduce(self, p: UniPoly) -> UniPoly:
        num, den = self._reduce(p.num, p.den)
        return UniPoly.from_ints(num, den)

    # ---- constructors
    def elem(self, value) -> "QuotientElem":
        if isinstance(value, QuotientElem):
            if value.ring != self:
                raise ValueError("element belongs to a different ring")
            return value
        if isinstance(value, (int, Fraction, str)):
            value = UniPoly.constant(value)
        elif not isinstance(value, UniPoly):
            value = UniPoly(value)
        return QuotientElem(self, self.reduce(value), _reduced=True)

    def _wrap(self, num, den):
        return QuotientElem(self, UniPoly.from_ints(num, den), _reduced=True)

    def one(self):
        return self._wrap([1], 1)

    def zero(self):
        return self._wrap([], 1)

    def gen(self):
        return self.elem(UniPoly.x())

    def compose(self, poly: UniPoly, y: "QuotientElem") -> "QuotientElem":
        """poly(y) by Horner's rule, reducing after every step."""
        acc = self.zero()
        for c in reversed(poly.coeffs):
            acc = acc * y + c
        return acc


class QuotientElem:
    """Residue class with its unique reduced representative ``rep``."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: QuotientRing, rep: UniPoly, _reduced=False):
        self.ring = ring
        self.rep = rep if _reduced else ring.reduce(rep)

    def _other(self, o):
        if isinstance(o, QuotientElem):
            if o.ring is not self.ring and o.ring != self.ring:
                raise ValueError("elements of different rings")
            return o
        if isinstance(o, (int, Fraction)):
            return self.ring._wrap([Fraction(o).numerator], Fraction(o).denominator)
        return None

    def __add__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return QuotientElem(self.ring, self.rep + o.rep, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return QuotientElem(self.ring, -self.rep, _reduced=True)

    def __sub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return QuotientElem(self.ring, self.rep - o.rep, _reduced=True)

    def __rsub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return QuotientElem(self.ring, self.rep * o, _reduced=True)
        o = self._other(o)
        if o is None:
            return NotImplemented
        a, b = self.rep, o.rep
        num, den = self.ring._reduce(ip.mul(a.num, b.num), a.den * b.den)
        return self.ring._wrap(num, den)

    __rmul__ = __mul__

    def square(self):
        num, den = self.ring._reduce(ip.sqr(self.rep.num), self.rep.den ** 2)
        return self.ring._wrap(num, den)

    def __truediv__(self, o):
        if isinstance(o, (int, Fraction)):
            return self * (1 / _as_fraction(o))
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self * quotient_invert(o)

    def __rtruediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o * quotient_invert(self)

    def __pow__(self, e):
        if e < 0:
            return quotient_invert(self) ** (-e)
        out, base = self.ring.one(), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base.square()
        return out

    def inverse(self):
        return quotient_invert(self)

    def trace(self):
        return quotient_trace(self)

    def is_zero(self):
        return self.rep.is_zero()

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            o = self._other(o)
        if not isinstance(o, QuotientElem):
            return NotImplemented
        return self.ring == o.ring and self.rep == o.rep

    def __hash__(self):
        return hash(self.rep)

    def __repr__(self):
        from .poly import format_poly
        return f"QuotientElem({format_poly(self.rep)})"

    def to_json(self):
        return self.rep.to_json()


def quotient_invert(e: QuotientElem) -> QuotientElem:
    """Inverse in the quotient ring; raises NotInvertible with the gcd."""
    ring = e.ring
    if e.is_zero():
        raise NotInvertible(ring.modulus.monic())
    s, c = ip.inverse_mod(list(e.rep.num), ring._m)
    if c == 0:
        raise NotInvertible(UniPoly.from_ints(s).monic())
    # s*num = c (mod m) and e = num/den, so 1/e = den*s/c
    num, den = ring._reduce(ip.scale(s, e.rep.den), c)
    return ring._wrap(num, den)


def quotient_trace(e: QuotientElem) -> Fraction:
    """Trace of multiplication by e, accumulated row by row over x^k * e."""
    ring = e.ring
    n, m, lc = ring.n, ring._m, ring._lc
    if ring._unit:
        v = list(e.rep.num) + [0] * (n - len(e.rep.num))
        total = 0
        for k in range(n):
            total += v[k]
            # v <- x*v mod m
            top = v[-1]
            v = [0] + v[:-1]
            if top:
                for j in range(n):
                    v[j] -= top * m[j]
        return Fraction(total, e.rep.den)
    mf = [Fraction(c, lc) for c in m]
    v = list(e.rep.coeffs) + [Fraction(0)] * (n - len(e.rep))
    total = Fraction(0)
    for k in range(n):
        total += v[k]
        top = v[-1]
        v = [Fraction(0)] + v[:-1]
        if top:
            for j in range(n):
                v[j] -= top * mf[j]
    return total

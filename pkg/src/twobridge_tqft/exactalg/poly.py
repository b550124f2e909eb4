"""Dense univariate polynomials over Q."""
from fractions import Fraction
from math import gcd, lcm

from . import _intpoly as ip
from ._modcert import coprime_certificate

Rational = Fraction

# degree reported for the zero polynomial
ZERO_DEGREE = -1


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c.strip())
    raise TypeError(f"cannot use {type(c).__name__} as a rational coefficient")


class UniPoly:
    """Polynomial with rational coefficients, ascending order.

    Stored as an integer numerator list over one positive common denominator,
    with the content of the numerator coprime to the denominator.  ``coeffs``
    exposes the coefficients as Fractions.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, coeffs=()):
        fr = [_as_fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = lcm(den, c.denominator)
        num = [c.numerator * (den // c.denominator) for c in fr]
        self._set(num, den)

    def _set(self, num, den):
        ip.trim(num)
        if not num:
            self._num, self._den = (), 1
            return
        if den != 1:
            g = gcd(ip.content(num), den)
            if g != 1:
                num = [c // g for c in num]
                den //= g
        self._num, self._den = tuple(num), den

    @classmethod
    def from_ints(cls, num, den=1):
        """Build from an integer numerator list and a nonzero denominator."""
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = [-c for c in num], -den
        obj = cls.__new__(cls)
        obj._set(list(num), den)
        return obj

    @classmethod
    def x(cls):
        return cls.from_ints([0, 1])

    @classmethod
    def constant(cls, c):
        c = _as_fraction(c)
        return cls.from_ints([c.numerator], c.denominator)

    # ---- accessors
    @property
    def num(self):
        return self._num

    @property
    def den(self):
        return self._den

    @property
    def coeffs(self):
        d = self._den
        return tuple(Fraction(c, d) for c in self._num)

    @property
    def degree(self):
        return len(self._num) - 1

    def is_zero(self):
        return not self._num

    def is_integral(self):
        return self._den == 1

    def leading_coefficient(self):
        if not self._num:
            return Fraction(0)
        return Fraction(self._num[-1], self._den)

    def __getitem__(self, k):
        if 0 <= k < len(self._num):
            return Fraction(self._num[k], self._den)
        return Fraction(0)

    def __len__(self):
        return len(self._num)

    # ---- arithmetic
    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = lcm(self._den, o._den)
        a = ip.scale(list(self._num), d // self._den)
        b = ip.scale(list(o._num), d // o._den)
        return UniPoly.from_ints(ip.add(a, b), d)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly.from_ints([-c for c in self._num], self._den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return UniPoly.from_ints(ip.scale(list(self._num), c.numerator), self._den * c.denominator)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return UniPoly.from_ints(ip.mul(self._num, other._num), self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return self * (1 / c)
        return NotImplemented

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out, base = UniPoly.constant(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other):
        """Quotient and remainder over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        n, m = self.degree, other.degree
        if n < m:
            return UniPoly(), self
        lc = other.leading_coefficient()
        rem = list(self.coeffs)
        b = other.coeffs
        quo = [Fraction(0)] * (n - m + 1)
        for i in range(n - m, -1, -1):
            c = rem[i + m] / lc
            quo[i] = c
            if c:
                for j in range(m + 1):
                    rem[i + j] -= c * b[j]
        return UniPoly(quo), UniPoly(rem[:m])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def derivative(self):
        return UniPoly.from_ints([k * c for k, c in enumerate(self._num)][1:], self._den)

    def monic(self):
        if not self._num:
            raise ZeroDivisionError("zero polynomial has no monic form")
        return self * (1 / self.leading_coefficient())

    def primitive_part(self):
        """Integer coefficient list with content 1 and the same roots."""
        g = ip.content(self._num)
        return [c // g for c in self._num]

    def __call__(self, t):
        acc = 0 * t if not isinstance(t, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    # ---- comparison and display
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    def __repr__(self):
        return f"UniPoly({format_poly(self)})"

    def to_json(self):
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, items):
        return cls(items)


def format_poly(p, var="x"):
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return " ".join([head] + [f"{s} {b}" for s, b in parts[1:]])


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q (zero only when both inputs are zero)."""
    if a.is_zero() and b.is_zero():
        return UniPoly()
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return UniPoly.constant(1)
    pa, pb = a.primitive_part(), b.primitive_part()
    if coprime_certificate(pa, pb):
        return UniPoly.constant(1)
    return UniPoly.from_ints(ip.primitive_prs_gcd(pa, pb)).monic()


def is_squarefree(p: UniPoly) -> bool:
    if p.is_zero():
        raise ValueError("the zero polynomial has no squarefree decomposition")
    if p.degree <= 1:
        return True
    return poly_gcd(p, p.derivative()).degree == 0

"""The Frobenius algebra V = Q[x]/(P_{p-1}) of a two-bridge knot.

V carries the basis P_0, ..., P_{p-2} (reduced continuants), the linear form
``epsilon`` picking out the P_0 coordinate, the pairing eta(a, b) =
epsilon(ab), and the canonical element Omega.  Signatures of the associated
TQFT are traces of powers of Omega.
"""
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import InvalidInput
from .exactalg import QuotientElem, QuotientRing, UniPoly, quotient_invert, quotient_trace
from .exactalg import _intpoly as ip
from .twobridge import TwoBridgeParams, _continuant_tables, make_params


class ParabolicAlgebra:
    """Immutable view of V for one pair (p, q); derived data is computed lazily."""

    def __init__(self, params: TwoBridgeParams, omega: UniPoly = None):
        self.params = params
        self.p = params.p
        P, Q = _continuant_tables(params.p, params.q)
        self._Ptab, self._Qtab = P, Q
        self.ring = QuotientRing(UniPoly.from_ints(list(P[-1])))
        self.x = self.ring.gen()
        self._ext_P = {}
        self._ext_Q = {}
        if omega is not None:
            self.__dict__["omega"] = self.ring.elem(omega)

    @property
    def dim(self):
        return self.p - 1

    @property
    def riley(self) -> UniPoly:
        return self.ring.modulus

    def sign(self, k):
        return self.params.sign(k)

    # ---- continuants at arbitrary integer index, inside V
    def _extended(self, k, table, cache):
        p = self.p
        if -1 <= k <= p - 1:
            if k == p - 1 and table is self._Ptab:
                return self.ring.zero()
            return self.ring.elem(UniPoly.from_ints(list(table[k + 1])))
        if k in cache:
            return cache[k]
        x = self.x
        # resume from the furthest index already cached on this side
        if k >= p:
            j = max([i for i in cache if i > 0] + [p - 1])
            hi, lo = self._extended(j, table, cache), self._extended(j - 1, table, cache)
            while j < k:
                j += 1
                hi, lo = x * hi * self.sign(j) + lo, hi
                cache[j] = hi
        else:
            # P_{j-2} = P_j - eps_j x P_{j-1}
            j = min([i for i in cache if i < 0] + [-1])
            hi, lo = self._extended(j + 1, table, cache), self._extended(j, table, cache)
            while j > k:
                j -= 1
                hi, lo = lo, hi - x * lo * self.sign(j + 2)
                cache[j] = lo
        return cache[k]

    def P(self, k: int) -> QuotientElem:
        """Image of P_k in V, for any integer k."""
        return self._extended(k, self._Ptab, self._ext_P)

    def Q(self, k: int) -> QuotientElem:
        return self._extended(k, self._Qtab, self._ext_Q)

    @cached_property
    def pbasis(self):
        return tuple(self.P(k) for k in range(self.p - 1))

    @cached_property
    def iota(self) -> QuotientElem:
        return self.P(self.p - 2)

    @cached_property
    def omega(self) -> QuotientElem:
        # sum of unreduced squares, reduced once
        acc = []
        for k in range(self.p - 1):
            sq = ip.sqr(list(self._Ptab[k + 1]))
            if (-1) ** k * self.sign(k + 1) < 0:
                sq = [-c for c in sq]
            acc = ip.add(acc, sq)
        return self.ring.elem(UniPoly.from_ints(acc))

    @cached_property
    def omega_plus(self) -> QuotientElem:
        acc = []
        for k in range(1, (self.p - 1) // 2 + 1):
            sq = ip.sqr(list(self._Ptab[2 * k]))
            if self.sign(2 * k) > 0:
                sq = [-c for c in sq]
            acc = ip.add(acc, sq)
        return self.ring.elem(UniPoly.from_ints(acc))

    def eta_diagonal(self):
        """eta(P_k, P_k) = (-1)^k eps_{k+1} for k = 0 .. p-2."""
        return [(-1) ** k * self.sign(k + 1) for k in range(self.p - 1)]

    def to_pbasis(self, e: QuotientElem):
        """Coordinates of e in the basis P_0 .. P_{p-2} (triangular solve)."""
        rem = list(e.rep.num) + [0] * (self.dim - len(e.rep.num))
        den = e.rep.den
        coords = [0] * self.dim
        for k in range(self.dim - 1, -1, -1):
            c = rem[k]
            if not c:
                continue
            pk = self._Ptab[k + 1]
            # leading coefficient of P_k is +-1
            c = c * pk[-1]
            coords[k] = c
            for i, v in enumerate(pk):
                rem[i] -= c * v
        return [Fraction(c, den) for c in coords]

    def from_pbasis(self, coords) -> QuotientElem:
        acc = self.ring.zero()
        for k, c in enumerate(coords):
            if c:
                acc = acc + self.pbasis[k] * c
        return acc


_disk_cache = None


def use_disk_cache(cache) -> None:
    """Route build_algebra through an ArtifactCache (or None to disable)."""
    global _disk_cache
    _disk_cache = cache
    build_algebra.cache_clear()


@lru_cache(maxsize=16)
def build_algebra(p: int, q: int) -> ParabolicAlgebra:
    if _disk_cache is not None:
        return _disk_cache.algebra(p, q)
    return ParabolicAlgebra(make_params(p, q))


def epsilon_form(V: ParabolicAlgebra, e: QuotientElem) -> Fraction:
    """The P_0 coordinate of e."""
    rem = list(e.rep.num) + [0] * (V.dim - len(e.rep.num))
    for k in range(V.dim - 1, 0, -1):
        c = rem[k]
        if c:
            pk = V._Ptab[k + 1]
            c *= pk[-1]
            for i, v in enumerate(pk):
                rem[i] -= c * v
    return Fraction(rem[0], e.rep.den)


def eta(V: ParabolicAlgebra, a: QuotientElem, b: QuotientElem) -> Fraction:
    return epsilon_form(V, a * b)


def epsilon_via_trace(V: ParabolicAlgebra, e: QuotientElem) -> Fraction:
    """Tr(Omega^{-1} e); agrees with epsilon_form on a semisimple V."""
    return quotient_trace(quotient_invert(V.omega) * e)


def _check_genus(g, least):
    if not isinstance(g, int) or g < least:
        raise InvalidInput(f"genus must be an integer >= {least}, got {g}")


def signature(p: int, q: int, g: int) -> int:
    """Tr_{V/Q}(Omega^{g-1})."""
    _check_genus(g, 1)
    V = build_algebra(p, q)
    t = quotient_trace(V.omega ** (g - 1))
    if t.denominator != 1:
        raise ArithmeticError(f"non-integral signature {t} for (p,q,g)=({p},{q},{g})")
    return int(t)


def colored_signature(p: int, q: int, g: int, colors=()) -> Fraction:
    """epsilon(Omega^g * P_{c_1} * ... * P_{c_n})."""
    _check_genus(g, 0)
    V = build_algebra(p, q)
    for c in colors:
        if not (isinstance(c, int) and 0 <= c <= p - 2):
            raise InvalidInput(f"color {c} outside 0..{p - 2}")
    e = V.omega ** g
    for c in colors:
        e = e * V.P(c)
    return epsilon_form(V, e)

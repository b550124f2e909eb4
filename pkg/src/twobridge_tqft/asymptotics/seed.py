"""Seed matrices M = (a, b; c, d), their H-polynomials and the limit algebra W_M."""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..errors import InvalidInput, VerificationFailure
from ..exactalg import GaussianPoly, QuotientElem, QuotientRing, UniPoly, is_squarefree, poly_gcd, quotient_trace


@dataclass(frozen=True)
class SeedMatrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        if a * d - b * c != 1:
            raise InvalidInput(f"det({a},{b};{c},{d}) = {a * d - b * c}, expected 1")
        if a % 2 == 0 or d % 2 == 0 or b % 2 or c % 2:
            raise InvalidInput("need a, d odd and b, c even")
        if not (0 <= b < d) or c <= 0:
            raise InvalidInput("need 0 <= b < d and c > 0")

    def q_n(self, n):
        return self.a + self.b * n

    def p_n(self, n):
        return self.c + self.d * n

    def admissible(self, n):
        """n odd, positive, with 0 < q_n < p_n and d < p_n."""
        return n > 0 and n % 2 == 1 and 0 < self.q_n(n) < self.p_n(n) and self.d < self.p_n(n)

    def first_admissible(self, start=1):
        n = start | 1
        while not self.admissible(n):
            n += 2
        return n

    def astuple(self):
        return (self.a, self.b, self.c, self.d)


def minimal_seed(b: int, d: int):
    """The seed with given (b, d), smallest even c > 0 and a = (1 + bc)/d.

    Returns None when no such seed exists (b, d not coprime, or b = 0 < d - 1).
    """
    if d % 2 == 0 or b % 2 or not (0 <= b < d) or gcd(b, d) != 1:
        return None
    if b == 0:
        return SeedMatrix(1, 0, 2, 1) if d == 1 else None
    c0 = (-pow(b, -1, d)) % d or d
    c = c0 if c0 % 2 == 0 else c0 + d
    return SeedMatrix((1 + b * c) // d, b, c, d)


def enumerate_seeds(dmax: int):
    """Minimal seeds for all (b, d) with 0 <= b < d < dmax, ordered by (d, b)."""
    for d in range(1, dmax, 2):
        for b in range(0, d, 2):
            M = minimal_seed(b, d)
            if M is not None:
                yield M


def alpha_sequence(M: SeedMatrix):
    c, d = M.c, M.d
    alpha = [(r * c) // d - ((r - 1) * c) // d for r in range(1, d + 1)]
    alpha[-1] -= 1
    return alpha


def kappa(alpha, upto=None):
    """Alternating sum alpha_1 - alpha_2 + ... over the first ``upto`` terms."""
    upto = len(alpha) if upto is None else upto
    return sum(a if r % 2 == 0 else -a for r, a in enumerate(alpha[:upto]))


def _n_matrix(alpha, conjugate):
    x = UniPoly.x()
    diag1 = GaussianPoly(x + (alpha + 1))
    off = GaussianPoly(im=-(x + alpha))  # i^{-1}(alpha + x)
    diag2 = GaussianPoly(-x + (1 - alpha))
    m = [[diag1, off], [off, diag2]]
    m = [[e.times_i(alpha) for e in row] for row in m]
    if conjugate:
        m = [[e.conj() for e in row] for row in m]
    return m


def _apply(m, v):
    return [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]


def _product_on_e1(alpha, count):
    one, zero = GaussianPoly(UniPoly.constant(1)), GaussianPoly()
    v = [one, zero]
    for r in range(count, 0, -1):
        v = _apply(_n_matrix(alpha[r - 1], conjugate=(r % 2 == 0)), v)
    return v


@dataclass(frozen=True)
class HTriple:
    h1: UniPoly
    h2: UniPoly
    h3: UniPoly


def h_polynomials(M: SeedMatrix) -> HTriple:
    """Raw output of the N(alpha) product recipe (no sign normalization)."""
    alpha = alpha_sequence(M)
    top, bottom = _product_on_e1(alpha, M.d)
    h1 = top.times_i(1)  # top = -i H1
    head = _product_on_e1(alpha, M.b)[0]
    for name, g in (("H1", h1), ("H2", bottom), ("H3", head)):
        if not g.is_real():
            raise VerificationFailure(f"{name} has a nonzero imaginary part for {M}", g.im)
    return HTriple(h1.re, bottom.re, head.re)


def condition_H(M: SeedMatrix) -> bool:
    h = h_polynomials(M)
    return is_squarefree(h.h1) and poly_gcd(h.h1, h.h3).degree == 0


# The recipe returns -H1 relative to the normalization in which
# Q_M(e^u, e^v) starts with +2^d u^d H1(v/u); only that sign makes the
# limit traces agree with the leading coefficients of the signatures.
H1_SIGN = -1


@dataclass
class LimitAlgebra:
    seed: SeedMatrix
    h: HTriple
    ring: QuotientRing
    omega_w: QuotientElem

    def trace_power(self, k: int) -> Fraction:
        return quotient_trace(self.omega_w ** k)


def normalized_h1(M: SeedMatrix) -> UniPoly:
    return h_polynomials(M).h1 * H1_SIGN


def build_limit_algebra(M: SeedMatrix) -> LimitAlgebra:
    h = h_polynomials(M)
    h1 = h.h1 * H1_SIGN
    if not (is_squarefree(h1) and poly_gcd(h1, h.h3).degree == 0):
        raise VerificationFailure(f"condition (H) fails for {M}")
    ring = QuotientRing(h1)
    omega = -ring.elem(h1.derivative()) * ring.elem(h.h2) / ring.elem(h.h3).square()
    return LimitAlgebra(M, h, ring, omega)


def limit_trace(M: SeedMatrix, g: int) -> Fraction:
    if g < 2:
        raise InvalidInput("limit traces are defined for g >= 2")
    return build_limit_algebra(M).trace_power(g - 1)

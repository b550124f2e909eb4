"""Signature sequences along a seed, polynomiality, Verlinde dimensions, ratios."""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath

from ..errors import InvalidInput, PrecisionExhausted
from ..exactalg import quotient_invert, quotient_trace
from ..frobenius import build_algebra, signature
from .seed import SeedMatrix, limit_trace


def verlinde_dim(p: int, g: int) -> int:
    """(p/2)^(g-1) * sum_{k=1}^{p-1} sin(k pi/p)^(2-2g), rounded with a certificate.

    The float sum is evaluated at a working precision sized to the result and
    accepted only if it lies within 1e-6 of an integer and a second
    evaluation at higher precision rounds to the same integer.
    """
    if p < 2 or g < 0:
        raise InvalidInput(f"verlinde_dim needs p >= 2 and g >= 0, got ({p}, {g})")
    if g == 1:
        return p - 1
    digits = int(abs(g - 1) * 3 * mpmath.log10(p)) + 20

    def evaluate(dps):
        with mpmath.workdps(dps):
            s = mpmath.fsum(mpmath.sin(k * mpmath.pi / p) ** (2 - 2 * g) for k in range(1, p))
            return (mpmath.mpf(p) / 2) ** (g - 1) * s

    for _ in range(6):
        v1, v2 = evaluate(digits), evaluate(digits + 20)
        n1, n2 = int(mpmath.nint(v1)), int(mpmath.nint(v2))
        with mpmath.workdps(digits + 20):
            if n1 == n2 and abs(v2 - n2) < mpmath.mpf("1e-6"):
                return n2
        digits *= 2
    raise PrecisionExhausted(f"verlinde_dim({p}, {g}) did not stabilize")


def _check_n(M, n):
    if not M.admissible(n):
        raise InvalidInput(f"n={n} is not admissible for {M.astuple()}")


def signature_direct(M: SeedMatrix, g: int, n: int) -> int:
    _check_n(M, n)
    return signature(M.p_n(n), M.q_n(n), g)


def signature_reciprocal(M: SeedMatrix, g: int, n: int) -> int:
    """Trace of (Omega_n P_{q_n-1}^{-2})^(g-1) in the algebra of (p_n, d)."""
    _check_n(M, n)
    V = build_algebra(M.p_n(n), M.d)
    f = V.P(M.q_n(n) - 1)
    t = quotient_trace((V.omega * quotient_invert(f.square())) ** (g - 1))
    if t.denominator != 1:
        raise ArithmeticError(f"non-integral signature at n={n}")
    return int(t)


def signature_sequence(M: SeedMatrix, g: int, n_list, route="direct"):
    fn = {"direct": signature_direct, "reciprocal": signature_reciprocal}[route]
    return [fn(M, g, n) for n in n_list]


def finite_differences(values, order):
    v = list(values)
    for _ in range(order):
        v = [b - a for a, b in zip(v, v[1:])]
    return v


def finite_difference_degree(values):
    """Smallest k whose (k+1)-th differences all vanish, or None if none do."""
    for k in range(len(values) - 1):
        if all(x == 0 for x in finite_differences(values, k + 1)):
            return k
    return None


def polynomiality_check(M: SeedMatrix, g: int, n0: int, count: int):
    order = 3 * g - 2
    if n0 % 2 == 0 or count < order + 1:
        raise InvalidInput(f"need odd n0 and at least {order + 1} terms")
    ns = [n0 + 2 * i for i in range(count)]
    values = signature_sequence(M, g, ns)
    ok = all(x == 0 for x in finite_differences(values, order))
    return {"n": ns, "values": values, "degree": finite_difference_degree(values), "ok": ok}


def leading_constant(g: int) -> Fraction:
    """c_g with sigma_g ~ c_g n^(3g-3) Tr(Omega_W^(g-1)), i.e. 2 zeta(2g-2)/(2 pi^2)^(g-1)."""
    m = g - 1
    num, den = mpmath.bernfrac(2 * m)
    return abs(Fraction(int(num), int(den))) * 2 ** m / factorial(2 * m)


def leading_trace(M: SeedMatrix, g: int, n0: int = 11) -> Fraction:
    """Tr(Omega_W^(g-1)) read off from the exact n^(3g-3) coefficient of sigma_g.

    Fits the degree 3g-3 polynomial through 3g-2 odd n (plus one extra point
    confirming the fit) and divides its leading coefficient by c_g.
    """
    deg = 3 * g - 3
    n0 = M.first_admissible(n0)
    ns = [n0 + 2 * i for i in range(deg + 2)]
    ys = [Fraction(v) for v in signature_sequence(M, g, ns)]
    if any(finite_differences(ys, deg + 1)):
        raise ArithmeticError("signature sequence is not polynomial of the expected degree")
    dd, xs = ys[:deg + 1], ns[:deg + 1]
    for j in range(1, deg + 1):
        dd = [(dd[i + 1] - dd[i]) / (xs[i + j] - xs[i]) for i in range(len(dd) - 1)]
    return dd[0] / leading_constant(g)


@dataclass(frozen=True)
class RatioRow:
    n: int
    p: int
    q: int
    sigma: int
    dim: int
    ratio: Fraction
    limit: Fraction

    def relative_error(self) -> Fraction:
        return abs(self.ratio / self.limit - 1)


def ratio_table(M: SeedMatrix, g: int, n_list):
    limit = limit_trace(M, g) / Fraction(M.d) ** (3 * (g - 1))
    rows = []
    for n in n_list:
        s = signature_direct(M, g, n)
        dim = verlinde_dim(M.p_n(n), g)
        rows.append(RatioRow(n, M.p_n(n), M.q_n(n), s, dim, Fraction(s, dim), limit))
    return rows

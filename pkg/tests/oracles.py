"""Independent reference implementations on top of sympy.

Nothing here imports the package.  Continuants come from tridiagonal
determinants, traces from explicit multiplication matrices, inverses from
sympy's extended Euclid.  Slow by design; only used on small inputs and to
produce the literal values frozen in the tests.
"""
from fractions import Fraction
from math import gcd

import sympy as sp

X = sp.Symbol("X")
T = sp.Symbol("t")


def eps(p, q, k):
    return -1 if (k * q // p) % 2 else 1


def ell_pair(p, q):
    ell = next(l for l in range(1, p, 2) if (q * l) % p in (1, p - 1))
    ell_prime = next(l for l in range(1, 2 * p, 2) if (q * l) % (2 * p) == 2 * p - 1)
    return ell, ell_prime


def tridiagonal_continuant(entries):
    k = len(entries)
    if k == 0:
        return sp.Poly(1, X)
    m = sp.zeros(k, k)
    for i, e in enumerate(entries):
        m[i, i] = e
        if i + 1 < k:
            m[i, i + 1] = -1
            m[i + 1, i] = 1
    return sp.Poly(sp.expand(m.det()), X)


def P(p, q, k):
    if k == -1:
        return sp.Poly(0, X)
    return tridiagonal_continuant([eps(p, q, i) * X for i in range(1, k + 1)])


def Q(p, q, k):
    if k == -1:
        return sp.Poly(1, X)
    if k == 0:
        return sp.Poly(0, X)
    return tridiagonal_continuant([eps(p, q, i) * X for i in range(2, k + 1)])


def riley(p, q):
    return P(p, q, p - 1)


def coeffs(poly):
    """Ascending Fraction coefficients of a sympy Poly in X."""
    c = poly.all_coeffs()[::-1]
    out = [Fraction(int(sp.numer(v)), int(sp.denom(v))) for v in c]
    while out and out[-1] == 0:
        out.pop()
    return out


def reduce(f, m):
    return sp.Poly(f, X, domain="QQ").rem(sp.Poly(m, X, domain="QQ"))


def trace(f, m):
    m = sp.Poly(m, X, domain="QQ")
    n = m.degree()
    total = sp.Rational(0)
    for i in range(n):
        r = (sp.Poly(f, X, domain="QQ") * sp.Poly(X ** i, X)).rem(m)
        total += r.coeff_monomial(X ** i)
    return Fraction(int(sp.numer(total)), int(sp.denom(total)))


def invert(f, m):
    return sp.Poly(sp.invert(sp.Poly(f, X).as_expr(), sp.Poly(m, X).as_expr(), X), X, domain="QQ")


def omega(p, q):
    m = riley(p, q)
    acc = sp.Poly(0, X)
    for k in range(p - 1):
        acc += (-1) ** k * eps(p, q, k + 1) * P(p, q, k) ** 2
    return reduce(acc, m)


def signature(p, q, g):
    m = riley(p, q)
    return trace(reduce(omega(p, q) ** (g - 1), m), m)


def epsilon(p, q, f):
    """P_0-coordinate of f in the basis P_0..P_{p-2}, by a dense linear solve."""
    m = riley(p, q)
    n = p - 1
    basis = sp.Matrix([[reduce(P(p, q, k), m).coeff_monomial(X ** i) for k in range(n)] for i in range(n)])
    rhs = sp.Matrix([reduce(f, m).coeff_monomial(X ** i) for i in range(n)])
    v = basis.LUsolve(rhs)[0]
    return Fraction(int(sp.numer(v)), int(sp.denom(v)))


def inverse_sums(p, q):
    """(sum 1/tau_1, sum 1/tau_2) = half traces of x^2 P_{l-1}/2 and 4 x^2 P_{l-1}^2 / Omega."""
    m = riley(p, q)
    ell, _ = ell_pair(p, q)
    f = P(p, q, ell - 1)
    s1 = trace(reduce(sp.Poly(X ** 2, X) * f * sp.Rational(1, 2), m), m) / 2
    inv_om = invert(omega(p, q), m)
    s2 = trace(reduce(4 * sp.Poly(X ** 2, X) * f ** 2 * inv_om, m), m) / 2
    return s1, s2


def verlinde(p, g, digits=60):
    s = sum(sp.sin(sp.pi * k / p) ** (2 - 2 * g) for k in range(1, p))
    v = sp.N(sp.Rational(p, 2) ** (g - 1) * s, digits)
    return int(sp.Integer(sp.floor(v + sp.Rational(1, 2))))


def limit_traces(h1, h2, h3, gmax):
    """Tr(Omega_W^(g-1)) with Omega_W = -h1' h2 / h3^2 in Q[X]/(h1), ascending int lists in."""
    H1, H2, H3 = (sp.Poly(list(reversed(h)), X) for h in (h1, h2, h3))
    w = reduce(-H1.diff(X) * H2 * invert(H3 ** 2, H1), H1)
    return {g: trace(reduce(w ** (g - 1), H1), H1) for g in range(2, gmax + 1)}, coeffs(w)


def specialization_lhs(poly, power):
    """poly(i t + i/t) (t - 1/t)^power as {t-exponent: (re, im)}."""
    expr = sp.expand(poly.as_expr().subs(X, sp.I * T + sp.I / T) * (T - 1 / T) ** power)
    out = {}
    for term in sp.Add.make_args(expr):
        c, e = term.as_coeff_exponent(T)
        re, im = sp.re(c), sp.im(c)
        out[int(e)] = (out.get(int(e), (0, 0))[0] + int(re), out.get(int(e), (0, 0))[1] + int(im))
    return {e: v for e, v in out.items() if v != (0, 0)}


def coprime_odd(pmax):
    return [(p, q) for p in range(3, pmax + 1, 2) for q in range(1, p, 2) if gcd(p, q) == 1]

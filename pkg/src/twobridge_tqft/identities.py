"""Executable structural identities for continuants and the algebra V.

Each check returns a dict mapping identity name to bool so sweeps can report
the first failing (p, q, name) without stopping.
"""
from fractions import Fraction

from .exactalg import QuotientRing, UniPoly, is_squarefree
from .frobenius import ParabolicAlgebra, build_algebra, eta
from .twobridge import continuant, continuant_P, continuant_Q, make_params, riley_pair


def eps_palindromic(p: int, q: int) -> bool:
    prm = make_params(p, q)
    return all(prm.sign(k) == prm.sign(p - k) for k in range(1, p))


def matrix_identity(p: int, q: int) -> bool:
    """Product of (eps_k X, 1; 1, 0) for k = 1..m equals (P_m, P_{m-1}; Q_m, Q_{m-1})."""
    prm = make_params(p, q)
    x, one, zero = UniPoly.x(), UniPoly.constant(1), UniPoly()
    acc = [[one, zero], [zero, one]]
    for m in range(1, p):
        step = [[x * prm.sign(m), one], [one, zero]]
        acc = [[acc[r][0] * step[0][c] + acc[r][1] * step[1][c] for c in range(2)] for r in range(2)]
        want = [[continuant_P(prm, m), continuant_P(prm, m - 1)],
                [continuant_Q(prm, m), continuant_Q(prm, m - 1)]]
        if acc != want:
            return False
    return True


def _halved_pair(p: int, q: int):
    # P_{p-1} = R(X^2) and P_{p-2} = X S(X^2) since P_k has the parity of k
    top, below = riley_pair(make_params(p, q))
    if any(top[1::2]) or any(below[0::2]):
        raise AssertionError(f"parity of continuants broken for ({p},{q})")
    return UniPoly.from_ints(top[0::2]), UniPoly.from_ints(below[1::2])


def iota_squares_to_minus_one(p: int, q: int) -> bool:
    """P_{p-2}^2 = -1 mod P_{p-1}, checked as Y S(Y)^2 = -1 mod R(Y)."""
    r, s = _halved_pair(p, q)
    ring = QuotientRing(r)
    e = ring.elem(s)
    return e.square() * ring.gen() == -ring.one()


def riley_squarefree(p: int, q: int) -> bool:
    """R(X^2) is squarefree iff R is squarefree and R(0) != 0."""
    r, _ = _halved_pair(p, q)
    return r[0] != 0 and is_squarefree(r)


def riley_structure(p: int, q: int) -> dict:
    r, s = _halved_pair(p, q)
    ring = QuotientRing(r)
    return {"iota_square": ring.elem(s).square() * ring.gen() == -ring.one(),
            "riley_squarefree": r[0] != 0 and is_squarefree(r)}


def structural_checks(V: ParabolicAlgebra) -> dict:
    p, prm = V.p, V.params
    lp = prm.ell_prime
    iota = V.iota
    out = {}
    out["iota_symmetry"] = iota == V.Q(p - 1)
    out["shift_by_p"] = all(V.P(k + p) == iota * V.P(k) * (-1) ** k for k in range(0, p + 1))
    out["reflection"] = all(V.P(-2 - k) == V.P(k) for k in range(-p, p + 1))
    out["omega_lemma"] = V.P(lp - 1) * V.Q(p - 2) == -iota * (V.P(lp) + V.P(lp - 2))
    base = V.P(lp) - V.P(lp - 2)
    out["sum_of_two"] = all(
        base * V.P(k) == (V.P(lp + k) - V.P(lp - k - 2)) * (1 if k >= -1 else -1)
        for k in range(-p + 1, p))
    return out


def frobenius_checks(V: ParabolicAlgebra) -> dict:
    out = {}
    diag = V.eta_diagonal()
    basis = V.pbasis
    out["orthogonality"] = all(
        eta(V, basis[j], basis[k]) == (diag[j] if j == k else 0)
        for j in range(V.dim) for k in range(j, V.dim))
    out["omega_plus_half"] = V.omega_plus * 2 == V.omega
    return out


def identity_suite(p: int, q: int, frobenius: bool = True) -> dict:
    """All per-pair identities; the exhaustive orthogonality check is O(p^3)."""
    V = build_algebra(p, q)
    out = {"eps_palindromic": eps_palindromic(p, q)}
    out.update(riley_structure(p, q))
    out.update(structural_checks(V))
    if frobenius:
        out.update(frobenius_checks(V))
    return out


def continuant_exchange(values, i: int, k: int, j: int) -> bool:
    """(-1)^k K(X_1..X_{i-1}) K(X_{i+k+2}..X_{i+j})
    = K(X_1..X_{i+j}) K(X_{i+1}..X_{i+k}) - K(X_1..X_{i+k}) K(X_{i+1}..X_{i+j}),
    for i >= 1, k >= 0, j >= k + 1; values is X_1, X_2, ... (1-based in the formula)."""
    if i < 1 or k < 0 or j < k + 1 or len(values) < i + j:
        raise ValueError("need i >= 1, k >= 0, j >= k+1 and at least i+j values")

    def K(a, b):  # K(X_a .. X_b), empty when b < a
        return continuant(values[a - 1:b]) if b >= a else continuant([])

    lhs = (-1) ** k * K(1, i - 1) * K(i + k + 2, i + j)
    rhs = K(1, i + j) * K(i + 1, i + k) - K(1, i + k) * K(i + 1, i + j)
    return lhs == rhs

"""Two-variable polynomials Q_M, R_M, S_M with P(it + i/t) (t - 1/t)^d = i^(n+1) Q_M(t, t^n) etc.

All continuants here belong to the pair (p_n, d), whose sign sequence is
made of d alternating blocks of lengths n + alpha_r.
"""
from dataclasses import dataclass, field
from math import factorial

from ..errors import VerificationFailure
from ..exactalg import LaurentBiPoly, UniPoly, newton_polygon
from ..twobridge import continuant_P, make_params
from .seed import SeedMatrix, alpha_sequence, h_polynomials, kappa, normalized_h1

_I = (0, 1)
_MINUS_I = (0, -1)


def _mono(i, j, c=(1, 0)):
    return LaurentBiPoly.monomial(i, j, c)


def _block(alpha, conjugate):
    """(X 1; 1 0)^(n+alpha) (t - 1/t) with U = t, V = t^n, stripped of i^(n+alpha)."""
    a11 = _mono(alpha + 1, 1) - _mono(-alpha - 1, -1)
    a12 = (_mono(alpha, 1) - _mono(-alpha, -1)) * _MINUS_I
    a22 = _mono(1 - alpha, -1) - _mono(alpha - 1, 1)
    m = [[a11, a12], [a12, a22]]
    if conjugate:
        m = [[e.conj() for e in row] for row in m]
    return m


def _matmul(x, y):
    return [[x[r][0] * y[0][c] + x[r][1] * y[1][c] for c in range(2)] for r in range(2)]


def _block_product(alpha, count):
    one, zero = LaurentBiPoly.constant(1), LaurentBiPoly()
    acc = [[one, zero], [zero, one]]
    for r in range(1, count + 1):
        acc = _matmul(acc, _block(alpha[r - 1], conjugate=(r % 2 == 0)))
    return acc


@dataclass
class BivariateTriple:
    qm: LaurentBiPoly
    rm: LaurentBiPoly
    sm: LaurentBiPoly
    # extra signs found necessary when pinning against the specialization identity
    conventions: dict = field(default_factory=dict)


def _raw_triple(M: SeedMatrix):
    alpha = alpha_sequence(M)
    k = kappa(alpha)
    full = _block_product(alpha, M.d)
    head = _block_product(alpha, M.b)
    return (full[0][0].times_i(k - 1), full[0][1].times_i(k), head[0][0].times_i(kappa(alpha, M.b)))


def bivariate_polys(M: SeedMatrix) -> BivariateTriple:
    """Q_M, R_M, S_M from the block-matrix product, with i-power prefactors
    i^(kappa-1), i^kappa and i^(alternating sum of the first b alphas).

    The prefactors are confirmed on the first admissible n; if the identity
    only holds after a sign flip, the flip is applied and recorded.
    """
    polys = list(_raw_triple(M))
    n = M.first_admissible(3)
    conventions = {}
    for idx, name in enumerate(("Q", "R", "S")):
        for sign in (1, -1):
            if _specialization_holds(M, n, name, polys[idx] * sign):
                conventions[name] = sign
                polys[idx] = polys[idx] * sign
                break
        else:
            raise VerificationFailure(f"no sign makes the {name}_M specialization hold for {M}")
    for name, poly in zip(("Q", "R", "S"), polys):
        if not poly.is_real():
            raise VerificationFailure(f"{name}_M has non-real coefficients for {M}")
    return BivariateTriple(*polys, conventions=conventions)


def q_eta_sum(M: SeedMatrix) -> LaurentBiPoly:
    """Q_M from the signed sum over eta in {+-1}^d, evaluated by a transfer recursion.

    States are (eta_1, eta_r); the boundary exponent (eta_1 + eta_d)/2 is
    added when the walk closes.
    """
    alpha = alpha_sequence(M)
    states = {}
    for e in (1, -1):
        states[(e, e)] = _mono(e * alpha[0], e, (e, 0))
    for r in range(1, M.d):
        nxt = {}
        for (e1, er), poly in states.items():
            for e in (1, -1):
                h = (er + e) // 2
                link = LaurentBiPoly.constant(2) if h == 0 else _mono(h, 0) + _mono(-h, 0)
                term = poly * link * _mono(e * alpha[r], e, (e, 0))
                key = (e1, e)
                nxt[key] = nxt[key] + term if key in nxt else term
        states = nxt
    total = LaurentBiPoly()
    for (e1, ed), poly in states.items():
        total = total + poly.shift((e1 + ed) // 2, 0)
    return total.times_i(kappa(alpha) - 1)


# ---- specialization t -> (U = t, V = t^n)
_X_OF_T = LaurentBiPoly({(1, 0): (0, 1), (-1, 0): (0, 1)})  # i(t + 1/t)
_T_MINUS_INV = LaurentBiPoly({(1, 0): (1, 0), (-1, 0): (-1, 0)})


def evaluate_at_x_of_t(poly: UniPoly, power: int) -> LaurentBiPoly:
    """poly(i t + i/t) * (t - 1/t)^power as a Laurent polynomial in t."""
    if not poly.is_integral():
        raise ValueError("expected an integer polynomial")
    acc = LaurentBiPoly()
    for c in reversed(poly.num):
        acc = acc * _X_OF_T + LaurentBiPoly.constant(c)
    return acc * (_T_MINUS_INV ** power)


def _specialization_sides(M: SeedMatrix, n: int, name: str):
    prm = make_params(M.p_n(n), M.d)
    if name == "Q":
        return evaluate_at_x_of_t(continuant_P(prm, prm.p - 1), M.d), (n + 1)
    if name == "R":
        return evaluate_at_x_of_t(continuant_P(prm, prm.p - 2), M.d), n
    return evaluate_at_x_of_t(continuant_P(prm, M.q_n(n) - 1), M.b), 0


def _specialization_holds(M, n, name, poly):
    lhs, ipow = _specialization_sides(M, n, name)
    return lhs == poly.specialize(n).times_i(ipow)


def specialization_check(M: SeedMatrix, n: int, triple: BivariateTriple = None):
    triple = triple or bivariate_polys(M)
    if not M.admissible(n):
        raise ValueError(f"n={n} is not admissible for {M.astuple()}")
    return {name: _specialization_holds(M, n, name, poly)
            for name, poly in (("Q", triple.qm), ("R", triple.rm), ("S", triple.sm))}


def _matrix_power(m, e):
    out = [[UniPoly.constant(1), UniPoly()], [UniPoly(), UniPoly.constant(1)]]
    for _ in range(e):
        out = [[out[r][0] * m[0][c] + out[r][1] * m[1][c] for c in range(2)] for r in range(2)]
    return out


def block_description(M: SeedMatrix, n: int, blocks: int):
    """(top, bottom) of prod_{r=blocks..1} ((-1)^(r+1) X, 1; 1, 0)^(n + alpha_r) (1, 0)^T."""
    alpha = alpha_sequence(M)
    x = UniPoly.x()
    v = [UniPoly.constant(1), UniPoly()]
    for r in range(1, blocks + 1):
        m = [[x if r % 2 else -x, UniPoly.constant(1)], [UniPoly.constant(1), UniPoly()]]
        mp = _matrix_power(m, n + alpha[r - 1])
        v = [mp[0][0] * v[0] + mp[0][1] * v[1], mp[1][0] * v[0] + mp[1][1] * v[1]]
    return v


def description_check(M: SeedMatrix, n: int) -> bool:
    prm = make_params(M.p_n(n), M.d)
    p, q = M.p_n(n), M.q_n(n)
    top, bottom = block_description(M, n, M.d)
    ok = top == continuant_P(prm, p - 1) and bottom == continuant_P(prm, p - 2)
    top_b, bottom_b = block_description(M, n, M.b)
    if M.b > 0:
        ok = ok and top_b == continuant_P(prm, q - 1) and bottom_b == continuant_P(prm, q - 2)
    return ok


# ---- Qlemma clauses
@dataclass
class QlemmaReport:
    seed: tuple
    clauses: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.clauses.values())


def _first_order_matches(poly: LaurentBiPoly, h: UniPoly, order: int):
    """All parts of poly(e^u, e^v) below ``order`` vanish and the order part is 2^order u^order h(v/u)."""
    for k in range(order):
        if poly.homogeneous_part(k):
            return False
    part = poly.homogeneous_part(order)
    f = factorial(order)
    expected = {}
    for m in range(h.degree + 1):
        c = h[m]
        if c:
            expected[(order - m, m)] = (int(c * f * 2 ** order), 0)
    return part == expected


def _matches_up_to_sign(poly, target):
    if poly == target:
        return 1
    if poly == -target:
        return -1
    return 0


def qlemma_report(M: SeedMatrix, triple: BivariateTriple = None) -> QlemmaReport:
    triple = triple or bivariate_polys(M)
    Q, R, S = triple.qm, triple.rm, triple.sm
    c, d = M.c, M.d
    rep = QlemmaReport(M.astuple())
    rep.details["conventions"] = dict(triple.conventions)

    rep.clauses["symmetry_u"] = Q.substitute(u_sign=-1) == Q
    rep.clauses["symmetry_v"] = Q.substitute(v_sign=-1) == -Q
    rep.clauses["symmetry_inverse"] = Q.substitute(invert=True) == -Q

    w = (_mono(1, 0) + _mono(-1, 0)) ** (d - 1)
    top = _matches_up_to_sign(Q.v_slice(d), w * _mono(c, 0))
    bottom = _matches_up_to_sign(Q.v_slice(-d), w * _mono(-c, 0))
    rep.details["extreme_signs"] = (top, bottom)
    rep.clauses["extreme_v_terms"] = Q.v_range() == (-d, d) and top != 0 and bottom != 0

    corners = {(s1 * (d - 1) + s2 * c, s2 * d) for s1 in (1, -1) for s2 in (1, -1)}
    expected_hull = newton_polygon(LaurentBiPoly({v: 1 for v in corners}))
    hull = newton_polygon(Q)
    rep.details["newton_polygon"] = hull
    rep.clauses["newton_polygon"] = hull == expected_hull

    vv = (_mono(0, 1) - _mono(0, -1)) ** d * 2 ** (d - 1)
    s_plus = _matches_up_to_sign(Q.at_u(1), vv)
    s_minus = _matches_up_to_sign(Q.at_u(-1), vv)
    rep.details["u_specialization_signs"] = (s_plus, s_minus)
    rep.clauses["u_specialization"] = s_plus != 0 and s_minus != 0

    h = h_polynomials(M)
    rep.clauses["expansion_Q_H1"] = _first_order_matches(Q, normalized_h1(M), d)
    rep.clauses["expansion_R_H2"] = _first_order_matches(R, h.h2, d)
    rep.clauses["expansion_S_H3"] = _first_order_matches(S, h.h3, M.b)
    rep.clauses["integral_coefficients"] = Q.is_real() and R.is_real() and S.is_real()
    return rep

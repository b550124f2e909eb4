"""Sign sequences, continuants and Riley polynomials of two-bridge knots K(p, q)."""
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import InvalidInput
from .exactalg import UniPoly
from .exactalg import _intpoly as ip


def eps_value(p: int, q: int, k: int) -> int:
    """(-1)^floor(kq/p), valid for every integer k."""
    return -1 if (k * q // p) % 2 else 1


@dataclass(frozen=True)
class TwoBridgeParams:
    p: int
    q: int
    ell: int
    ell_prime: int
    eps: tuple  # eps[k-1] is the sign at index k, 1 <= k <= p-1

    def sign(self, k: int) -> int:
        if 1 <= k < self.p:
            return self.eps[k - 1]
        return eps_value(self.p, self.q, k)

    @property
    def dim(self) -> int:
        return self.p - 1


def validate_pair(p, q):
    if not (isinstance(p, int) and isinstance(q, int)):
        raise InvalidInput("p and q must be integers")
    if p < 3 or p % 2 == 0:
        raise InvalidInput(f"p must be odd and at least 3, got {p}")
    if not (0 < q < p) or q % 2 == 0:
        raise InvalidInput(f"q must be odd with 0 < q < p, got q={q}, p={p}")
    if gcd(p, q) != 1:
        raise InvalidInput(f"p={p} and q={q} are not coprime")


@lru_cache(maxsize=256)
def make_params(p: int, q: int) -> TwoBridgeParams:
    validate_pair(p, q)
    eps = tuple(eps_value(p, q, k) for k in range(1, p))
    ell = next(l for l in range(1, p, 2) if (q * l) % p in (1, p - 1))
    ell_prime = next(l for l in range(1, 2 * p, 2) if (q * l) % (2 * p) == 2 * p - 1)
    return TwoBridgeParams(p, q, ell, ell_prime, eps)


def coprime_odd_pairs(pmax: int, pmin: int = 3, include_q1: bool = True):
    """All valid (p, q) with pmin <= p <= pmax, in lexicographic order."""
    for p in range(max(3, pmin | 1), pmax + 1, 2):
        for q in range(1 if include_q1 else 3, p, 2):
            if gcd(p, q) == 1:
                yield p, q


def _step(e, prev1, prev2):
    # e*X*prev1 + prev2 on integer coefficient lists
    out = [0] + ([c for c in prev1] if e == 1 else [-c for c in prev1])
    for i, c in enumerate(prev2):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return out


@lru_cache(maxsize=8)
def _continuant_tables(p: int, q: int):
    """Integer coefficient lists of P_k and Q_k for k = -1 .. p-1."""
    prm = make_params(p, q)
    P = [[], [1]]
    Q = [[1], []]
    for k in range(1, p):
        e = prm.eps[k - 1]
        P.append(_step(e, P[-1], P[-2]))
        Q.append(_step(e, Q[-1], Q[-2]) if k > 1 else [1])
    return tuple(tuple(v) for v in P), tuple(tuple(v) for v in Q)


def _check_index(params, k):
    if not (-1 <= k <= params.p - 1):
        raise InvalidInput(f"continuant index {k} outside [-1, {params.p - 1}]")


def continuant_P(params: TwoBridgeParams, k: int) -> UniPoly:
    _check_index(params, k)
    return UniPoly.from_ints(list(_continuant_tables(params.p, params.q)[0][k + 1]))


def continuant_Q(params: TwoBridgeParams, k: int) -> UniPoly:
    _check_index(params, k)
    return UniPoly.from_ints(list(_continuant_tables(params.p, params.q)[1][k + 1]))


def riley(params: TwoBridgeParams) -> UniPoly:
    return continuant_P(params, params.p - 1)


def riley_pair(params: TwoBridgeParams):
    """(P_{p-1}, P_{p-2}) as integer lists, without keeping the whole table.

    Runs the recursion on P_k(2^K) with K wide enough for every coefficient
    (they are bounded by Fibonacci numbers), so each step is one shift-add.
    """
    p = params.p
    nbytes = (p * 7 // 10 + 16) // 8 + 1
    shift = 8 * nbytes
    prev2, prev1 = 0, 1
    for k in range(1, p):
        step = prev1 << shift
        prev2, prev1 = prev1, (step if params.eps[k - 1] == 1 else -step) + prev2
    return ip.unpack(prev1, nbytes, p), ip.unpack(prev2, nbytes, p)


def continuant(values):
    """K(X_1, ..., X_k) for any ring elements: K() = 1, K(X_1) = X_1."""
    a, b = 1, 0  # K of the sequence so far, K of it without the last entry
    for v in values:
        a, b = v * a + b, a
    return a

"""Coprimality certificates by Euclid modulo a word-size prime.

If a prime l divides neither leading coefficient and gcd(a mod l, b mod l)
is constant, then a and b are coprime over Q: a common factor over Q lifts
to a primitive integer factor whose leading coefficient divides both
leading coefficients, so it would survive reduction mod l.  An inconclusive
result (unlucky prime) just means the caller falls back to exact Euclid.
"""
import numpy as np

# primes below 2^31 so that products fit in int64
PRIMES = (2147483647, 2147483629, 2147483587)

_NUMPY_CUTOFF = 48


def _reduce(v, ell):
    return [c % ell for c in v]


def _strip_desc(a):
    i = 0
    while i < len(a) and a[i] == 0:
        i += 1
    return a[i:]


def _gcd_degree_py(a, b, ell):
    # descending lists
    while b:
        inv = pow(b[0], ell - 2, ell)
        nb = len(b)
        a = list(a)
        for i in range(len(a) - nb + 1):
            c = a[i] * inv % ell
            if c:
                for j in range(nb):
                    a[i + j] = (a[i + j] - c * b[j]) % ell
        a = _strip_desc(a[len(a) - nb + 1:])
        a, b = b, a
    return len(a) - 1


def _gcd_degree_np(a, b, ell):
    a = np.array(a, dtype=np.int64)
    b = np.array(b, dtype=np.int64)
    while b.size:
        inv = pow(int(b[0]), ell - 2, ell)
        nb = b.size
        a = a.copy()
        for i in range(a.size - nb + 1):
            c = int(a[i]) * inv % ell
            if c:
                a[i:i + nb] = (a[i:i + nb] - c * b) % ell
        r = a[a.size - nb + 1:]
        nz = np.flatnonzero(r)
        r = r[nz[0]:] if nz.size else r[:0]
        a, b = b, r
    return a.size - 1


def coprime_certificate(a, b, primes=PRIMES):
    """True if a, b (ascending integer lists) are certified coprime over Q.

    False means "not certified", never "not coprime".
    """
    for ell in primes:
        if a[-1] % ell == 0 or b[-1] % ell == 0:
            continue
        ra = _reduce(a, ell)[::-1]
        rb = _reduce(b, ell)[::-1]
        if len(ra) < len(rb):
            ra, rb = rb, ra
        if len(ra) > _NUMPY_CUTOFF:
            deg = _gcd_degree_np(ra, rb, ell)
        else:
            deg = _gcd_degree_py(ra, rb, ell)
        if deg == 0:
            return True
    return False

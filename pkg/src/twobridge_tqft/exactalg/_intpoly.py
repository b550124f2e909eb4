"""Integer coefficient-list kernels shared by the polynomial types.

Lists are ascending (index = degree) with no trailing zeros.  Large products
go through Kronecker substitution: both operands are packed into one big
integer with fixed-width signed slots, multiplied by GMP, and unpacked.
"""
from math import gcd

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpz = int

# below this operand length the quadratic loop wins
SCHOOLBOOK_CUTOFF = 12


def trim(v):
    while v and v[-1] == 0:
        v.pop()
    return v


def content(v):
    g = 0
    for c in v:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def maxbits(v):
    m = 0
    for c in v:
        if c > m:
            m = c
        elif -c > m:
            m = -c
    return m.bit_length()


def _offset_block(k, count):
    # B + B*2^K + ... with B = 2^(K-1); K = 8k
    return int.from_bytes((b"\x00" * (k - 1) + b"\x80") * count, "little")


def pack(v, k):
    """Evaluate v at 2^(8k) exactly (slots are signed)."""
    if not v:
        return 0
    half = 1 << (8 * k - 1)
    raw = b"".join((c + half).to_bytes(k, "little") for c in v)
    return int.from_bytes(raw, "little") - _offset_block(k, len(v))


def unpack(z, k, m):
    """Inverse of pack for m balanced digits of width 8k bits."""
    half = 1 << (8 * k - 1)
    z += _offset_block(k, m)
    raw = z.to_bytes(k * m, "little")
    out = [int.from_bytes(raw[i * k:(i + 1) * k], "little") - half for i in range(m)]
    return trim(out)


def _schoolbook(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                out[i + j] += x * y
    return trim(out)


def mul(a, b):
    if not a or not b:
        return []
    if min(len(a), len(b)) <= SCHOOLBOOK_CUTOFF:
        return _schoolbook(a, b)
    bits = maxbits(a) + maxbits(b) + min(len(a), len(b)).bit_length() + 2
    k = (bits + 7) // 8
    z = int(_mpz(pack(a, k)) * _mpz(pack(b, k)))
    return unpack(z, k, len(a) + len(b) - 1)


def sqr(a):
    if not a:
        return []
    if len(a) <= SCHOOLBOOK_CUTOFF:
        return _schoolbook(a, a)
    k = (2 * maxbits(a) + len(a).bit_length() + 2 + 7) // 8
    z = _mpz(pack(a, k))
    return unpack(int(z * z), k, 2 * len(a) - 1)


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return trim(out)


def sub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return trim(out)


def scale(a, c):
    if c == 0:
        return []
    return [c * x for x in a]


def prem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z."""
    if not b:
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    nb = len(b)
    if len(a) < nb:
        return list(a)
    lc = b[-1]
    r = list(a)
    steps = len(a) - nb + 1
    for _ in range(steps):
        if len(r) < nb:
            r = [lc * x for x in r]
            continue
        c = r[-1]
        sh = len(r) - nb
        r = [lc * x for x in r]
        for j, y in enumerate(b):
            r[sh + j] -= c * y
        r.pop()
        trim(r)
    return r


def primitive_prs_gcd(a, b):
    """Primitive part of gcd(a, b) over Z[x]; inputs nonzero."""
    a = [x // content(a) for x in a]
    b = [x // content(b) for x in b]
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = prem(a, b)
        if r:
            g = content(r)
            r = [x // g for x in r]
        a, b = b, r
    if a[-1] < 0:
        a = [-x for x in a]
    return a


def series_inverse(f, prec):
    """g with f*g = 1 mod x^prec, for f[0] = +-1 (Newton iteration)."""
    g = [f[0]]
    have = 1
    while have < prec:
        have = min(2 * have, prec)
        e = mul(f[:have], g)[:have]
        e = [-c for c in e] + [0] * (have - len(e))
        e[0] += 2
        g = trim(mul(g, e)[:have])
    return g


def inverse_mod(a, m):
    """Return (s, c) with s*a = c mod m, c a nonzero integer, or (g, 0) when
    the remainder sequence ends at the nonconstant gcd g.

    Extended Euclid on integer pseudo-remainders; only the cofactor of a is
    tracked and the joint content of (r, s) is stripped every round.
    """
    r0, r1 = list(m), list(a)
    s0, s1 = [], [1]
    while len(r1) > 1:
        lc = r1[-1]
        r, s = list(r0), list(s0)
        while len(r) >= len(r1):
            c = r[-1]
            sh = len(r) - len(r1)
            g = gcd(c, lc)
            mc, cc = lc // g, c // g
            if mc != 1:
                r = [mc * x for x in r]
                s = [mc * x for x in s]
            for j, y in enumerate(r1):
                r[sh + j] -= cc * y
            if len(s) < sh + len(s1):
                s += [0] * (sh + len(s1) - len(s))
            for j, y in enumerate(s1):
                s[sh + j] -= cc * y
            r.pop()
            trim(r)
        trim(s)
        if not r:
            return r1, 0
        g = gcd(content(r), content(s))
        if g > 1:
            r = [x // g for x in r]
            s = [x // g for x in s]
        r0, r1, s0, s1 = r1, r, s1, s
    return s1, r1[0]

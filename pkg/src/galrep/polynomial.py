"""Dense univariate polynomials over an exact field, lowest degree first.

The helpers are generic: coefficients may be Fractions or CycQ values.
Callers pass the field's zero (and one where needed) explicitly, since a
bare ``0`` does not know which cyclotomic field it belongs to.
"""

from __future__ import annotations


def trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def degree(p) -> int:
    return len(trim(p)) - 1


def add(p, q, zero):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else zero) + (q[i] if i < len(q) else zero) for i in range(n)])


def sub(p, q, zero):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else zero) - (q[i] if i < len(q) else zero) for i in range(n)])


def scale(p, c):
    return trim([a * c for a in p])


def mul(p, q, zero):
    if not p or not q:
        return []
    out = [zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return trim(out)


def divmod_(p, q, zero):
    """Quotient and remainder of p by q (q nonzero)."""
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    lead = q[-1]
    r = list(p)
    dq = len(q) - 1
    if len(r) <= dq:
        return [], r
    quot = [zero] * (len(r) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k]
        if not c:
            continue
        c = c / lead
        quot[k - dq] = c
        for j, b in enumerate(q):
            if b:
                r[k - dq + j] = r[k - dq + j] - c * b
    return trim(quot), trim(r[:dq])


def rem(p, q, zero):
    return divmod_(p, q, zero)[1]


def monic(p):
    p = trim(p)
    if not p:
        return p
    lead = p[-1]
    return [c / lead for c in p]


def xgcd(a, b, zero, one):
    """Return (g, s, t) with s*a + t*b = g; g is not normalised."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        q, r = divmod_(r0, r1, zero)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, zero), zero)
        t0, t1 = t1, sub(t0, mul(q, t1, zero), zero)
    return r0, s0, t0


def gcd(a, b, zero):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(a, b, zero)
    return monic(a)


def derivative(p):
    return trim([c * i for i, c in enumerate(p)][1:])


def powmod(base, k: int, modulus, zero, one):
    """base**k reduced modulo a nonconstant modulus, by repeated squaring."""
    result = [one]
    b = rem(base, modulus, zero)
    while k:
        if k & 1:
            result = rem(mul(result, b, zero), modulus, zero)
        k >>= 1
        if k:
            b = rem(mul(b, b, zero), modulus, zero)
    return rem(result, modulus, zero)


def evaluate(p, x, zero):
    acc = zero
    for c in reversed(p):
        acc = acc * x + c
    return acc

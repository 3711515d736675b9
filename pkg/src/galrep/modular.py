"""Reduction of Q(zeta_N) modulo split primes.

For a prime P = 1 (mod N) the cyclotomic polynomial splits over F_P, and
sending zeta_N to a root r gives a ring map from the P-integral part of
Q(zeta_N) to F_P.  Two exact objects whose images differ are therefore
different; this gives cheap, exact inequality certificates for
polynomials whose exact coefficients are too large to compute.
"""

from __future__ import annotations

from functools import lru_cache

from sympy import factorint, isprime

from .cyclotomic import CycQ


@lru_cache(maxsize=None)
def split_primes(N: int, count: int = 3, start: int = 2**31) -> tuple:
    """The first ``count`` primes P = 1 (mod N) above ``start``, with a root of Phi_N."""
    out = []
    P = start - start % N + 1
    while len(out) < count:
        if P > start and isprime(P):
            out.append((P, _primitive_root_of_unity(N, P)))
        P += N
    return tuple(out)


def _primitive_root_of_unity(N: int, P: int) -> int:
    qs = list(factorint(N))
    for h in range(2, P):
        r = pow(h, (P - 1) // N, P)
        if all(pow(r, N // q, P) != 1 for q in qs):
            return r
    raise ArithmeticError(f"no primitive {N}-th root of unity mod {P}")


def reduce(a: CycQ, P: int, r: int) -> int | None:
    """Image of a in F_P, or None if a coefficient has P in its denominator."""
    acc = 0
    rk = 1
    for c in a.coeffs:
        if c:
            if c.denominator % P == 0:
                return None
            acc += c.numerator * pow(c.denominator, -1, P) * rk
        rk = rk * r % P
    return acc % P


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _rem(p, f, P):
    """p mod f over F_P, f monic (both low-first)."""
    p = list(p)
    df = len(f) - 1
    for k in range(len(p) - 1, df - 1, -1):
        c = p[k] % P
        if c:
            for j in range(df + 1):
                p[k - df + j] = (p[k - df + j] - c * f[j]) % P
    return _trim([x % P for x in p[:df]])


def _mul(a, b, P):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [v % P for v in out]


def charpoly_mod(rows, P: int) -> list:
    """Monic characteristic polynomial over F_P, lowest degree first (Hessenberg)."""
    n = len(rows)
    H = [[x % P for x in r] for r in rows]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for row in H:
                row[piv], row[m] = row[m], row[piv]
        inv = pow(H[m][m - 1], -1, P)
        for i in range(m + 1, n):
            if not H[i][m - 1]:
                continue
            u = H[i][m - 1] * inv % P
            H[i] = [(a - u * b) % P for a, b in zip(H[i], H[m])]
            for row in H:
                row[m] = (row[m] + u * row[i]) % P
    polys = [[1]]
    for k in range(1, n + 1):
        kk = k - 1
        prev = polys[k - 1]
        p = [0] + prev
        for i, c in enumerate(prev):
            p[i] -= H[kk][kk] * c
        prod = 1
        for i in range(kk - 1, -1, -1):
            prod = prod * H[i + 1][i] % P
            if not prod:
                break
            coef = prod * H[i][kk] % P
            for j, c in enumerate(polys[i]):
                p[j] -= coef * c
        polys.append([x % P for x in p])
    return polys[n]


def power_charpoly_mod(full, K: int, P: int) -> list:
    """Image in F_P of the polynomial whose roots are K-th powers of ``full``'s roots."""
    n = len(full) - 1
    r, base, k = [1], _rem([0, 1], full, P), K
    while k:
        if k & 1:
            r = _rem(_mul(r, base, P), full, P)
        k >>= 1
        if k:
            base = _rem(_mul(base, base, P), full, P)
    cols = []
    cur = r
    for _ in range(n):
        cols.append(cur + [0] * (n - len(cur)))
        cur = _rem([0] + cur, full, P)
    return charpoly_mod([list(row) for row in zip(*cols)], P)


def reduce_poly(coeffs, P: int, r: int):
    out = []
    for c in coeffs:
        v = reduce(c, P, r)
        if v is None:
            return None
        out.append(v)
    return out

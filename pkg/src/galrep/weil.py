"""Weil polynomials: monic integer polynomials with every root on |x| = q^(w/2).

Coefficient lists here run from the leading coefficient down to the
constant term, e.g. ``[1, 0, 2]`` is x^2 + 2.

Certification is exact.  Roots +-sqrt(q^w) are split off, the remaining
self-inversive part p(x) is rewritten as x^g h(x + q^w/x), and the roots
of h are shown to be real and inside [-2 q^(w/2), 2 q^(w/2)] with a Sturm
sequence evaluated exactly at the quadratic-surd endpoints.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, isqrt

from sympy import factorint

from . import polynomial as P

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    def __init__(self, candidates: int, budget: int):
        super().__init__(f"search needs {candidates} candidates, budget is {budget}")
        self.candidates = candidates
        self.budget = budget


@dataclass(frozen=True, order=True)
class WeilPoly:
    coeffs: tuple
    q: int
    w: int

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        d = self.d
        terms = []
        for k, c in enumerate(self.coeffs):
            deg = d - k
            if c == 0:
                continue
            mono = "" if deg == 0 else "x" if deg == 1 else f"x^{deg}"
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _is_prime_power(q: int) -> bool:
    return q >= 2 and len(factorint(q)) == 1


# --- exact signs at points s*sqrt(D) -------------------------------------


def _eval_surd(p, s, D: int):
    """p(s*sqrt(D)) as (A, B) meaning A + B*sqrt(D); p low-first."""
    A = B = Fraction(0)
    # powers of s*sqrt(D): even k -> s^k D^(k/2), odd k -> s^k D^((k-1)/2) sqrt(D)
    for k, c in enumerate(p):
        if not c:
            continue
        if k % 2 == 0:
            A += c * s**k * D ** (k // 2)
        else:
            B += c * s**k * D ** (k // 2)
    return A, B


def _sign_surd(A: Fraction, B: Fraction, D: int) -> int:
    """Sign of A + B*sqrt(D), D >= 0."""
    sa = (A > 0) - (A < 0)
    sb = (B > 0) - (B < 0)
    if sb == 0 or D == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare A^2 with B^2 D
    diff = A * A - B * B * D
    return sa if diff > 0 else -sa if diff < 0 else 0


def _sturm_chain(p):
    chain = [p, P.derivative(p)]
    while chain[-1] and P.degree(chain[-1]) > 0:
        r = P.rem(chain[-2], chain[-1], Fraction(0))
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _variations(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _roots_real_in_window(h, D: int) -> bool:
    """All roots of h real and in [-2 sqrt(D), 2 sqrt(D)]?"""
    if P.degree(h) <= 0:
        return True
    # monic h with all roots in the window is >= 0 at the right end and has
    # sign (-1)^deg or 0 at the left end
    right = _sign_surd(*_eval_surd(h, 2, D), D)
    left = _sign_surd(*_eval_surd(h, -2, D), D) * (-1) ** P.degree(h)
    if right < 0 or left < 0:
        return False
    g = P.gcd(h, P.derivative(h), Fraction(0))
    sf = P.divmod_(h, g, Fraction(0))[0] if P.degree(g) > 0 else h
    k = P.degree(sf)
    chain = _sturm_chain(sf)
    # V(a) - V(b) counts distinct roots in (a, b]; V at -2 sqrt(D) is read off
    # the mirrored chain c(-y) at +2 sqrt(D)
    v_right = _variations([_sign_surd(*_eval_surd(c, 2, D), D) for c in chain])
    mirrored = [[c if i % 2 == 0 else -c for i, c in enumerate(poly)] for poly in chain]
    v_left = _variations([_sign_surd(*_eval_surd(c, 2, D), D) for c in mirrored])
    at_left_end = _sign_surd(*_eval_surd(mirrored[0], 2, D), D) == 0
    return v_left - v_right + at_left_end == k


def _trace_polynomial(p, Q: int):
    """h with p(x) = x^g h(x + Q/x), for self-inversive p of degree 2g (low-first)."""
    g = (len(p) - 1) // 2
    # T_j(y) = x^j + Q^j x^-j as polynomials in y; T_0 = 2, T_1 = y
    T = [[2], [0, 1]]
    for j in range(2, g + 1):
        T.append(P.sub([0] + T[-1], P.scale(T[-2], Q), 0))
    h = [p[g]]
    for j in range(1, g + 1):
        h = P.add(h, P.scale(T[j], p[g + j]), 0)
    return h


def _divide_monic(p, f):
    """Exact quotient of integer polynomials by a monic f (low-first), or None."""
    p = list(p)
    df = len(f) - 1
    quot = [0] * (len(p) - df)
    for k in range(len(p) - 1, df - 1, -1):
        c = p[k]
        quot[k - df] = c
        if c:
            for j in range(df + 1):
                p[k - df + j] -= c * f[j]
    return quot if not any(p[:df]) else None


def is_weil_poly(coeffs, q: int, w: int) -> bool:
    """Exact test that every complex root has absolute value q^(w/2)."""
    coeffs = list(coeffs)
    if not coeffs or coeffs[0] != 1:
        raise ValueError(f"polynomial must be monic, got {coeffs}")
    if any(Fraction(c).denominator != 1 for c in coeffs):
        raise ValueError("coefficients must be integers")
    if w < 0:
        raise ValueError(f"weight must be nonnegative, got {w}")
    Q = q**w
    p = [int(c) for c in reversed(coeffs)]
    d = len(p) - 1
    if d == 0:
        return True
    # self-inversive pairing: x^d p(Q/x) = p(0) p(x), |p(0)| = Q^(d/2)
    if p[0] * p[0] != Q**d:
        return False
    if any(p[k] * Q**k != p[0] * p[d - k] for k in range(d + 1)):
        return False

    # split off the real roots +-sqrt(Q)
    s = isqrt(Q)
    for f in ([-s, 1], [s, 1]) if s * s == Q else ([-Q, 0, 1],):
        while len(p) >= len(f):
            quot = _divide_monic(p, f)
            if quot is None:
                break
            p = quot
    d = len(p) - 1
    if d == 0:
        return True
    if d % 2:
        return False
    g = d // 2
    if p[0] != Q**g:
        return False
    h = [Fraction(c) for c in _trace_polynomial(p, Q)]
    return _roots_real_in_window(h, Q)


def coefficient_bounds(q: int, w: int, d: int) -> list[int]:
    """floor(C(d, i) q^(w i/2)) for i = 0..d, bounding |a_(d-i)|."""
    Q = q**w
    return [isqrt(comb(d, i) ** 2 * Q**i) for i in range(d + 1)]


def _candidates(q: int, w: int, d: int):
    """Free data of candidates passing the necessary coefficient conditions.

    The constant term is +-Q^(d/2) and the low half of the coefficients is
    pinned by a_k Q^k = a_0 a_(d-k), so only a_(d-1) .. a_(d - floor(d/2))
    and a sign are scanned.
    """
    Q = q**w
    if d % 2 and isqrt(Q) ** 2 != Q:
        return 0, []
    top = Q ** (d // 2) * (isqrt(Q) if d % 2 else 1)
    bounds = coefficient_bounds(q, w, d)
    half = d // 2
    ranges = [range(-bounds[i], bounds[i] + 1) for i in range(1, half + 1)]
    count = 2
    for r in ranges:
        count *= len(r)
    return count, (top, ranges)


def candidate_count(q: int, w: int, d: int) -> int:
    return _candidates(q, w, d)[0]


def _resolve_budget(budget):
    if budget is not None:
        return budget
    env = os.environ.get("GALREP_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _complete(top_coeffs, a0, Q, d):
    """Fill in the low half from the self-inversive relation, or None."""
    a = [None] * (d + 1)  # a[k] = coefficient of x^k
    a[d] = 1
    a[0] = a0
    for i, c in enumerate(top_coeffs, start=1):
        a[d - i] = c
    for k in range(1, d):
        if a[k] is None:
            num = a0 * a[d - k]
            den = Q**k
            if num % den:
                return None
            a[k] = num // den
    return [a[k] for k in range(d, -1, -1)]


def enumerate_weil(q: int, w: int, d: int, budget: int | None = None) -> list[WeilPoly]:
    """Every monic degree-d integer Weil polynomial of weight w for q, sorted."""
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if w < 0:
        raise ValueError(f"weight must be nonnegative, got {w}")
    if not _is_prime_power(q):
        raise ValueError(f"q must be a prime power, got {q}")
    budget = _resolve_budget(budget)
    count, data = _candidates(q, w, d)
    if count > budget:
        raise BudgetExceeded(count, budget)
    if not count:
        return []
    Q = q**w
    top, ranges = data
    found = set()
    for a0 in (top, -top):
        for head in product(*ranges):
            coeffs = _complete(head, a0, Q, d)
            if coeffs is None:
                continue
            if is_weil_poly(coeffs, q, w):
                found.add(tuple(coeffs))
    return [WeilPoly(c, q, w) for c in sorted(found)]


def weil_count(q: int, w: int, d: int, budget: int | None = None) -> int:
    return len(enumerate_weil(q, w, d, budget))


def reciprocal_twist(coeffs, q: int, w: int):
    """Monic polynomial with roots q^w / alpha, or None if not integral."""
    Q = q**w
    p = list(reversed(coeffs))  # low-first
    d = len(p) - 1
    if p[0] == 0:
        return None
    # x^d p(Q/x) = sum p_k Q^k x^(d-k); normalise by its leading term p_0
    rev = [Fraction(p[k] * Q**k, p[0]) for k in range(d + 1)]  # coefficient of x^(d-k)
    if any(c.denominator != 1 for c in rev):
        return None
    return [int(c) for c in rev]

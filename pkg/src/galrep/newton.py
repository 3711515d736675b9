"""Power sums as integral combinations of exterior-power characters.

For g in GL_n, Tr(g^m) is a sum over compositions r = (r_1, ..., r_n) of
weighted degree r_1 + 2 r_2 + ... + n r_n = m of

    c(r) * e_1^r_1 * ... * e_n^r_n,     e_i = Tr(Lambda^i g),

with integer coefficients c(r).  Each monomial is the character of
V^(r_1) (x) (Lambda^2 V)^(r_2) (x) ... (x) (Lambda^n V)^(r_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, prod

from .cyclotomic import CycQ
from .linalg import CharPoly


@dataclass(frozen=True, order=True)
class Composition:
    parts: tuple

    def __post_init__(self):
        if any(r < 0 for r in self.parts):
            raise ValueError(f"negative part in {self.parts}")

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def degree(self) -> int:
        return sum(i * r for i, r in enumerate(self.parts, start=1))

    @property
    def length(self) -> int:
        return sum(self.parts)


def compositions(n: int, m: int) -> list[Composition]:
    """All r with d(r) = m, largest r_1 first (descending lexicographic)."""
    if n < 1 or m < 1:
        raise ValueError(f"need n, m >= 1, got n={n}, m={m}")

    def rec(i, remaining):
        # parts i..n with weighted degree `remaining`
        if i == n:
            if remaining % n == 0:
                yield (remaining // n,)
            return
        for r in range(remaining // i, -1, -1):
            for tail in rec(i + 1, remaining - i * r):
                yield (r,) + tail

    return [Composition(p) for p in rec(1, m)]


def newton_coefficient(r: Composition) -> int:
    """(-1)^m m (|r|-1)! / (r_1! ... r_n!) (-1)^|r|, with m = d(r)."""
    m, s = r.degree, r.length
    if m == 0:
        raise ValueError("the zero composition has no Newton coefficient")
    num = m * factorial(s - 1)
    den = prod(factorial(x) for x in r.parts)
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"non-integral Newton coefficient for {r.parts}")
    return q if (m + s) % 2 == 0 else -q


def m_trace_from_charpoly(p: CharPoly, m: int) -> CycQ:
    """Tr(g^m) from the characteristic polynomial of g, via Newton's identity."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    e = [p.elementary(i) for i in range(p.n + 1)]
    total = CycQ.zero(p.order)
    for r in compositions(p.n, m):
        term = CycQ.one(p.order)
        for i, ri in enumerate(r.parts, start=1):
            if ri:
                term = term * e[i] ** ri
                if not term:
                    break
        if term:
            total = total + term * newton_coefficient(r)
    return total


def dim_lambda(n: int, r: Composition) -> int:
    """dim of V^(r_1) (x) (Lambda^2 V)^(r_2) (x) ... for dim V = n."""
    if r.n != n:
        raise ValueError(f"composition has {r.n} parts, expected {n}")
    return prod(comb(n, i) ** ri for i, ri in enumerate(r.parts, start=1))


def d_m(n: int, m: int) -> int:
    """Twice the sum of squared dimensions over compositions of degree m."""
    return 2 * sum(dim_lambda(n, r) ** 2 for r in compositions(n, m))

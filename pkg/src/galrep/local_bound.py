"""Certified exponents killing eigenvalue-ratio roots of unity over l-adic fields.

A finite extension F of Q_l is described only by (l, e, f).  Two bounds:

* ``roots_of_unity_bound`` bounds #mu(F): the prime-to-l part is exactly
  l^f - 1, the l-part is at most l^t with phi(l^t) | e.
* ``paper_m_bound`` returns an exponent K such that every root of unity of
  degree <= n^2 over F has order dividing K.  If g1^k and g2^k are
  conjugate in GL_n(F) for some k, then g1^K and g2^K are conjugate.

The second is a valid multiple of the minimal such exponent, not the
minimum itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from sympy import cyclotomic_poly, divisors, factorint, isprime, totient


@dataclass(frozen=True)
class LocalFieldParams:
    ell: int
    e: int = 1
    f: int = 1

    def __post_init__(self):
        if not isprime(self.ell):
            raise ValueError(f"residue characteristic must be prime, got {self.ell}")
        if self.e < 1 or self.f < 1:
            raise ValueError(f"e and f must be positive, got e={self.e}, f={self.f}")

    @property
    def residue_field_size(self) -> int:
        return self.ell**self.f


def _ell_exponents(ell: int, limit: int):
    """t >= 0 with phi(ell^t) <= limit."""
    t = 0
    while t == 0 or int(totient(ell**t)) <= limit:
        yield t
        t += 1


def roots_of_unity_bound(F: LocalFieldParams) -> int:
    t = max(t for t in _ell_exponents(F.ell, F.e) if F.e % int(totient(F.ell**t)) == 0)
    return (F.ell**F.f - 1) * F.ell**t


@dataclass(frozen=True)
class MBound:
    """An exponent together with its (possibly partial) factorisation.

    ``factors`` holds primes; ``cofactor`` is whatever resisted cheap
    factoring (1 when the factorisation is complete).
    """

    value: int
    degree_bound: int
    factors: dict = field(default_factory=dict)
    cofactor: int = 1

    @property
    def fully_factored(self) -> bool:
        return self.cofactor == 1

    def factored_str(self) -> str:
        parts = [f"{p}^{k}" if k > 1 else str(p) for p, k in sorted(self.factors.items())]
        if self.cofactor != 1:
            parts.append(f"[{self.cofactor}]")
        return " * ".join(parts) or "1"


def m_bound_value(n: int, F: LocalFieldParams) -> int:
    """lcm of u * l^t over gcd(u, l) = 1, ord_u(l) * phi(l^t) <= n^2 e f.

    Taking t = 0 admits every u dividing l^j - 1 with j <= n^2 e f, and
    u = 1 admits every l^t with phi(l^t) <= n^2 e f; the lcm of the whole
    admissible set is the product of those two coprime parts.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    B = n * n * F.e * F.f
    u_part = 1
    for j in range(1, B + 1):
        u_part = lcm(u_part, F.ell**j - 1)
    t_max = max(_ell_exponents(F.ell, B))
    return u_part * F.ell**t_max


def _valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def paper_m_bound(n: int, F: LocalFieldParams, factor_limit: int = 2**16) -> MBound:
    value = m_bound_value(n, F)
    B = n * n * F.e * F.f
    ell = F.ell

    # Primes of the u-part divide some l^j - 1 = prod_{d | j} Phi_d(l); a prime p
    # enters with exponent max_j v_p(l^j - 1), computed directly.
    primes = {}
    for d in range(1, B + 1):
        block = int(cyclotomic_poly(d, ell))
        for p in factorint(block, limit=factor_limit, use_rho=False, use_pm1=False, use_ecm=False):
            if p not in primes and isprime(p):
                # p | Phi_d(l) forces ord_p(l) | d; avoids factoring p - 1
                primes[p] = next(o for o in divisors(d) if pow(ell, o, p) == 1)
    factors = {}
    t_max = max(_ell_exponents(ell, B))
    if t_max:
        factors[ell] = t_max
    for p, o in sorted(primes.items()):
        factors[p] = max(_valuation(ell**j - 1, p) for j in range(o, B + 1, o))
    known = 1
    for p, k in factors.items():
        known *= p**k
    cofactor, r = divmod(value, known)
    assert r == 0
    return MBound(value, B, factors, cofactor)

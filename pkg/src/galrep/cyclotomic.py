"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored as coefficient vectors in the power basis
1, z, ..., z^(phi(N)-1) where z = exp(2*pi*i/N), reduced modulo the
N-th cyclotomic polynomial.  Nothing here touches floating point except
``CycQ.to_complex``, which exists for display and numeric cross-checks.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from sympy import cyclotomic_poly, totient
from sympy.abc import x as _x

from . import polynomial as P


@lru_cache(maxsize=None)
def phi(N: int) -> int:
    return int(totient(N))


@lru_cache(maxsize=None)
def cyclotomic_coeffs(N: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_N, lowest degree first."""
    if N < 1:
        raise ValueError(f"cyclotomic order must be positive, got {N}")
    coeffs = cyclotomic_poly(N, _x, polys=True).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


@lru_cache(maxsize=None)
def _reduction_table(N: int) -> tuple[tuple[Fraction, ...], ...]:
    # row k holds z^(phi + k) written in the reduced basis, for 0 <= k < phi - 1
    d = phi(N)
    phi_n = cyclotomic_coeffs(N)
    rows = []
    cur = [Fraction(-c) for c in phi_n[:d]]  # z^d = -(lower terms of Phi_N)
    for _ in range(max(d - 1, 0)):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(d):
                cur[i] -= top * phi_n[i]
    return tuple(rows)


def _reduce(raw, N: int) -> tuple[Fraction, ...]:
    d = phi(N)
    phi_n = cyclotomic_coeffs(N)
    coeffs = [Fraction(c) for c in raw]
    if len(coeffs) > 2 * d - 1:
        # long inputs (e.g. z^k with k >= 2*phi) go through plain division first
        _, coeffs = P.divmod_(coeffs, [Fraction(c) for c in phi_n], Fraction(0))
        coeffs = list(coeffs)
    out = coeffs[:d] + [Fraction(0)] * (d - min(len(coeffs), d))
    table = _reduction_table(N)
    for k, c in enumerate(coeffs[d:]):
        if c:
            for i, t in enumerate(table[k]):
                if t:
                    out[i] += c * t
    return tuple(out)


def _as_fraction(value) -> Fraction:
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class CycQ:
    """An element of Q(zeta_N) in reduced power-basis form.

    Construct from raw polynomial coefficients with :func:`cyclo_reduce`;
    the constructor itself expects an already reduced vector of length
    phi(N).  Plain ints and Fractions coerce into any order when mixed
    with a CycQ.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs):
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        if len(coeffs) != phi(order):
            raise ValueError(
                f"expected {phi(order)} coefficients for order {order}, got {len(coeffs)}"
            )
        self.order = order
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def _raw(cls, order, coeffs):
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, value, N: int) -> "CycQ":
        coeffs = [Fraction(0)] * phi(N)
        coeffs[0] = _as_fraction(value)
        return cls._raw(N, tuple(coeffs))

    @classmethod
    def zero(cls, N: int) -> "CycQ":
        return cls.rational(0, N)

    @classmethod
    def one(cls, N: int) -> "CycQ":
        return cls.rational(1, N)

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> "CycQ":
        """z^k for the primitive root z = exp(2 pi i / N)."""
        k %= N
        return cyclo_reduce([0] * k + [1], N)

    def _coerce(self, other):
        if isinstance(other, CycQ):
            if other.order != self.order:
                raise ValueError(
                    f"cannot mix cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return CycQ.rational(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycQ._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycQ._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycQ._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycQ._raw(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) == 1:
            return CycQ._raw(self.order, (a[0] * b[0],))
        prod = [Fraction(0)] * (2 * len(a) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycQ._raw(self.order, _reduce(prod, self.order))

    __rmul__ = __mul__

    def inverse(self) -> "CycQ":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        if len(self.coeffs) == 1:
            return CycQ._raw(self.order, (1 / self.coeffs[0],))
        modulus = [Fraction(c) for c in cyclotomic_coeffs(self.order)]
        g, s, _ = P.xgcd(list(self.coeffs), modulus, Fraction(0), Fraction(1))
        # Phi_N is irreducible, so g is a nonzero constant
        return cyclo_reduce([c / g[0] for c in s], self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycQ._raw(self.order, tuple(a / other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycQ.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, CycQ):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.coeffs))
        return self._hash

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def lift(self, L: int) -> "CycQ":
        """Image under the embedding Q(zeta_N) -> Q(zeta_L), N | L."""
        if L % self.order:
            raise ValueError(f"order {self.order} does not divide {L}")
        step = L // self.order
        raw = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            raw[i * step] = c
        return cyclo_reduce(raw, L)

    def to_complex(self, k: int = 1) -> complex:
        """Value under the embedding z -> exp(2 pi i k / N)."""
        z = cmath.exp(2j * cmath.pi * k / self.order)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"CycQ({self.order}, [{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = f"z{self.order}" if i == 1 else f"z{self.order}^{i}"
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def cyclo_reduce(raw_coeffs, N: int) -> CycQ:
    """Reduce a polynomial in zeta_N (coefficients lowest degree first)."""
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"cyclotomic order must be a positive integer, got {N!r}")
    raw = list(raw_coeffs) or [0]
    return CycQ._raw(N, _reduce(raw, N))

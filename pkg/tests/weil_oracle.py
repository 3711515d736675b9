"""Brute-force Weil polynomial scan used as an independent check.

Candidates: every monic integer polynomial inside the binomial box with
constant term +-Q^(d/2).  A batched float eigenvalue pass discards
polynomials with a root far off the circle (margin far above float
error, even for fourfold roots), and survivors are certified by mpmath
root finding on the squarefree part, doubling the precision until each
root is clearly on or clearly off the circle.
"""

from functools import lru_cache
from math import comb, isqrt

import mpmath
import numpy as np
from sympy import Poly, sqf_part, symbols

_x = symbols("x")
MARGIN = 0.05


def box(q, w, d):
    Q = q**w
    bounds = [isqrt(comb(d, i) ** 2 * Q**i) for i in range(d + 1)]
    if d % 2 and isqrt(Q) ** 2 != Q:
        return None
    a0 = Q ** (d // 2) * (isqrt(Q) if d % 2 else 1)
    ranges = [range(-bounds[i], bounds[i] + 1) for i in range(1, d)]
    return a0, ranges


def box_size(q, w, d):
    b = box(q, w, d)
    if b is None:
        return 0
    n = 2
    for r in b[1]:
        n *= len(r)
    return n


def _grids(ranges):
    """Blocks of the coefficient box as float arrays, one block per a_(d-1)."""
    if not ranges:
        yield np.zeros((1, 0))
        return
    rest = [np.arange(r.start, r.stop, dtype=float) for r in ranges[1:]]
    tail = (
        np.stack(np.meshgrid(*rest, indexing="ij"), axis=-1).reshape(-1, len(rest))
        if rest
        else np.zeros((1, 0))
    )
    for a in ranges[0]:
        yield np.hstack([np.full((len(tail), 1), float(a)), tail])


def _survivors(q, w, d):
    b = box(q, w, d)
    if b is None:
        return
    a0, ranges = b
    Q = float(q**w)
    for sign in (1, -1):
        for mid in _grids(ranges):
            coeffs = np.hstack([mid, np.full((len(mid), 1), float(sign * a0))])
            # companion matrices of x^d + c_1 x^(d-1) + ... + c_d
            comp = np.zeros((len(mid), d, d))
            comp[:, 0, :] = -coeffs
            for i in range(1, d):
                comp[:, i, i - 1] = 1.0
            roots = np.linalg.eigvals(comp)
            dev = np.abs(np.abs(roots) ** 2 - Q) / Q
            keep = np.all(dev < MARGIN, axis=1)
            for row in coeffs[keep]:
                yield [1] + [int(round(c)) for c in row]


def certify(coeffs, Q, max_dps=2000):
    """True iff every root of the integer polynomial has |root|^2 = Q."""
    sf = Poly(sqf_part(Poly(coeffs, _x).as_expr()), _x).all_coeffs()
    sf = [int(c) for c in sf]
    if len(sf) == 1:
        return True
    dps = 30
    while dps <= max_dps:
        with mpmath.workdps(dps):
            try:
                roots = mpmath.polyroots(sf, maxsteps=100 + 10 * dps, extraprec=dps)
            except mpmath.libmp.NoConvergence:
                dps *= 2
                continue
            devs = [abs(abs(r) ** 2 - Q) / Q for r in roots]
            if all(x < mpmath.mpf(10) ** (-dps // 2) for x in devs):
                return True
            if any(x > mpmath.mpf(10) ** (-dps // 4) for x in devs):
                return False
        dps *= 2
    raise RuntimeError(f"oracle undecided for {coeffs}")


@lru_cache(maxsize=None)
def oracle_weil(q, w, d):
    """Sorted tuple of coefficient tuples (leading first)."""
    Q = q**w
    return tuple(sorted(tuple(c) for c in _survivors(q, w, d) if certify(c, Q)))

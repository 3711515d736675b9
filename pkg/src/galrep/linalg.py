"""Square matrices over Q(zeta_N): characteristic polynomials, eigenvalue
powering without eigenvalues, and conjugacy via invariant factors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import divisors

from . import polynomial as P
from .cyclotomic import CycQ


def _entry(value, N: int) -> CycQ:
    if isinstance(value, CycQ):
        if value.order != N:
            raise ValueError(f"entry of order {value.order} in a matrix of order {N}")
        return value
    return CycQ.rational(value, N)


class Matrix:
    """Immutable n x n matrix with entries in a single field Q(zeta_N).

    ``rows`` may mix CycQ, int and Fraction entries; if ``order`` is not
    given it is read off the CycQ entries (defaulting to 1).
    """

    __slots__ = ("rows", "n", "order")

    def __init__(self, rows, order: int | None = None):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        if order is None:
            orders = {e.order for r in rows for e in r if isinstance(e, CycQ)}
            if len(orders) > 1:
                raise ValueError(f"entries have mixed cyclotomic orders {sorted(orders)}")
            order = orders.pop() if orders else 1
        self.rows = tuple(tuple(_entry(e, order) for e in r) for r in rows)
        self.n = n
        self.order = order

    @classmethod
    def _from_rows(cls, rows, order):
        obj = object.__new__(cls)
        obj.rows = tuple(tuple(r) for r in rows)
        obj.n = len(obj.rows)
        obj.order = order
        return obj

    @classmethod
    def identity(cls, n: int, N: int = 1) -> "Matrix":
        return cls.scalar(1, n, N)

    @classmethod
    def scalar(cls, value, n: int, N: int = 1) -> "Matrix":
        zero, c = CycQ.zero(N), _entry(value, N)
        return cls._from_rows([[c if i == j else zero for j in range(n)] for i in range(n)], N)

    @classmethod
    def diag(cls, values, N: int | None = None) -> "Matrix":
        values = list(values)
        if N is None:
            N = next((v.order for v in values if isinstance(v, CycQ)), 1)
        zero = CycQ.zero(N)
        n = len(values)
        return cls([[values[i] if i == j else zero for j in range(n)] for i in range(n)], N)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: "Matrix"):
        if self.n != other.n or self.order != other.order:
            raise ValueError(
                f"shape/order mismatch: {self.n}x{self.n} over Q(z{self.order}) "
                f"vs {other.n}x{other.n} over Q(z{other.order})"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix._from_rows(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)], self.order
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix._from_rows(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)], self.order
        )

    def __neg__(self):
        return Matrix._from_rows([[-a for a in r] for r in self.rows], self.order)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return self @ c
        c = _entry(c, self.order)
        return Matrix._from_rows([[a * c for a in r] for r in self.rows], self.order)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        zero = CycQ.zero(self.order)
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix._from_rows(out, self.order)

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = Matrix.identity(self.n, self.order)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.order == other.order and self.rows == other.rows

    def __hash__(self):
        return hash((self.order, self.rows))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows)
        return f"Matrix([{body}], order={self.order})"

    def trace(self) -> CycQ:
        acc = CycQ.zero(self.order)
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def transpose(self) -> "Matrix":
        return Matrix._from_rows(list(zip(*self.rows)), self.order)

    def det(self) -> CycQ:
        a = [list(r) for r in self.rows]
        n = self.n
        det = CycQ.one(self.order)
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c]), None)
            if piv is None:
                return CycQ.zero(self.order)
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = -det
            p = a[c][c]
            det = det * p
            inv = p.inverse()
            for r in range(c + 1, n):
                if a[r][c]:
                    f = a[r][c] * inv
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return det

    def inverse(self) -> "Matrix":
        n = self.n
        one, zero = CycQ.one(self.order), CycQ.zero(self.order)
        a = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c]), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            a[c], a[piv] = a[piv], a[c]
            inv = a[c][c].inverse()
            a[c] = [x * inv for x in a[c]]
            for r in range(n):
                if r != c and a[r][c]:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return Matrix._from_rows([r[n:] for r in a], self.order)

    def is_invertible(self) -> bool:
        return bool(self.det())

    def rank(self) -> int:
        return rank(self.rows)


def rank(rows) -> int:
    """Rank of a (possibly rectangular) list of rows of field elements."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    m, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c].inverse() if hasattr(a[r][c], "inverse") else 1 / a[r][c]
        for i in range(r + 1, m):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r


@dataclass(frozen=True)
class CharPoly:
    """Monic x^n + a_{n-1} x^{n-1} + ... + a_0 over Q(zeta_N).

    ``coeffs`` holds a_0, ..., a_{n-1}.
    """

    n: int
    order: int
    coeffs: tuple

    @classmethod
    def from_full(cls, full) -> "CharPoly":
        """From a monic coefficient list, lowest degree first."""
        full = list(full)
        if not full or full[-1] != 1:
            raise ValueError("polynomial must be monic")
        order = full[-1].order if isinstance(full[-1], CycQ) else 1
        order = next((c.order for c in full if isinstance(c, CycQ)), order)
        coeffs = tuple(_entry(c, order) for c in full[:-1])
        return cls(len(coeffs), order, coeffs)

    def full(self) -> list:
        return list(self.coeffs) + [CycQ.one(self.order)]

    def elementary(self, i: int) -> CycQ:
        """e_i = (-1)^i a_{n-i}: the trace of g on the i-th exterior power."""
        if i == 0:
            return CycQ.one(self.order)
        if i > self.n:
            return CycQ.zero(self.order)
        c = self.coeffs[self.n - i]
        return c if i % 2 == 0 else -c

    def trace(self) -> CycQ:
        return self.elementary(1)

    def det(self) -> CycQ:
        return self.elementary(self.n)

    def at_matrix(self, M: Matrix) -> Matrix:
        """Evaluate at a square matrix (Horner)."""
        acc = Matrix.scalar(0, M.n, M.order)
        ident = Matrix.identity(M.n, M.order)
        for c in reversed(self.full()):
            acc = acc @ M + ident * c
        return acc

    def __str__(self):
        terms = []
        for k, c in reversed(list(enumerate(self.full()))):
            if not c:
                continue
            mono = "" if k == 0 else "x" if k == 1 else f"x^{k}"
            coef = str(c) if c.is_rational() else f"({c})"
            if not mono:
                terms.append(coef)
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{coef}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def char_poly(M: Matrix) -> CharPoly:
    """Characteristic polynomial via reduction to upper Hessenberg form.

    Similarity transforms only; pivots found by row/column swaps, so
    singular inputs are fine.
    """
    n, N = M.n, M.order
    zero, one = CycQ.zero(N), CycQ.one(N)
    H = [list(r) for r in M.rows]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for row in H:
                row[piv], row[m] = row[m], row[piv]
        inv = H[m][m - 1].inverse()
        for i in range(m + 1, n):
            if not H[i][m - 1]:
                continue
            u = H[i][m - 1] * inv
            H[i] = [a - u * b for a, b in zip(H[i], H[m])]
            for row in H:
                row[m] = row[m] + u * row[i]

    # p_k = char poly of the leading k x k block
    polys = [[one]]
    for k in range(1, n + 1):
        kk = k - 1
        p = P.sub(P.mul([zero, one], polys[k - 1], zero), P.scale(polys[k - 1], H[kk][kk]), zero)
        prod = one
        for i in range(kk - 1, -1, -1):
            prod = prod * H[i + 1][i]
            if not prod:
                break
            p = P.sub(p, P.scale(polys[i], prod * H[i][kk]), zero)
        polys.append(p)
    full = polys[n]
    full = full + [zero] * (n + 1 - len(full))
    return CharPoly(n, N, tuple(full[:-1]))


def power_charpoly(p: CharPoly, K: int) -> CharPoly:
    """Characteristic polynomial whose roots are the K-th powers of p's roots.

    Works in Q(zeta_N)[x]/(p): x^K mod p by repeated squaring, then the
    characteristic polynomial of multiplication by that residue.
    Multiplicities carry over, so (x - a)^m maps to (x - a^K)^m.
    """
    if K < 1:
        raise ValueError(f"power must be positive, got {K}")
    if K == 1:
        return p
    N, n = p.order, p.n
    zero, one = CycQ.zero(N), CycQ.one(N)
    f = p.full()
    r = P.powmod([zero, one], K, f, zero, one)
    cols = []
    cur = r
    for _ in range(n):
        cols.append(cur + [zero] * (n - len(cur)))
        cur = P.rem([zero] + cur, f, zero)
    mult = Matrix._from_rows([list(row) for row in zip(*cols)], N)
    return char_poly(mult)


def invariant_factors(M: Matrix) -> tuple:
    """Nonunit invariant factors of xI - M, each monic, in divisibility order.

    Smith normal form over Q(zeta_N)[x]; two matrices are conjugate over the
    field exactly when these tuples agree.
    """
    n, N = M.n, M.order
    zero, one = CycQ.zero(N), CycQ.one(N)
    A = [[P.trim([-M.rows[i][j], one] if i == j else [-M.rows[i][j]]) for j in range(n)] for i in range(n)]
    diag = []
    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if A[i][j] and (best is None or len(A[i][j]) < len(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            i, j = best
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
            piv = A[t][t]
            clean = True
            for i in range(t + 1, n):
                if A[i][t]:
                    q, r = P.divmod_(A[i][t], piv, zero)
                    A[i] = [P.sub(a, P.mul(q, b, zero), zero) for a, b in zip(A[i], A[t])]
                    clean = clean and not r
            for j in range(t + 1, n):
                if A[t][j]:
                    q, r = P.divmod_(A[t][j], piv, zero)
                    for row in A:
                        row[j] = P.sub(row[j], P.mul(q, row[t], zero), zero)
                    clean = clean and not r
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if P.rem(A[i][j], piv, zero)),
                None,
            )
            if bad is None:
                break
            A[t] = [P.add(a, b, zero) for a, b in zip(A[t], A[bad])]
        diag.append(P.monic(A[t][t]) if A[t][t] else [])
    return tuple(tuple(d) for d in diag if len(d) > 1)


def are_conjugate(A: Matrix, B: Matrix) -> bool:
    if A.n != B.n:
        raise ValueError(f"dimension mismatch: {A.n} vs {B.n}")
    if A.order != B.order:
        raise ValueError(f"cyclotomic order mismatch: {A.order} vs {B.order}")
    if A == B:
        return True
    if char_poly(A) != char_poly(B):
        return False
    return invariant_factors(A) == invariant_factors(B)


def root_of_unity_order(a: CycQ) -> int | None:
    """Multiplicative order of ``a`` if it is a root of unity, else None.

    Roots of unity in Q(zeta_N) have order dividing N (N even) or 2N (N odd).
    """
    if not a:
        raise ValueError("zero is not a unit")
    N = a.order
    bound = N if N % 2 == 0 else 2 * N
    for d in divisors(bound):
        if a**d == 1:
            return d
    return None


def random_matrix(rng, n: int, N: int = 1, size: int = 3, den: int = 2) -> Matrix:
    """Matrix with small random rational coordinates in each basis direction."""
    from .cyclotomic import phi

    def entry():
        return CycQ(N, [Fraction(rng.randint(-size, size), rng.randint(1, den)) for _ in range(phi(N))])

    return Matrix._from_rows([[entry() for _ in range(n)] for _ in range(n)], N)


def random_invertible(rng, n: int, N: int = 1, size: int = 3, den: int = 2) -> Matrix:
    while True:
        M = random_matrix(rng, n, N, size, den)
        if M.is_invertible():
            return M

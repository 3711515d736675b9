"""Finite-quotient model of the Frobenius test-set construction.

A finite group stands in for the Galois group of a finite extension, a
table of places assigns each place a Frobenius element, and
representations live over Z/l^k.  The pipeline: conjugacy classes, a
covering set T of places, then a check that traces at T pin down traces
everywhere together with the module-generation condition over Z/l^k.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from sympy import factorint


# --- groups -----------------------------------------------------------------


@dataclass(frozen=True)
class FiniteGroup:
    """Multiplication table on indices 0..|G|-1; ``table[a][b]`` is a*b."""

    table: tuple
    labels: tuple = ()
    identity: int = 0
    generators: tuple = ()

    def __post_init__(self):
        table = tuple(tuple(r) for r in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(n)))
        if any(len(r) != n or any(not 0 <= x < n for x in r) for r in table):
            raise ValueError("multiplication table must be square with valid entries")

    @classmethod
    def from_table(cls, table, labels=(), generators=(), check: bool = True) -> "FiniteGroup":
        table = [list(r) for r in table]
        n = len(table)
        ident = next((e for e in range(n) if all(table[e][a] == a == table[a][e] for a in range(n))), None)
        if ident is None:
            raise ValueError("table has no identity element")
        G = cls(table, tuple(labels), ident, tuple(generators) or tuple(range(n)))
        if check:
            G.verify()
        return G

    @classmethod
    def from_permutations(cls, gens) -> "FiniteGroup":
        """Group generated by permutations of 0..d-1 (tuples of images)."""
        gens = [tuple(g) for g in gens]
        d = len(gens[0])
        ident = tuple(range(d))
        elems, index = [ident], {ident: 0}
        queue = deque([ident])
        while queue:
            a = queue.popleft()
            for g in gens:
                b = _compose(a, g)
                if b not in index:
                    index[b] = len(elems)
                    elems.append(b)
                    queue.append(b)
        table = [[index[_compose(a, b)] for b in elems] for a in elems]
        return cls(table, tuple(elems), 0, tuple(index[g] for g in gens))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def verify(self):
        n, t = self.order, self.table
        for a in range(n):
            if self.identity not in t[a]:
                raise ValueError(f"element {a} has no inverse")
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise ValueError(f"not associative at ({a}, {b}, {c})")

    def index_of(self, label) -> int:
        return self.labels.index(tuple(label) if isinstance(label, list) else label)


def _compose(a, b):
    # (a * b)(x) = a(b(x)), so permutation matrices give a homomorphism
    return tuple(a[x] for x in b)


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup.from_permutations([tuple((i + 1) % n for i in range(n))])


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n (D_4 has order 8)."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return FiniteGroup.from_permutations([rot, ref])


def symmetric_group(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup.from_permutations([(0,)])
    swap = (1, 0) + tuple(range(2, n))
    cycle = tuple((i + 1) % n for i in range(n))
    return FiniteGroup.from_permutations([swap, cycle])


def conjugacy_classes(G: FiniteGroup) -> list[list[int]]:
    """Classes as sorted index lists, ordered by their least element."""
    seen = [False] * G.order
    classes = []
    inv = [G.inverse(h) for h in range(G.order)]
    for g in range(G.order):
        if seen[g]:
            continue
        cls = sorted({G.mul(G.mul(h, g), inv[h]) for h in range(G.order)})
        for x in cls:
            seen[x] = True
        classes.append(cls)
    return classes


# --- places and covers --------------------------------------------------------


@dataclass(frozen=True)
class PlaceTable:
    places: tuple

    def __post_init__(self):
        object.__setattr__(self, "places", tuple((str(l), int(e)) for l, e in self.places))
        labels = [l for l, _ in self.places]
        if len(set(labels)) != len(labels):
            raise ValueError("place labels must be distinct")

    def element(self, label: str) -> int:
        for l, e in self.places:
            if l == label:
                return e
        raise KeyError(f"unknown place {label!r}")

    def validate(self, G: FiniteGroup):
        for l, e in self.places:
            if not 0 <= e < G.order:
                raise ValueError(f"place {l!r} points at element {e}, group has order {G.order}")


class CoverError(ValueError):
    def __init__(self, class_index: int, elements):
        super().__init__(
            f"conjugacy class {class_index} (elements {list(elements)}) is not the Frobenius of any place"
        )
        self.class_index = class_index
        self.elements = list(elements)


def _class_of(classes):
    where = {}
    for i, cls in enumerate(classes):
        for g in cls:
            where[g] = i
    return where


def frobenius_cover(G: FiniteGroup, P: PlaceTable) -> list[str]:
    """Greedy set T of places whose Frobenius elements meet every class."""
    P.validate(G)
    classes = conjugacy_classes(G)
    where = _class_of(classes)
    hit = {where[e] for _, e in P.places}
    for i, cls in enumerate(classes):
        if i not in hit:
            raise CoverError(i, cls)
    # each place covers a single class, so the greedy pass takes the first
    # place (in table order) meeting each still-uncovered class
    uncovered = set(range(len(classes)))
    T = []
    for label, e in P.places:
        c = where[e]
        if c in uncovered:
            uncovered.discard(c)
            T.append(label)
    return T


# --- representations over Z/l^k ----------------------------------------------


def _prime_power(modulus: int):
    f = factorint(modulus)
    if len(f) != 1:
        raise ValueError(f"modulus must be a prime power, got {modulus}")
    (p, k), = f.items()
    return p, k


def _matmul(a, b, m):
    n = len(a)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(n)) % m for j in range(n)) for i in range(n)
    )


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _det_mod(a, m):
    p, _ = _prime_power(m)
    # invertible mod p^k iff invertible mod p
    a = [[x % p for x in r] for r in a]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        a[c], a[piv] = a[piv], a[c]
        det = det * a[c][c] % p
        inv = pow(a[c][c], -1, p)
        for r in range(c + 1, n):
            f = a[r][c] * inv % p
            a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return det


@dataclass(frozen=True)
class ModRep:
    """One matrix over Z/modulus per group element, multiplicative."""

    group: FiniteGroup
    modulus: int
    matrices: tuple
    ell: int = field(init=False)
    k: int = field(init=False)

    def __post_init__(self):
        ell, k = _prime_power(self.modulus)
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "k", k)
        mats = tuple(tuple(tuple(x % self.modulus for x in r) for r in M) for M in self.matrices)
        object.__setattr__(self, "matrices", mats)
        if len(mats) != self.group.order:
            raise ValueError(f"need {self.group.order} matrices, got {len(mats)}")

    @property
    def n(self) -> int:
        return len(self.matrices[0])

    @classmethod
    def from_generator_images(cls, G: FiniteGroup, images: dict, modulus: int) -> "ModRep":
        """Extend images of generating elements to the whole group and verify."""
        images = {int(g): tuple(tuple(x % modulus for x in r) for r in M) for g, M in images.items()}
        n = len(next(iter(images.values())))
        mats = [None] * G.order
        mats[G.identity] = _identity(n)
        queue = deque([G.identity])
        while queue:
            a = queue.popleft()
            for g, M in images.items():
                b = G.mul(a, g)
                if mats[b] is None:
                    mats[b] = _matmul(mats[a], M, modulus)
                    queue.append(b)
        if any(m is None for m in mats):
            raise ValueError("generator images do not generate the group")
        rep = cls(G, modulus, tuple(mats))
        rep.verify()
        return rep

    def verify(self, exhaustive_limit: int = 200):
        G, m = self.group, self.modulus
        if self.matrices[G.identity] != _identity(self.n):
            raise ValueError("identity must map to the identity matrix")
        elems = range(G.order)
        pairs = (
            [(a, b) for a in elems for b in elems]
            if G.order <= exhaustive_limit
            else [(a, G.generators[j % len(G.generators)]) for j, a in enumerate(elems)]
        )
        for a, b in pairs:
            if _matmul(self.matrices[a], self.matrices[b], m) != self.matrices[G.mul(a, b)]:
                raise ValueError(f"not multiplicative at ({a}, {b})")

    def trace(self, g: int) -> int:
        M = self.matrices[g]
        return sum(M[i][i] for i in range(self.n)) % self.modulus


def trivial_modrep(G: FiniteGroup, modulus: int, n: int = 1) -> ModRep:
    return ModRep(G, modulus, tuple(_identity(n) for _ in range(G.order)))


def permutation_modrep(G: FiniteGroup, modulus: int) -> ModRep:
    """Natural permutation representation of a group built from permutations."""
    d = len(G.labels[0])
    mats = []
    for perm in G.labels:
        mats.append(tuple(tuple(int(perm[j] == i) for j in range(d)) for i in range(d)))
    return ModRep(G, modulus, tuple(mats))


def sign_modrep(G: FiniteGroup, modulus: int) -> ModRep:
    def sign(perm):
        s, seen = 1, set()
        for i in range(len(perm)):
            if i in seen:
                continue
            j, length = i, 0
            while j not in seen:
                seen.add(j)
                j = perm[j]
                length += 1
            s *= -1 if length % 2 == 0 else 1
        return s

    return ModRep(G, modulus, tuple(((sign(p),),) for p in G.labels))


def augmentation_modrep(G: FiniteGroup, modulus: int) -> ModRep:
    """Action on the sum-zero lattice, basis e_i - e_(d-1)."""
    d = len(G.labels[0])
    mats = []
    for perm in G.labels:
        cols = []
        for i in range(d - 1):
            col = [0] * (d - 1)
            a, c = perm[i], perm[d - 1]
            if a < d - 1:
                col[a] += 1
            if c < d - 1:
                col[c] -= 1
            cols.append(col)
        mats.append(tuple(tuple(cols[j][i] for j in range(d - 1)) for i in range(d - 1)))
    return ModRep(G, modulus, tuple(mats))


def direct_sum(*reps: ModRep) -> ModRep:
    G, m = reps[0].group, reps[0].modulus
    n = sum(r.n for r in reps)
    mats = []
    for g in range(G.order):
        M = [[0] * n for _ in range(n)]
        off = 0
        for r in reps:
            for i, row in enumerate(r.matrices[g]):
                M[off + i][off : off + r.n] = row
            off += r.n
        mats.append(M)
    return ModRep(G, m, tuple(mats))


def conjugate_modrep(rep: ModRep, X) -> ModRep:
    """X rho X^-1 for X invertible mod the modulus."""
    m = rep.modulus
    X = tuple(tuple(x % m for x in r) for r in X)
    Xinv = _inverse_mod(X, m)
    return ModRep(rep.group, m, tuple(_matmul(_matmul(X, M, m), Xinv, m) for M in rep.matrices))


def _inverse_mod(X, m):
    n = len(X)
    a = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(X)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] % _prime_power(m)[0]), None)
        if piv is None:
            raise ValueError("matrix is not invertible mod the modulus")
        a[c], a[piv] = a[piv], a[c]
        inv = pow(a[c][c], -1, m)
        a[c] = [x * inv % m for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [(x - f * y) % m for x, y in zip(a[r], a[c])]
    return tuple(tuple(r[n:]) for r in a)


def random_invertible_mod(rng, n: int, modulus: int):
    while True:
        X = [[rng.randrange(modulus) for _ in range(n)] for _ in range(n)]
        if _det_mod(X, modulus):
            return X


# --- spans over Z/l^k ---------------------------------------------------------


def span_length(vectors, p: int, k: int) -> int:
    """log_p of the size of the Z/p^k-span of the given vectors.

    Elimination with a pivot of least p-adic valuation; each pivot of
    valuation v splits off a cyclic summand of order p^(k - v).
    """
    m = p**k
    rows = [[x % m for x in v] for v in vectors]
    rows = [r for r in rows if any(r)]
    total = 0
    while rows:
        best = None
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                if x:
                    v = _val(x, p)
                    if best is None or v < best[0]:
                        best = (v, i, j)
                        if v == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        v, i, j = best
        piv = rows.pop(i)
        unit = piv[j] // p**v
        uinv = pow(unit, -1, m)
        total += k - v
        new_rows = []
        for r in rows:
            if r[j]:
                c = (r[j] // p**v) * uinv % m
                r = [(x - c * y) % m for x, y in zip(r, piv)]
            r = r[:j] + r[j + 1 :]
            if any(r):
                new_rows.append(r)
        rows = new_rows
    return total


def _val(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _flat(rep1: ModRep, rep2: ModRep, g: int):
    return [x for r in rep1.matrices[g] for x in r] + [x for r in rep2.matrices[g] for x in r]


@dataclass(frozen=True)
class TraceCheck:
    holds: bool
    traces_agree_on_T: bool
    traces_agree_everywhere: bool
    distinguishing_place: str | None
    distinguishing_class: int | None
    span_equal: bool
    span_length_T: int
    span_length_all: int
    representative_span_equal: bool

    def __bool__(self):
        return self.holds


def trace_determination_check(rho1: ModRep, rho2: ModRep, T, P: PlaceTable) -> TraceCheck:
    """Does agreement of traces at T force agreement everywhere?

    Also compares the span of rho1(g) + rho2(g) over the full classes that
    meet T with the span over all of G (the generation condition), and,
    as a diagnostic only, the span of the Frobenius elements of T alone.
    """
    G = rho1.group
    if rho2.group != G:
        raise ValueError("representations are defined on different groups")
    if rho1.modulus != rho2.modulus:
        raise ValueError(f"moduli differ: {rho1.modulus} vs {rho2.modulus}")
    P.validate(G)
    classes = conjugacy_classes(G)
    where = _class_of(classes)
    T = list(T)
    met = {where[P.element(v)] for v in T}
    missing = [i for i in range(len(classes)) if i not in met]
    if missing:
        raise CoverError(missing[0], classes[missing[0]])

    on_T = True
    dist_place = dist_class = None
    for v in T:
        g = P.element(v)
        if rho1.trace(g) != rho2.trace(g):
            on_T = False
            dist_place, dist_class = v, where[g]
            break
    everywhere = all(rho1.trace(g) == rho2.trace(g) for g in range(G.order))
    holds = (not on_T) or everywhere

    p, k = rho1.ell, rho1.k
    met_elems = [g for i in sorted(met) for g in classes[i]]
    len_T = span_length([_flat(rho1, rho2, g) for g in met_elems], p, k)
    len_all = span_length([_flat(rho1, rho2, g) for g in range(G.order)], p, k)
    len_rep = span_length([_flat(rho1, rho2, P.element(v)) for v in T], p, k)
    return TraceCheck(
        holds=holds,
        traces_agree_on_T=on_T,
        traces_agree_everywhere=everywhere,
        distinguishing_place=dist_place,
        distinguishing_class=dist_class,
        span_equal=len_T == len_all,
        span_length_T=len_T,
        span_length_all=len_all,
        representative_span_equal=len_rep == len_all,
    )

"""Deciding potential equivalence of matrix representations.

Two representations are potentially equivalent when they agree on a
finite-index subgroup.  Every test here reduces to characteristic
polynomials of powers: if some power of g1 is conjugate to the same power
of g2, then the eigenvalue ratios are roots of unity whose orders divide a
bound depending only on n and the coefficient field, and that single
power already works.

Words over generators are tuples of letters; letter ``i >= 0`` is
generator i and ``-(i + 1)`` is its inverse.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import lcm

from sympy import divisors, totient

from .cyclotomic import CycQ, phi
from .linalg import CharPoly, Matrix, char_poly, power_charpoly
from .modular import power_charpoly_mod, reduce_poly, split_primes

DEFAULT_CLOSURE_CAP = 2000


class Kind(str, enum.Enum):
    SINGLE = "single"
    FREE = "free"
    FINITE = "finite"


class Status(str, enum.Enum):
    EQUIVALENT = "equivalent_with_witness"
    NOT_EQUIVALENT = "not_equivalent"
    UNDECIDED = "undecided_at_depth"


class ClosureTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class MatRep:
    """A representation given by images of generators.

    ``single`` is a Z-representation (one matrix), ``free`` a free group on
    the generators, ``finite`` a finite group whose elements are all the
    products of generators.
    """

    kind: Kind
    generators: tuple
    closure_cap: int = DEFAULT_CLOSURE_CAP

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("a representation needs at least one generator")
        if len({(g.n, g.order) for g in gens}) != 1:
            raise ValueError("generators must share dimension and cyclotomic order")
        if self.kind is Kind.SINGLE and len(gens) != 1:
            raise ValueError(f"kind=single takes exactly one matrix, got {len(gens)}")
        if self.kind is Kind.FINITE:
            for i, g in enumerate(gens):
                if not g.is_invertible():
                    raise ValueError(f"generator {i} is singular")

    @property
    def n(self) -> int:
        return self.generators[0].n

    @property
    def N(self) -> int:
        return self.generators[0].order

    def word_matrix(self, word) -> Matrix:
        result = Matrix.identity(self.n, self.N)
        for letter in word:
            result = result @ _letter(self.generators, letter)
        return result


def _letter(gens, letter: int) -> Matrix:
    i = letter if letter >= 0 else -letter - 1
    if not 0 <= i < len(gens):
        raise IndexError(f"letter {letter} refers to missing generator {i}")
    return gens[i] if letter >= 0 else gens[i].inverse()


@dataclass(frozen=True)
class PEVerdict:
    status: Status
    witness_m: int | None = None
    counterexample: tuple | None = None
    bound: int | None = None
    certificate: dict = field(default_factory=dict, compare=False)

    @property
    def equivalent(self) -> bool:
        return self.status is Status.EQUIVALENT


def m_character(rep: MatRep, word, m: int) -> CycQ:
    """Tr(rho(w)^m)."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return (rep.word_matrix(word) ** m).trace()


@lru_cache(maxsize=None)
def uniform_m_bound(n: int, N: int) -> int:
    """lcm of all M with phi(M) <= n^2 phi(N).

    An eigenvalue ratio of two n x n matrices over Q(zeta_N) has degree at
    most n^2 phi(N) over Q, so a root-of-unity ratio has order in this set.
    """
    if n < 1 or N < 1:
        raise ValueError(f"need n, N >= 1, got n={n}, N={N}")
    B = n * n * phi(N)
    K = 1
    # phi(M) >= sqrt(M/2) bounds the search
    for M in range(1, 2 * B * B + 1):
        if int(totient(M)) <= B:
            K = lcm(K, M)
    return K


# exact comparisons are kept below this power; above it the numbers grow
# too large and agreement is only checked modulo split primes
EXACT_POWER_LIMIT = 2**16


def _same_power(p1: CharPoly, p2: CharPoly, k: int) -> bool:
    return power_charpoly(p1, k) == power_charpoly(p2, k)


def _modular_mismatch(p1: CharPoly, p2: CharPoly, k: int, trace_only: bool = False):
    """A split prime at which the k-th power polynomials (or their traces) differ.

    A mismatch modulo a prime is an exact proof of inequality.
    """
    for P, r in split_primes(p1.order):
        f1 = reduce_poly(p1.full(), P, r)
        f2 = reduce_poly(p2.full(), P, r)
        if f1 is None or f2 is None:
            continue
        g1, g2 = power_charpoly_mod(f1, k, P), power_charpoly_mod(f2, k, P)
        if trace_only:
            g1, g2 = g1[-2:-1], g2[-2:-1]
        if g1 != g2:
            return P
    return None


def elementwise_pe(g1: Matrix, g2: Matrix) -> PEVerdict:
    """Is some power of g1 conjugate to the same power of g2 (semisimple parts)?"""
    if g1.n != g2.n or g1.order != g2.order:
        raise ValueError(
            f"mismatch: {g1.n}x{g1.n} over order {g1.order} vs {g2.n}x{g2.n} over order {g2.order}"
        )
    K0 = uniform_m_bound(g1.n, g1.order)
    p1, p2 = char_poly(g1), char_poly(g2)
    prime = _modular_mismatch(p1, p2, K0)
    if prime is not None:
        return PEVerdict(Status.NOT_EQUIVALENT, bound=K0, certificate={"power": K0, "prime": prime})
    # an exact match at d | K0 implies one at K0; the smallest such d is the witness
    for d in divisors(K0):
        d = int(d)
        if d < K0 and _modular_mismatch(p1, p2, d) is not None:
            continue
        if _same_power(p1, p2, d):
            return PEVerdict(Status.EQUIVALENT, witness_m=d, bound=K0)
    return PEVerdict(Status.NOT_EQUIVALENT, bound=K0, certificate={"power": K0, "prime": None})


def _words(k: int, depth: int, inverses: bool):
    letters = list(range(k)) + ([-(i + 1) for i in range(k)] if inverses else [])
    for length in range(1, depth + 1):
        yield from product(letters, repeat=length)


@dataclass
class Closure:
    """Finite image of the generators: elements, a word for each, and the
    right-multiplication table ``succ[i][j] = index(elements[i] * gen_j)``."""

    elements: list
    words: list
    succ: list


def closure(gen_tuples, cap: int = DEFAULT_CLOSURE_CAP) -> Closure:
    """BFS closure of tuples of matrices under componentwise products.

    ``gen_tuples[j]`` is the j-th generator as a tuple (one matrix per
    representation), so a single call closes the joint image.
    """
    first = gen_tuples[0]
    ident = tuple(Matrix.identity(g.n, g.order) for g in first)
    index = {ident: 0}
    elements, words, succ = [ident], [()], []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        row = []
        for j, gen in enumerate(gen_tuples):
            prod_ = tuple(a @ b for a, b in zip(elements[i], gen))
            k = index.get(prod_)
            if k is None:
                if len(elements) >= cap:
                    raise ClosureTooLarge(f"closure exceeds cap of {cap} elements")
                k = len(elements)
                index[prod_] = k
                elements.append(prod_)
                words.append(words[i] + (j,))
                queue.append(k)
            row.append(k)
        succ.append((i, row))
    table = [None] * len(elements)
    for i, row in succ:
        table[i] = row
    return Closure(elements, words, table)


def _joint_closure(rep1: MatRep, rep2: MatRep) -> Closure:
    cap = min(rep1.closure_cap, rep2.closure_cap)
    return closure(list(zip(rep1.generators, rep2.generators)), cap)


def _element_order(g: tuple, cap: int) -> int:
    ident = tuple(Matrix.identity(m.n, m.order) for m in g)
    cur, k = g, 1
    while cur != ident:
        cur = tuple(a @ b for a, b in zip(cur, g))
        k += 1
        if k > cap:
            raise ClosureTooLarge(f"element order exceeds {cap}")
    return k


def _check_compatible(rep1: MatRep, rep2: MatRep):
    if (rep1.n, rep1.N) != (rep2.n, rep2.N):
        raise ValueError(f"dimension/order mismatch: ({rep1.n}, {rep1.N}) vs ({rep2.n}, {rep2.N})")
    if rep1.kind is not rep2.kind:
        raise ValueError(f"kind mismatch: {rep1.kind.value} vs {rep2.kind.value}")
    if len(rep1.generators) != len(rep2.generators):
        raise ValueError("representations have different numbers of generators")


def pe_decide(rep1: MatRep, rep2: MatRep, depth: int = 3) -> PEVerdict:
    _check_compatible(rep1, rep2)
    if rep1.generators == rep2.generators:
        return PEVerdict(Status.EQUIVALENT, witness_m=1, bound=1)

    if rep1.kind is Kind.SINGLE:
        v = elementwise_pe(rep1.generators[0], rep2.generators[0])
        if v.status is Status.NOT_EQUIVALENT:
            return PEVerdict(v.status, counterexample=(0,), bound=v.bound, certificate=v.certificate)
        return v

    if rep1.kind is Kind.FINITE:
        cl = _joint_closure(rep1, rep2)
        cap = min(rep1.closure_cap, rep2.closure_cap)
        exponent = 1
        for g in cl.elements:
            exponent = lcm(exponent, _element_order(g, cap))
        # the exponent kills every element, so a witness always exists
        for d in divisors(exponent):
            if all((a**d).trace() == (b**d).trace() for a, b in cl.elements):
                return PEVerdict(Status.EQUIVALENT, witness_m=int(d), bound=exponent)
        raise AssertionError("unreachable: the group exponent is a witness")

    # free: bounded search for a word whose K0-power traces differ
    K0 = uniform_m_bound(rep1.n, rep1.N)
    exact = K0 <= EXACT_POWER_LIMIT
    inverses = all(g.is_invertible() for g in rep1.generators + rep2.generators)
    cache1: dict = {(): Matrix.identity(rep1.n, rep1.N)}
    cache2: dict = {(): Matrix.identity(rep2.n, rep2.N)}
    for word in _words(len(rep1.generators), depth, inverses):
        w1 = cache1[word[:-1]] @ _letter(rep1.generators, word[-1])
        w2 = cache2[word[:-1]] @ _letter(rep2.generators, word[-1])
        if len(word) < depth:
            cache1[word], cache2[word] = w1, w2
        c1, c2 = char_poly(w1), char_poly(w2)
        if c1 == c2:
            continue
        if _modular_mismatch(c1, c2, K0, trace_only=True) is not None or (
            exact and power_charpoly(c1, K0).trace() != power_charpoly(c2, K0).trace()
        ):
            return PEVerdict(Status.NOT_EQUIVALENT, counterexample=word, bound=K0)
    agreement = "exact" if exact else "modular"
    return PEVerdict(Status.UNDECIDED, bound=K0, certificate={"depth": depth, "agreement": agreement})


@dataclass(frozen=True)
class LinearCharacter:
    """chi(g) = zeta_L ** exponents[g], indexed like the joint closure."""

    modulus: int
    exponents: tuple
    generator_exponents: tuple
    words: tuple = field(compare=False, default=())

    def value(self, g: int, N: int | None = None) -> CycQ:
        L = self.modulus
        z = CycQ.zeta(L, self.exponents[g])
        return z if N is None else z.lift(N)

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)


def twist_rep(rep: MatRep, generator_values) -> MatRep:
    """rho (x) chi, with chi given by its values on the generators."""
    gens = tuple(g * v for g, v in zip(rep.generators, generator_values))
    return MatRep(rep.kind, gens, rep.closure_cap)


def twist_equivalent_finite(rep1: MatRep, rep2: MatRep) -> LinearCharacter | None:
    """Find a linear character chi with Tr rho2 = chi * Tr rho1 on the group.

    The group is the joint closure of the generator pairs, the smallest
    group through which both representations factor; so the trivial and
    sign representations of Z/2 are compared on Z/2.
    """
    _check_compatible(rep1, rep2)
    if rep1.kind is not Kind.FINITE:
        raise ValueError("twist detection needs kind=finite")
    cap = min(rep1.closure_cap, rep2.closure_cap)
    joint = _joint_closure(rep1, rep2)

    gen_orders = [_element_order(pair, cap) for pair in zip(rep1.generators, rep2.generators)]
    L = lcm(*gen_orders)
    M = lcm(L, rep1.N)
    traces1 = [a.trace().lift(M) for a, _ in joint.elements]
    traces2 = [b.trace().lift(M) for _, b in joint.elements]
    zetas = [CycQ.zeta(M, k * (M // L)) for k in range(L)]

    choices = [range(0, L, L // o) for o in gen_orders]
    for gen_exps in product(*choices):
        values = _extend_character(joint.succ, gen_exps, L)
        if values is None:
            continue
        if all(t2 == zetas[v] * t1 for t1, t2, v in zip(traces1, traces2, values)):
            return LinearCharacter(L, tuple(values), tuple(gen_exps), tuple(joint.words))
    return None


def _extend_character(succ, gen_exps, L):
    """Propagate generator values along the Cayley graph; None if inconsistent."""
    values = [None] * len(succ)
    values[0] = 0
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j, k in enumerate(succ[i]):
            v = (values[i] + gen_exps[j]) % L
            if values[k] is None:
                values[k] = v
                queue.append(k)
            elif values[k] != v:
                return None
    return values

"""Power bounds over local fields.

For each residue characteristic and small ramification data we print the
exponent that kills every root-of-unity ratio of Frobenius eigenvalues,
in factored form so that large cases stay readable.
"""

from galrep import LocalFieldParams, paper_m_bound, roots_of_unity_bound

for ell in (2, 3, 5, 7):
    F = LocalFieldParams(ell)
    print(f"Q_{ell}: roots of unity bound {roots_of_unity_bound(F)}")
    for n in (1, 2, 3):
        b = paper_m_bound(n, F)
        print(f"  n={n}: {b.factored_str()}")

big = paper_m_bound(4, LocalFieldParams(7, 3, 3))
print(f"n=4 over a degree 9 extension of Q_7: {big.value.bit_length()} bits,")
print(f"  {len(big.factors)} primes found, factorisation complete: {big.fully_factored}")

"""Traces of symmetric powers from a characteristic polynomial.

A 2x2 rotation over Q(i) has eigenvalues i and -i. Its m-th power trace,
and every coefficient needed to get it, comes from the characteristic
polynomial alone. We check this against direct matrix powering.
"""

from galrep import Matrix, char_poly, compositions, d_m, m_trace_from_charpoly, newton_coefficient, power_charpoly

g = Matrix([[0, -1], [1, 0]], 4)
p = char_poly(g)
print("matrix:", g)
print("char poly:", p)

for m in range(1, 7):
    via_poly = m_trace_from_charpoly(p, m)
    direct = (g**m).trace()
    print(f"m={m}: Tr(g^m) from char poly = {via_poly}, by powering = {direct}")
    assert via_poly == direct

print()
print("compositions of 3 into parts of size <= 2, with their coefficients:")
for r in compositions(2, 3):
    print(f"  {r}  coefficient {newton_coefficient(r)}")

print()
print("char poly of g^4 without forming g^4:", power_charpoly(p, 4))
print("d_m for n=2:", [d_m(2, m) for m in range(1, 7)])

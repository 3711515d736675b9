"""Deciding when two representations agree after raising to a power.

The rotation by 90 degrees and the identity are not conjugate, yet their
fourth powers are. A diagonal pair with eigenvalues (1, 2) and (1, 3) never
agrees, and a modular certificate proves it.
"""

from fractions import Fraction

from galrep import Kind, MatRep, Matrix, elementwise_pe, pe_decide, uniform_m_bound

rot = Matrix([[0, -1], [1, 0]])
one = Matrix.identity(2)

print("uniform power bound for 2x2 over Q:", uniform_m_bound(2, 1))

v = elementwise_pe(rot, one)
print("rotation vs identity:", v.status.value, "witness m =", v.witness_m)

v = elementwise_pe(Matrix.diag([1, 2]), Matrix.diag([1, 3]))
print("diag(1,2) vs diag(1,3):", v.status.value)

shear = Matrix([[1, 1], [0, 1]])
v = pe_decide(MatRep(Kind.FREE, (shear,)), MatRep(Kind.FREE, (one,)), depth=3)
print("free group, shear vs identity:", v.status.value)

half = Matrix.diag([Fraction(1, 2), 2])
v = pe_decide(MatRep(Kind.SINGLE, (half,)), MatRep(Kind.SINGLE, (Matrix.diag([2, Fraction(1, 2)]),)))
print("diag(1/2,2) vs diag(2,1/2):", v.status.value, "witness m =", v.witness_m)

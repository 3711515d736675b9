"""Enumerating Weil polynomials.

A Weil q-polynomial of weight w has every complex root of absolute value
q^(w/2). Membership is certified exactly with Sturm sequences, so no
floating point enters the count.
"""

from galrep import enumerate_weil, is_weil_poly, weil_count

for q, w, d in [(2, 1, 2), (3, 1, 2), (2, 0, 1), (3, 1, 1), (2, 1, 4)]:
    print(f"q={q} w={w} d={d}: {weil_count(q, w, d)} polynomials")

print()
print("degree 2, q=2, weight 1:")
for p in enumerate_weil(2, 1, 2):
    print("  ", p)

print()
print("x^2 - 2 is Weil for q=2, weight 1:", is_weil_poly([1, 0, -2], 2, 1))
print("x^2 + 3x + 2 is Weil for q=2, weight 1:", is_weil_poly([1, 3, 2], 2, 1))

"""Choosing a finite set of places that detects a representation.

Frobenius elements in S3 are simulated by a table of places. A greedy cover
picks one place per conjugacy class; traces at those places then decide
whether two representations mod 5 agree everywhere.
"""

from galrep import PlaceTable, conjugacy_classes, frobenius_cover, trace_determination_check
from galrep.faltings_sim import augmentation_modrep, direct_sum, sign_modrep, symmetric_group, trivial_modrep

G = symmetric_group(3)
classes = conjugacy_classes(G)
print("S3 classes:", [[G.labels[g] for g in c] for c in classes])

P = PlaceTable([("v2", 1), ("v3", 3), ("v5", 4), ("v7", 0), ("v11", 2), ("v13", 5)])
T = frobenius_cover(G, P)
print("test set:", T)

std = augmentation_modrep(G, 5)
split = direct_sum(trivial_modrep(G, 5), sign_modrep(G, 5))
res = trace_determination_check(std, split, T, P)
print("standard vs trivial+sign: agree on T?", res.traces_agree_on_T, "| distinguished at", res.distinguishing_place)
res = trace_determination_check(std, std, T, P)
print("standard vs itself: agree on T?", res.traces_agree_on_T, "| check holds:", res.holds)

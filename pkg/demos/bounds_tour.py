"""
Closed-form bounds on Zarankiewicz numbers
==========================================

Compare the classical bound, the Furedi refinement and the generic family
with a free parameter k, then let ``best_k`` pick the tightest member.
"""

from zarlab.bounds import ZInstance, all_bounds, best_k, generic_bound

###############################################################################
# A square instance with a forbidden 3x3 block. Every family is listed once.

inst = ZInstance(64, 64, 3, 3)
for rep in all_bounds(inst):
    label = rep.family.value if rep.k is None else f"{rep.family.value} (k={rep.k})"
    print(f"{label:<28} {rep.value:12.4f}")

###############################################################################
# The optimal k moves as the matrix grows. For s = t = 3 the larger k only
# pays off once n is big enough to swamp its extra lower-order term.

for n in (10, 100, 10 ** 4, 10 ** 6):
    k, value = best_k(ZInstance(n, n, 3, 3))
    print(f"n={n:>8}: best k={k}, bound={value:.6g}, k=0 gives {generic_bound(ZInstance(n, n, 3, 3), 0):.6g}")

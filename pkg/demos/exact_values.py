"""
Exact small Zarankiewicz numbers
================================

Solve a few instances exactly, print the extremal matrices and show how a
node budget turns an exact run into a certified lower bound.
"""

from zarlab.bounds import ZInstance, best_k
from zarlab.zexact import zarankiewicz_exact

###############################################################################
# z(n, n; 2, 2) for small n. Each witness is a 0/1 matrix with no 2x2 block of
# ones; the closed-form bound is printed alongside for scale.

for n in range(2, 8):
    res = zarankiewicz_exact(n, n, 2, 2)
    _, bound = best_k(ZInstance(n, n, 2, 2))
    print(f"z({n},{n};2,2) = {res.value:>2}  [{res.status.value}, {res.nodes_explored} nodes, bound {bound:.2f}]")

res = zarankiewicz_exact(7, 7, 2, 2)
print("\nan extremal 7x7 matrix (the Fano plane incidence matrix up to relabelling):")
print("\n".join(res.witness.to_strings()))

###############################################################################
# With a tiny node budget the solver stops early and reports what it has.

res = zarankiewicz_exact(10, 10, 2, 2, node_limit=200)
print(f"\nbudgeted run: value >= {res.value} ({res.status.value})")

"""
Where each k wins
=================

For fixed m, scan n over a geometric grid and record which k gives the
smallest generic bound. The summary lists the n-interval won by the chosen k.
"""

from collections import Counter

from zarlab.bounds import dominance_scan

for m in (10 ** 4, 10 ** 6):
    rep = dominance_scan(4, 4, 1, [m], n_per_m=60)
    lo, hi = rep.boundary_summary[m]
    winners = Counter(w for _, _, w in rep.grid)
    print(f"m={m:.0e}: k=1 wins for n in [{lo}, {hi}]; wins per k over the grid: {dict(winners)}")

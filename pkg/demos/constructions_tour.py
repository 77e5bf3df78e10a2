"""
Extremal constructions
======================

Build the standard K_{s,t}-free graphs and look at their size and spectral
radius next to the matching upper bounds.
"""

from zarlab.bounds import spectral_bound_generic, spectral_bound_t2
from zarlab.constructions import brown_graph, friendship_graph, norm_graph, polarity_graph
from zarlab.spectral import kst_free, spectral_radius

###############################################################################
# Polarity graphs of projective planes are C4-free and nearly attain the t=2
# spectral bound.

for q in (2, 3, 4, 5, 7):
    G = polarity_graph(q)
    mu = spectral_radius(G).mu
    print(f"ER_{q}: n={G.n:>3} e={G.e:>4} mu={mu:8.4f} bound={spectral_bound_t2(G.n, 2):8.4f}")

###############################################################################
# The friendship graph meets the same bound with equality.

G = friendship_graph(10)
print(f"\nfriendship(10): mu={spectral_radius(G).mu:.6f} bound={spectral_bound_t2(G.n, 2):.6f}")

###############################################################################
# K_{3,3}-free graphs: Brown's sphere graphs and norm graphs.

for q in (3, 5):
    G = brown_graph(q)
    mu = spectral_radius(G).mu
    print(f"Brown q={q}: n={G.n} degree={G.degree(0)} mu={mu:.4f} "
          f"bound={spectral_bound_generic(G.n, 3, 3, 1):.4f} free={kst_free(G, 3, 3)}")
for q in (3, 4, 5, 7):
    G = norm_graph(q, 3)
    print(f"norm q={q}: n={G.n} degrees={sorted(set(G.degrees()))} free={kst_free(G, 3, 3)}")

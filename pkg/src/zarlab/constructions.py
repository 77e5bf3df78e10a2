"""Extremal and test graphs: friendship, polarity, norm, Brown, Paley and a few classics."""

from __future__ import annotations

from itertools import combinations, product

from .errors import ConstructionError, DomainError
from .field import FiniteField, field_make, field_of_order, is_prime
from .graph import DENSE_CAP, Graph
from .spectral import kst_free


def friendship_graph(f: int) -> Graph:
    """``f`` triangles glued at vertex 0; vertices ``2i+1, 2i+2`` form triangle ``i``."""
    if f < 1:
        raise DomainError(f"need f >= 1, got {f}")
    edges = []
    for i in range(f):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph(2 * f + 1, edges, name=f"friendship({f})")


def projective_points(F: FiniteField) -> list[tuple[int, int, int]]:
    """Points of PG(2, q), first nonzero coordinate 1, in lexicographic order."""
    pts = [p for p in product(F.elements(), repeat=3) if any(p)]
    return [p for p in pts if p[[i for i in range(3) if p[i]][0]] == 1]


def polarity_graph(q: int, F: FiniteField | None = None) -> Graph:
    """Erdős–Rényi orthogonal polarity graph ER_q on the points of PG(2, q).

    ``x ~ y`` iff ``x . y = 0`` and ``x != y``; absolute points (``x . x = 0``)
    keep degree ``q`` because loops are dropped.
    """
    if F is None:
        F = field_of_order(q)
    elif F.order != q:
        raise DomainError(f"field has order {F.order}, expected {q}")
    pts = projective_points(F)
    index = {p: i for i, p in enumerate(pts)}
    add, mul = F.add, F.mul

    def dot(x, y):
        return add(add(mul(x[0], y[0]), mul(x[1], y[1])), mul(x[2], y[2]))

    edges = []
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            if dot(x, y) == 0:
                edges.append((i, index[y]))
    return Graph(len(pts), edges, labels=pts, name=f"polarity({q})")


def absolute_points(G: Graph, F: FiniteField) -> list[int]:
    """Vertices of a polarity graph whose label is self-orthogonal."""
    out = []
    for i, x in enumerate(G.labels):
        sq = [F.mul(c, c) for c in x]
        if F.add(F.add(sq[0], sq[1]), sq[2]) == 0:
            out.append(i)
    return out


def norm_graph(q: int, t: int) -> Graph:
    """Norm graph on GF(q^{t-1}): ``x ~ y`` iff ``N(x + y) = 1`` over GF(q).

    K_{t, (t-1)!+1}-free. Vertices are encoded field elements.
    """
    if t < 3:
        raise DomainError(f"norm graph needs t >= 3, got {t}")
    base = field_of_order(q)
    order = q ** (t - 1)
    if order > DENSE_CAP:
        raise DomainError(f"q^(t-1) = {order} exceeds the dense cap {DENSE_CAP}")
    F = field_make(base.p, base.k * (t - 1))
    ones = [z for z in F.elements() if F.norm(z, q) == 1]
    nbrs = [set() for _ in range(order)]
    for x in F.elements():
        for z in ones:
            y = F.sub(z, x)
            if y != x:
                nbrs[x].add(y)
    return Graph.from_neighbor_sets(nbrs, name=f"norm(q={q}, t={t})")


def _brown(q, delta):
    pts = list(product(range(q), repeat=3))
    index = {p: i for i, p in enumerate(pts)}
    sphere = [d for d in pts if (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]) % q == delta]
    nbrs = []
    for x in pts:
        nbrs.append({index[((x[0] + d[0]) % q, (x[1] + d[1]) % q, (x[2] + d[2]) % q)]
                     for d in sphere})
    return Graph.from_neighbor_sets(nbrs, labels=pts, name=f"brown(q={q}, delta={delta})")


def brown_delta(q: int) -> int:
    """Smallest nonzero residue whose Brown graph passes the K_{3,3} check."""
    _check_brown_q(q)
    for delta in range(1, q):
        if kst_free(_brown(q, delta), 3, 3):
            return delta
    raise ConstructionError(f"no delta in [1, {q}) gives a K_{{3,3}}-free Brown graph for q={q}")


def _check_brown_q(q):
    if q < 3 or not is_prime(q):
        raise DomainError(f"Brown graph needs an odd prime q, got {q}")
    if q ** 3 > DENSE_CAP:
        raise DomainError(f"q^3 = {q ** 3} exceeds the dense cap {DENSE_CAP}")


def brown_graph(q: int, delta: int | None = None) -> Graph:
    """Brown's K_{3,3}-free graph on GF(q)^3: ``x ~ y`` iff ``|x - y|^2 = delta``.

    With ``delta`` omitted the working residue is found by search and
    verification; an explicit ``delta`` is used as given, unverified.
    """
    _check_brown_q(q)
    if delta is None:
        delta = brown_delta(q)
    elif not 1 <= delta < q:
        raise DomainError(f"delta must be a nonzero residue mod {q}, got {delta}")
    return _brown(q, delta)


def paley_graph(q: int) -> Graph:
    """Paley graph: ``x ~ y`` iff ``x - y`` is a nonzero square; ``q = 1 mod 4``."""
    F = field_of_order(q)
    if q % 4 != 1:
        raise DomainError(f"Paley graph needs q = 1 mod 4, got {q}")
    squares = {F.mul(x, x) for x in range(1, q)}
    nbrs = [{F.add(x, r) for r in squares} for x in range(q)]
    return Graph.from_neighbor_sets(nbrs, name=f"paley({q})")


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2), name=f"K{n}")


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)], name=f"K1,{leaves}")


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)], name=f"K{a},{b}")


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner, name="petersen")

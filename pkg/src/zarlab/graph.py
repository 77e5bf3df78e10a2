"""Simple undirected graphs with sorted adjacency lists and bitset rows."""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from .errors import DomainError

DENSE_CAP = 1 << 16


class Graph:
    """Loopless simple graph on vertices ``0..n-1``.

    ``adj[u]`` is the sorted tuple of neighbours of ``u``. ``bits[u]`` is the
    same set as a Python int bitset, built on first use when ``n`` is at most
    :data:`DENSE_CAP`.
    """

    __slots__ = ("n", "adj", "labels", "name", "_bits")

    def __init__(self, n: int, edges=(), labels=None, name: str = ""):
        if n < 0:
            raise DomainError(f"vertex count must be >= 0, got {n}")
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if v in nbrs[u]:
                raise DomainError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        if labels is not None and len(labels) != n:
            raise DomainError(f"expected {n} labels, got {len(labels)}")
        self.labels = None if labels is None else list(labels)
        self.name = name
        self._bits = None

    @classmethod
    def from_neighbor_sets(cls, nbrs, labels=None, name="") -> "Graph":
        """Build from symmetric neighbour sets; asymmetry or loops are errors."""
        edges = []
        for u, s in enumerate(nbrs):
            for v in s:
                if v == u:
                    raise DomainError(f"loop at vertex {u}")
                if u not in nbrs[v]:
                    raise DomainError(f"asymmetric adjacency between {u} and {v}")
                if u < v:
                    edges.append((u, v))
        return cls(len(nbrs), edges, labels=labels, name=name)

    @classmethod
    def from_adjacency(cls, a, name="") -> "Graph":
        a = np.asarray(a)
        if a.shape != (len(a), len(a)) or not np.array_equal(a, a.T):
            raise DomainError("adjacency matrix must be square and symmetric")
        if np.any(np.diag(a)):
            raise DomainError("adjacency matrix has loops")
        iu, ju = np.nonzero(np.triu(a, 1))
        return cls(len(a), zip(iu.tolist(), ju.tolist()), name=name)

    @property
    def e(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return (self.bits[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def bits(self) -> list[int]:
        if self._bits is None:
            if self.n > DENSE_CAP:
                raise DomainError(f"bitset rows need n <= {DENSE_CAP}, got {self.n}")
            rows = []
            for a in self.adj:
                r = 0
                for v in a:
                    r |= 1 << v
                rows.append(r)
            self._bits = rows
        return self._bits

    def adjacency_matrix(self) -> sp.csr_matrix:
        rows = np.repeat(np.arange(self.n), self.degrees())
        cols = np.fromiter((v for a in self.adj for v in a), dtype=np.int64, count=2 * self.e)
        data = np.ones(len(cols))
        return sp.csr_matrix((data, (rows, cols)), shape=(self.n, self.n))

    def dense(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, nb in enumerate(self.adj):
            a[u, list(nb)] = 1
        return a

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} e={self.e}>"


def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges())
        off += g.n
    return Graph(off, edges)

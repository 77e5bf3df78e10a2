"""Exact Zarankiewicz numbers for small instances.

Matrices are stored as one Python int per row, bit ``j`` holding column ``j``.
The branch-and-bound solver works on a bit-reversed copy internally so that
integer order on rows coincides with lexicographic order of the column
pattern; witnesses are converted back before they are returned.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .bounds import ZInstance, best_k
from .errors import DomainError, TooLargeError

MAX_COLUMNS = 64
NAIVE_CAP = 24


class BitMatrix:
    """Dense (0,1) matrix with bitset rows and a cached count of ones."""

    __slots__ = ("m", "n", "_rows", "_ones")

    def __init__(self, m: int, n: int, rows=None):
        if m < 0 or n < 0:
            raise DomainError(f"negative shape ({m}, {n})")
        if n > MAX_COLUMNS:
            raise DomainError(f"at most {MAX_COLUMNS} columns supported, got {n}")
        self.m, self.n = m, n
        rows = [0] * m if rows is None else [int(r) for r in rows]
        if len(rows) != m:
            raise DomainError(f"expected {m} rows, got {len(rows)}")
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r < 0 or r & ~full:
                raise DomainError(f"row {i} has bits outside {n} columns")
        self._rows = rows
        self._ones = sum(r.bit_count() for r in rows)

    @classmethod
    def from_array(cls, a) -> "BitMatrix":
        a = np.asarray(a)
        if a.ndim != 2:
            raise DomainError("expected a 2-d array")
        m, n = a.shape
        rows = [sum(1 << j for j in range(n) if a[i, j]) for i in range(m)]
        return cls(m, n, rows)

    @classmethod
    def from_strings(cls, lines) -> "BitMatrix":
        lines = [ln.strip() for ln in lines if ln.strip()]
        n = len(lines[0]) if lines else 0
        if any(len(ln) != n or set(ln) - {"0", "1"} for ln in lines):
            raise DomainError("rows must be equal-length strings of 0/1")
        rows = [sum(1 << j for j, c in enumerate(ln) if c == "1") for ln in lines]
        return cls(len(rows), n, rows)

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(self._rows)

    @property
    def ones(self) -> int:
        return self._ones

    def __getitem__(self, ij):
        i, j = ij
        return (self._rows[i] >> j) & 1

    def set(self, i: int, j: int, value: int = 1):
        if not (0 <= i < self.m and 0 <= j < self.n):
            raise IndexError((i, j))
        old = (self._rows[i] >> j) & 1
        if value:
            self._rows[i] |= 1 << j
        else:
            self._rows[i] &= ~(1 << j)
        self._ones += (1 if value else 0) - old

    def row_sums(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def col_sums(self) -> list[int]:
        return [sum((r >> j) & 1 for r in self._rows) for j in range(self.n)]

    def transpose(self) -> "BitMatrix":
        cols = [sum(((r >> j) & 1) << i for i, r in enumerate(self._rows)) for j in range(self.n)]
        return BitMatrix(self.n, self.m, cols)

    def to_array(self) -> np.ndarray:
        a = np.zeros((self.m, self.n), dtype=np.uint8)
        for i, r in enumerate(self._rows):
            for j in range(self.n):
                a[i, j] = (r >> j) & 1
        return a

    def to_strings(self) -> list[str]:
        return ["".join(str((r >> j) & 1) for j in range(self.n)) for r in self._rows]

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.m, self.n, self._rows)

    def __eq__(self, other):
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (self.m, self.n, self._rows) == (other.m, other.n, other._rows)

    def __repr__(self):
        return f"BitMatrix({self.m}x{self.n}, ones={self._ones})"


class Status(str, enum.Enum):
    EXACT = "Exact"
    LOWER_BOUND_ONLY = "LowerBoundOnly"


@dataclass
class SolveResult:
    value: int
    witness: BitMatrix
    status: Status
    nodes_explored: int
    elapsed: float


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _find_rows(rows, s, t):
    """First s-subset (lexicographic) of ``rows`` whose AND has >= t bits."""
    m = len(rows)
    chosen = []

    def rec(start, acc):
        if len(chosen) == s:
            return True
        for i in range(start, m - (s - len(chosen)) + 1):
            nxt = acc & rows[i]
            if nxt.bit_count() >= t:
                chosen.append(i)
                if rec(i + 1, nxt):
                    return True
                chosen.pop()
        return False

    full = ~0
    return list(chosen) if rec(0, full) else None


def find_all_ones_submatrix(M: BitMatrix, s: int, t: int):
    """Return ``(row_indices, col_indices)`` of an all-ones ``s x t`` block, or None."""
    if s < 1 or t < 1:
        raise DomainError(f"s and t must be >= 1, got s={s}, t={t}")
    if s > M.m or t > M.n:
        return None
    if math.comb(M.m, s) <= math.comb(M.n, t):
        rows = M.rows
        found = _find_rows(rows, s, t)
        if found is None:
            return None
        acc = ~0
        for i in found:
            acc &= rows[i]
        return found, sorted(_bits(acc & ((1 << M.n) - 1)))[:t]
    cols = M.transpose().rows
    found = _find_rows(cols, t, s)
    if found is None:
        return None
    acc = ~0
    for j in found:
        acc &= cols[j]
    return sorted(_bits(acc & ((1 << M.m) - 1)))[:s], found


def contains_all_ones_submatrix(M: BitMatrix, s: int, t: int) -> bool:
    return find_all_ones_submatrix(M, s, t) is not None


def zarankiewicz_naive(m: int, n: int, s: int, t: int) -> int:
    """Exhaustive z(m, n, s, t) over all 2^{mn} matrices; ``m*n <= 24`` only.

    Candidate matrices are visited by decreasing number of ones, so the first
    free one found is a maximum.
    """
    if s < 1 or t < 1:
        raise DomainError(f"s and t must be >= 1, got s={s}, t={t}")
    if m * n > NAIVE_CAP:
        raise TooLargeError(f"naive enumeration capped at m*n <= {NAIVE_CAP}, got {m * n}")
    cells = m * n
    for ones in range(cells, -1, -1):
        for pos in combinations(range(cells), ones):
            rows = [0] * m
            for p in pos:
                rows[p // n] |= 1 << (p % n)
            if not contains_all_ones_submatrix(BitMatrix(m, n, rows), s, t):
                return ones
    return 0  # pragma: no cover - the zero matrix is always free


def _reverse(x, n):
    return int(format(x, f"0{n}b")[::-1], 2) if n else 0


class _Budget(Exception):
    pass


class _Search:
    """Row-by-row DFS; instance state lives on the object for speed."""

    def __init__(self, m, n, s, t, node_limit, deadline):
        self.m, self.n, self.s, self.t = m, n, s, t
        self.node_limit = node_limit
        self.deadline = deadline
        self.nodes = 0
        self.best = -1
        self.best_rows = None
        self.rows = []
        # levels[j]: ANDs of j-subsets of chosen rows having >= t bits
        self.levels = [[(1 << n) - 1]] + [[] for _ in range(s - 1)]
        self.cap = [self._cap(r) for r in range(m + 1)]
        self.table = self._candidates() if n <= 16 else None

    def _cap(self, r):
        if r == 0:
            return 0
        ub = r * self.n
        if self.s <= r and self.t <= self.n:
            _, v = best_k(ZInstance(r, self.n, self.s, self.t))
            ub = min(ub, math.floor(v + 1e-9))
        return ub

    def _candidates(self):
        # all n-bit rows by (popcount, value) descending
        return sorted(range(1 << self.n), key=lambda x: (x.bit_count(), x), reverse=True)

    def _iter_below(self, prev):
        """Rows with key <= key(prev), by key descending."""
        pc = prev.bit_count()
        if self.table is not None:
            # the table is sorted, so locate prev and continue from there
            idx = self._index[prev]
            yield from self.table[idx:]
            return
        n = self.n
        for p in range(pc, -1, -1):
            for comb in combinations(range(n - 1, -1, -1), p):
                x = 0
                for b in comb:
                    x |= 1 << b
                if p == pc and x > prev:
                    continue
                yield x

    def ok(self, row):
        t = self.t
        for inter in self.levels[self.s - 1]:
            if (inter & row).bit_count() >= t:
                return False
        return True

    def push(self, row):
        t = self.t
        added = []
        for j in range(self.s - 1, 0, -1):
            new = [x for x in (row & inter for inter in self.levels[j - 1]) if x.bit_count() >= t]
            self.levels[j].extend(new)
            added.append((j, len(new)))
        self.rows.append(row)
        return added

    def pop(self, added):
        self.rows.pop()
        for j, cnt in added:
            if cnt:
                del self.levels[j][-cnt:]

    def tick(self):
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _Budget
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise _Budget

    def dfs(self, ones, prev):
        self.tick()
        depth = len(self.rows)
        if ones > self.best:
            self.best = ones
            self.best_rows = list(self.rows) + [0] * (self.m - depth)
        if depth == self.m:
            return
        remaining = self.m - depth
        if ones + min(self.cap[remaining], remaining * prev.bit_count()) <= self.best:
            return
        for row in self._iter_below(prev):
            p = row.bit_count()
            if ones + p * remaining <= self.best:
                break
            if not self.ok(row):
                continue
            added = self.push(row)
            self.dfs(ones + p, row)
            self.pop(added)

    def run(self):
        if self.table is not None:
            self._index = {x: i for i, x in enumerate(self.table)}
        n = self.n
        for p in range(n, -1, -1):
            # first row canonicalised to a prefix of ones (columns 0..p-1)
            root = ((1 << p) - 1) << (n - p)
            if p * self.m <= self.best:
                break
            if not self.ok(root):
                continue
            added = self.push(root)
            self.dfs(p, root)
            self.pop(added)


def zarankiewicz_exact(m: int, n: int, s: int, t: int, *,
                       time_limit: float | None = None,
                       node_limit: int | None = None) -> SolveResult:
    """Branch-and-bound z(m, n, s, t).

    Rows are appended in non-increasing (popcount, lexicographic) order and
    the first row is a prefix of ones. A subtree is cut when the ones so far
    plus the best closed-form bound on the remaining rows (or the row-count
    caps) cannot beat the incumbent. Hitting either budget returns the
    incumbent with status ``LowerBoundOnly``.
    """
    if s < 2 or t < 2:
        raise DomainError(f"s and t must be >= 2, got s={s}, t={t}")
    if m < 1 or n < 1:
        raise DomainError(f"m and n must be >= 1, got m={m}, n={n}")
    if n > MAX_COLUMNS:
        raise DomainError(f"at most {MAX_COLUMNS} columns supported, got n={n}")
    start = time.monotonic()
    if s > m or t > n:
        full = (1 << n) - 1
        return SolveResult(m * n, BitMatrix(m, n, [full] * m), Status.EXACT, 0,
                           time.monotonic() - start)
    deadline = None if time_limit is None else start + time_limit
    search = _Search(m, n, s, t, node_limit, deadline)
    status = Status.EXACT
    try:
        search.run()
    except _Budget:
        status = Status.LOWER_BOUND_ONLY
    if search.best_rows is None:
        search.best, search.best_rows = 0, [0] * m
    witness = BitMatrix(m, n, [_reverse(r, n) for r in search.best_rows])
    return SolveResult(search.best, witness, status, search.nodes, time.monotonic() - start)

"""Spectral radius, K_{s,t} detection and certification against the bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .bounds import SpectralFamily, edge_bound, spectral_bound_generic, spectral_bound_t2
from .errors import DomainError, TooLargeError
from .graph import Graph

SUBSET_CAP = 10**8
CERT_TOL = 1e-6


class SpectralRadius(NamedTuple):
    mu: float
    residual: float
    converged: bool
    iterations: int


def spectral_radius(G: Graph, tol: float = 1e-10, max_iter: int = 100_000) -> SpectralRadius:
    """Largest adjacency eigenvalue by power iteration on ``A + I``.

    Starts from the all-ones vector, which meets the Perron vector of every
    component, so the largest component eigenvalue dominates. Converged when
    ``max|Av - mu v| <= tol * max(1, mu)`` with ``max|v| = 1``.
    """
    if G.n == 0:
        raise DomainError("spectral radius of the empty graph is undefined")
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    A = G.adjacency_matrix()
    v = np.ones(G.n)
    mu, resid = 0.0, math.inf
    for it in range(1, max_iter + 1):
        Av = A @ v
        mu = float(v @ Av) / float(v @ v)
        resid = float(np.max(np.abs(Av - mu * v)))
        if resid <= tol * max(1.0, mu):
            return SpectralRadius(mu, resid, True, it)
        w = Av + v
        v = w / np.max(np.abs(w))
    return SpectralRadius(mu, resid, False, max_iter)


def find_kst(G: Graph, s: int, t: int, cap: int = SUBSET_CAP):
    """Return disjoint ``(S, T)`` spanning a K_{s,t} (``|S| = s``), or None.

    Subsets of the smaller side are enumerated in lexicographic order with
    common-neighbourhood pruning; the first hit is reported, so the witness
    does not depend on anything but the graph.
    """
    if s < 1 or t < 1:
        raise DomainError(f"s and t must be >= 1, got s={s}, t={t}")
    a, b = min(s, t), max(s, t)
    if a + b > G.n:
        return None
    if math.comb(G.n, a) > cap:
        raise TooLargeError(
            f"K_{{{s},{t}}} check would enumerate C({G.n},{a}) = {math.comb(G.n, a)} subsets (cap {cap})")
    bits = G.bits
    cand = [u for u in range(G.n) if len(G.adj[u]) >= b]
    chosen = []

    def rec(start, common):
        if len(chosen) == a:
            return common
        for i in range(start, len(cand) - (a - len(chosen)) + 1):
            nxt = common & bits[cand[i]]
            if nxt.bit_count() >= b:
                chosen.append(cand[i])
                hit = rec(i + 1, nxt)
                if hit is not None:
                    return hit
                chosen.pop()
        return None

    common = rec(0, (1 << G.n) - 1)
    if common is None:
        return None
    other = []
    while len(other) < b:
        low = common & -common
        other.append(low.bit_length() - 1)
        common ^= low
    X = list(chosen)
    return (X, other) if s <= t else (other, X)


def kst_free(G: Graph, s: int, t: int, cap: int = SUBSET_CAP) -> bool:
    return find_kst(G, s, t, cap) is None


@dataclass
class SrgProfile:
    n: int
    regular: bool
    degree: int | None
    lambda_: int | None
    mu_param: int | None
    is_srg: bool
    uniform_pairs: bool
    c: int | None


def _constant(values):
    vals = np.unique(values)
    return int(vals[0]) if len(vals) == 1 else None


def srg_profile(G: Graph) -> SrgProfile:
    """Degree and common-neighbour statistics over all vertex pairs.

    Complete and edgeless graphs are never reported as strongly regular.
    ``uniform_pairs`` does not require regularity: friendship graphs have one
    common neighbour for every pair without being regular.
    """
    if G.n < 2:
        raise DomainError(f"need at least 2 vertices, got {G.n}")
    A = G.dense()
    A2 = A @ A
    degs = np.diag(A2)
    iu = np.triu_indices(G.n, 1)
    pair_adj = A[iu].astype(bool)
    counts = A2[iu]
    degree = _constant(degs)
    lam = _constant(counts[pair_adj]) if pair_adj.any() else None
    mu = _constant(counts[~pair_adj]) if (~pair_adj).any() else None
    c = _constant(counts)
    return SrgProfile(
        n=G.n,
        regular=degree is not None,
        degree=degree,
        lambda_=lam,
        mu_param=mu,
        is_srg=degree is not None and lam is not None and mu is not None,
        uniform_pairs=c is not None,
        c=c,
    )


@dataclass
class BoundCheck:
    family: SpectralFamily
    value: float
    observed: float
    slack: float
    equality: bool
    k: int | None = None


@dataclass
class CertReport:
    n: int
    e: int
    s: int
    t: int
    free: bool
    witness: tuple[list[int], list[int]] | None
    mu: float
    mu_residual: float
    mu_converged: bool
    bounds: list[BoundCheck] = field(default_factory=list)
    tolerance: float = CERT_TOL

    @property
    def equality_flags(self) -> dict[str, bool]:
        return {b.family.value: b.equality for b in self.bounds}

    def inconsistencies(self) -> list[str]:
        """Violated invariants; an empty list means the report is self-consistent."""
        out = []
        if 2 * self.e > self.mu * self.n + self.tolerance * self.n:
            out.append(f"2e = {2 * self.e} exceeds mu*n = {self.mu * self.n:.9g}")
        if self.free:
            for b in self.bounds:
                if b.slack < -self.tolerance:
                    out.append(f"{b.family.value} violated: observed {b.observed:.12g} > bound {b.value:.12g}")
        return out


def certify(G: Graph, s: int, t: int, tol: float = CERT_TOL, cap: int = SUBSET_CAP) -> CertReport:
    """Check K_{s,t}-freeness and compare mu and e(G) with the matching bounds.

    ``t = 2`` uses the square-root bound on mu; ``s >= t >= 3`` uses the
    k = t-2 spectral bound on mu and the derived edge bound on e(G).
    """
    if s < 2 or t < 2:
        raise DomainError(f"certification needs s, t >= 2, got s={s}, t={t}")
    if t >= 3 and s < t:
        raise DomainError(f"bounds for t >= 3 are stated for s >= t, got s={s}, t={t}")
    witness = find_kst(G, s, t, cap)
    sr = spectral_radius(G)
    e = G.e
    checks = []

    def add(family, value, observed, k=None):
        slack = value - observed
        checks.append(BoundCheck(family, value, float(observed), slack, abs(slack) <= tol, k))

    if t == 2:
        add(SpectralFamily.IN0, spectral_bound_t2(G.n, s), sr.mu)
    else:
        add(SpectralFamily.IN1, spectral_bound_generic(G.n, s, t, t - 2), sr.mu, t - 2)
        add(SpectralFamily.EDGE_BOUND_IN2, edge_bound(G.n, s, t), e)
    return CertReport(G.n, e, s, t, witness is None, witness, sr.mu, sr.residual,
                      sr.converged, checks, tol)

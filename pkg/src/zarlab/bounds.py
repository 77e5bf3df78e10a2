"""Closed-form Zarankiewicz and spectral upper bounds.

Matrix convention throughout: an instance ``(m, n, s, t)`` asks for the
maximum number of ones in an ``m x n`` (0,1)-matrix with no ``s x t``
all-ones submatrix, ``s`` counting rows and ``t`` counting columns.

All values are real-valued doubles; nothing is floored to an integer.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

#: relative tolerance used when comparing bound values across families
REL_TOL = 1e-9


@dataclass(frozen=True)
class ZInstance:
    m: int
    n: int
    s: int
    t: int

    def __post_init__(self):
        for name in ("m", "n", "s", "t"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise DomainError(f"{name} must be an integer, got {v!r}")
        if self.m < 1 or self.n < 1:
            raise DomainError(f"m and n must be >= 1, got m={self.m}, n={self.n}")
        if self.s < 2 or self.t < 2:
            raise DomainError(f"s and t must be >= 2, got s={self.s}, t={self.t}")

    @property
    def degenerate(self) -> bool:
        """True when ``s > m`` or ``t > n``; then z = m*n trivially."""
        return self.s > self.m or self.t > self.n

    def transpose(self) -> "ZInstance":
        return ZInstance(self.n, self.m, self.t, self.s)


class BoundFamily(str, enum.Enum):
    KST = "KST"
    FUREDI = "Furedi"
    GENERIC_K = "GenericK"
    BABAI_GUIDULI_MAIN = "BabaiGuiduliMain"


class SpectralFamily(str, enum.Enum):
    IN0 = "In0"
    IN1 = "In1"
    GENERIC_SPECTRAL_K = "GenericSpectralK"
    EDGE_BOUND_IN2 = "EdgeBoundIn2"


@dataclass(frozen=True)
class BoundReport:
    family: BoundFamily
    value: float
    k: int | None = None


@dataclass(frozen=True)
class SpectralBoundReport:
    family: SpectralFamily
    value: float
    k: int | None = None


@dataclass
class RegionReport:
    s: int
    t: int
    k: int
    grid: list[tuple[int, int, int]] = field(default_factory=list)
    boundary_summary: dict[int, tuple[int, int]] = field(default_factory=dict)


def _root(x, t):
    # x ** (1/t) through exp/log; x == 0 handled explicitly
    return 0.0 if x == 0 else math.exp(math.log(x) / t)


def _generic(m, n, s, t, k):
    m = float(m)
    n = float(n)
    return (
        _root(s - k - 1, t) * n * math.exp((1.0 - 1.0 / t) * math.log(m))
        + (t - 1) * math.exp((1.0 + k / t) * math.log(m))
        + k * n
    )


def kst_bound(inst: ZInstance) -> float:
    """Kővári–Sós–Turán bound ``(s-1)^{1/t} n m^{1-1/t} + (t-1) m``."""
    return _generic(inst.m, inst.n, inst.s, inst.t, 0)


def furedi_bound(inst: ZInstance) -> float:
    """Füredi's bound, defined for ``s >= t``."""
    m, n, s, t = inst.m, inst.n, inst.s, inst.t
    if s < t:
        raise DomainError(f"Furedi bound needs s >= t, got s={s}, t={t}")
    lm = math.log(m)
    return (
        _root(s - t + 1, t) * n * math.exp((1.0 - 1.0 / t) * lm)
        + t * math.exp((2.0 - 2.0 / t) * lm)
        + t * n
    )


def generic_bound(inst: ZInstance, k: int) -> float:
    """The k-parametrised bound, valid for every ``0 <= k <= s-2``.

    ``k = 0`` is the KST bound (same evaluation path, identical bits);
    ``k = t-2`` with ``s >= t`` improves on Füredi.
    """
    if not 0 <= k <= inst.s - 2:
        raise DomainError(f"k must satisfy 0 <= k <= s-2 = {inst.s - 2}, got {k}")
    return _generic(inst.m, inst.n, inst.s, inst.t, k)


def best_k(inst: ZInstance) -> tuple[int, float]:
    """Return ``(k, value)`` minimising :func:`generic_bound`; ties go to smaller k."""
    best, best_val = 0, generic_bound(inst, 0)
    for k in range(1, inst.s - 1):
        v = generic_bound(inst, k)
        if v < best_val - REL_TOL * best_val:
            best, best_val = k, v
    return best, best_val


def spectral_bound_t2(n: int, s: int) -> float:
    """Spectral radius bound for K_{s,2}-free graphs of order ``n``."""
    if s < 2:
        raise DomainError(f"s must be >= 2, got {s}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return 0.5 + math.sqrt((s - 1) * (n - 1) + 0.25)


def spectral_bound_generic(n: int, s: int, t: int, k: int) -> float:
    """``(s-k-1)^{1/t} n^{1-1/t} + (t-1) n^{k/t} + k`` for ``s, t >= 3``.

    With ``k = t-2`` and ``s >= t`` this is the headline K_{s,t} bound.
    """
    if s < 3 or t < 3:
        raise DomainError(f"needs s >= 3 and t >= 3, got s={s}, t={t}")
    if not 0 <= k <= min(s, t) - 2:
        raise DomainError(f"k must satisfy 0 <= k <= min(s,t)-2 = {min(s, t) - 2}, got {k}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    ln = math.log(n)
    return (
        _root(s - k - 1, t) * math.exp((1.0 - 1.0 / t) * ln)
        + (t - 1) * math.exp(k / t * ln)
        + k
    )


def edge_bound(n: int, s: int, t: int) -> float:
    """Edge bound for K_{s,t}-free graphs, ``s >= t >= 3``; equals ``n * mu_bound / 2``."""
    if t < 3 or s < t:
        raise DomainError(f"edge bound needs s >= t >= 3, got s={s}, t={t}")
    return n * spectral_bound_generic(n, s, t, t - 2) / 2


def babai_guiduli_main_term(n: int, s: int, t: int) -> float:
    """Main term ``(s-1)^{1/t} n^{1-1/t}`` of the Babai–Guiduli bound.

    The o(1) correction is unknown in closed form and omitted, so this is a
    comparison baseline, not a rigorous bound.
    """
    if t < 2 or s < t:
        raise DomainError(f"needs s >= t >= 2, got s={s}, t={t}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return _root(s - 1, t) * math.exp((1.0 - 1.0 / t) * math.log(n))


def all_bounds(inst: ZInstance) -> list[BoundReport]:
    """Every applicable bound family for ``inst``."""
    out = [BoundReport(BoundFamily.KST, kst_bound(inst))]
    if inst.s >= inst.t:
        out.append(BoundReport(BoundFamily.FUREDI, furedi_bound(inst)))
    for k in range(inst.s - 1):
        out.append(BoundReport(BoundFamily.GENERIC_K, generic_bound(inst, k), k))
    if inst.s >= inst.t:
        out.append(BoundReport(BoundFamily.BABAI_GUIDULI_MAIN,
                               babai_guiduli_main_term(inst.n, inst.s, inst.t)))
    return out


def _scan_grid(m, k, t, points):
    lo = m ** ((k + 1) / t) / 10
    hi = 10 * m ** ((k + 2) / t)
    ns = np.rint(np.geomspace(max(lo, 1.0), hi, points)).astype(np.int64)
    return sorted(set(int(x) for x in ns if x >= 1))


def dominance_scan(s: int, t: int, k: int, m_values, n_per_m: int = 200) -> RegionReport:
    """Locate, for each ``m``, where ``k`` is the strictly best choice of parameter.

    Scans a geometric grid of ``n`` in ``[m^{(k+1)/t}/10, 10 m^{(k+2)/t}]``
    (rounded to integers) and records the winning parameter at each point.
    """
    if s < 3 or t < 3:
        raise DomainError(f"dominance scan needs s >= 3 and t >= 3, got s={s}, t={t}")
    if not 0 <= k <= s - 2:
        raise DomainError(f"k must satisfy 0 <= k <= s-2 = {s - 2}, got {k}")
    if n_per_m < 2:
        raise DomainError(f"n_per_m must be >= 2, got {n_per_m}")
    report = RegionReport(s, t, k)
    for m in m_values:
        wins = []
        for n in _scan_grid(m, k, t, n_per_m):
            inst = ZInstance(int(m), n, s, t)
            winner, wval = best_k(inst)
            report.grid.append((int(m), n, winner))
            if winner == k:
                rivals = (generic_bound(inst, i) for i in range(s - 1) if i != k)
                if all(v - wval > REL_TOL * v for v in rivals):
                    wins.append(n)
        if wins:
            report.boundary_summary[int(m)] = (min(wins), max(wins))
    return report

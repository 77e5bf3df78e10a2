import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zarlab.bounds import (
    BoundFamily,
    ZInstance,
    all_bounds,
    babai_guiduli_main_term,
    best_k,
    dominance_scan,
    edge_bound,
    furedi_bound,
    generic_bound,
    kst_bound,
    spectral_bound_generic,
    spectral_bound_t2,
)
from zarlab.errors import DomainError

# 60-digit mpmath evaluations of the closed forms, rounded to double
KST_64_3_3 = 1418.1591550923501
FUREDI_100_50_4_2 = 1166.0254037844386
SPEC_1000_3_3_K0 = 127.99210498948732
SPEC_1_4_3_K1 = 4.259921049894873
EDGE_125_4_3 = 2656.1266404607393
BG_1000_3_3 = 125.99210498948732
BG_1_5_3 = 1.5874010519681996

rel = dict(rel=1e-12)


def test_frozen_constants_against_mpmath():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 60
    r = lambda x, t: mp.mpf(x) ** (mp.mpf(1) / t)

    def spec(n, s, t, k):
        return r(s - k - 1, t) * mp.mpf(n) ** (1 - mp.mpf(1) / t) + (t - 1) * mp.mpf(n) ** (mp.mpf(k) / t) + k

    expected = {
        KST_64_3_3: r(2, 3) * 64 * mp.mpf(64) ** (mp.mpf(2) / 3) + 2 * 64,
        FUREDI_100_50_4_2: mp.sqrt(3) * 50 * 10 + 2 * 100 + 2 * 50,
        SPEC_1000_3_3_K0: spec(1000, 3, 3, 0),
        SPEC_1_4_3_K1: spec(1, 4, 3, 1),
        EDGE_125_4_3: 125 * spec(125, 4, 3, 1) / 2,
        BG_1000_3_3: r(2, 3) * 100,
        BG_1_5_3: r(4, 3),
    }
    for frozen, exact in expected.items():
        assert frozen == float(exact)


class TestInstance:
    @pytest.mark.parametrize("args", [(0, 1, 2, 2), (1, 0, 2, 2), (3, 3, 1, 2), (3, 3, 2, 1)])
    def test_rejects_invalid(self, args):
        with pytest.raises(DomainError):
            ZInstance(*args)

    def test_rejects_non_integer(self):
        with pytest.raises(DomainError):
            ZInstance(3.0, 3, 2, 2)

    def test_degenerate_flag(self):
        assert ZInstance(2, 5, 3, 2).degenerate
        assert ZInstance(5, 2, 2, 3).degenerate
        assert not ZInstance(5, 5, 2, 2).degenerate

    def test_transpose(self):
        assert ZInstance(2, 5, 3, 4).transpose() == ZInstance(5, 2, 4, 3)


class TestKST:
    def test_64_3_3(self):
        assert kst_bound(ZInstance(64, 64, 3, 3)) == pytest.approx(KST_64_3_3, **rel)

    def test_single_row(self):
        assert kst_bound(ZInstance(1, 10, 2, 2)) == pytest.approx(11, **rel)

    def test_integer_exponents(self):
        assert kst_bound(ZInstance(64, 64, 2, 2)) == pytest.approx(576, **rel)


class TestFuredi:
    def test_64_3_3(self):
        assert furedi_bound(ZInstance(64, 64, 3, 3)) == pytest.approx(1984, **rel)

    def test_64_2_2(self):
        assert furedi_bound(ZInstance(64, 64, 2, 2)) == pytest.approx(768, **rel)

    def test_rectangular(self):
        assert furedi_bound(ZInstance(100, 50, 4, 2)) == pytest.approx(FUREDI_100_50_4_2, **rel)

    def test_needs_s_ge_t(self):
        with pytest.raises(DomainError):
            furedi_bound(ZInstance(10, 10, 2, 3))


class TestGeneric:
    def test_k1(self):
        assert generic_bound(ZInstance(64, 64, 3, 3), 1) == pytest.approx(1600, **rel)

    def test_k0_is_kst(self):
        inst = ZInstance(64, 64, 3, 3)
        assert generic_bound(inst, 0) == kst_bound(inst)
        assert generic_bound(inst, 0) == pytest.approx(KST_64_3_3, **rel)

    def test_unit(self):
        assert generic_bound(ZInstance(1, 1, 2, 2), 0) == pytest.approx(2, **rel)

    @pytest.mark.parametrize("k", [-1, 2])
    def test_k_range(self, k):
        with pytest.raises(DomainError):
            generic_bound(ZInstance(5, 5, 3, 3), k)


class TestBestK:
    def test_large_square_3_3(self):
        assert best_k(ZInstance(10**6, 10**6, 3, 3))[0] == 1

    def test_singleton_range(self):
        assert best_k(ZInstance(4, 4, 2, 2)) == (0, generic_bound(ZInstance(4, 4, 2, 2), 0))

    def test_large_square_5_5(self):
        # exhaustive comparison over k = 0..3: k = 2 wins at 10^6, k = 3 from 10^8 on
        vals = [generic_bound(ZInstance(10**6, 10**6, 5, 5), k) for k in range(4)]
        assert vals.index(min(vals)) == 2
        assert best_k(ZInstance(10**6, 10**6, 5, 5))[0] == 2
        assert best_k(ZInstance(10**8, 10**8, 5, 5))[0] == 3

    def test_near_tie_keeps_smaller_k(self, monkeypatch):
        import zarlab.bounds as b
        monkeypatch.setattr(b, "_generic", lambda m, n, s, t, k: 100.0 - 1e-12 * k)
        assert b.best_k(ZInstance(10, 10, 5, 5))[0] == 0


class TestSpectral:
    def test_t2_perfect_square(self):
        assert spectral_bound_t2(7, 2) == 3.0

    def test_t2_royle_row(self):
        assert spectral_bound_t2(45, 4) == 12.0

    def test_t2_single_vertex(self):
        assert spectral_bound_t2(1, 2) == 1.0

    def test_t2_domain(self):
        with pytest.raises(DomainError):
            spectral_bound_t2(10, 1)

    def test_generic_headline(self):
        assert spectral_bound_generic(1000, 3, 3, 1) == pytest.approx(121, **rel)

    def test_generic_k0(self):
        assert spectral_bound_generic(1000, 3, 3, 0) == pytest.approx(SPEC_1000_3_3_K0, **rel)

    def test_generic_single_vertex(self):
        assert spectral_bound_generic(1, 4, 3, 1) == pytest.approx(SPEC_1_4_3_K1, **rel)

    @pytest.mark.parametrize("args", [(10, 2, 3, 0), (10, 3, 2, 0), (10, 3, 3, 2), (10, 4, 3, -1)])
    def test_generic_domain(self, args):
        with pytest.raises(DomainError):
            spectral_bound_generic(*args)

    def test_edge_bound_values(self):
        assert edge_bound(1000, 3, 3) == pytest.approx(60500, **rel)
        assert edge_bound(8, 3, 3) == pytest.approx(36, **rel)
        assert edge_bound(125, 4, 3) == pytest.approx(EDGE_125_4_3, **rel)

    @pytest.mark.parametrize("s,t", [(3, 2), (3, 4)])
    def test_edge_bound_domain(self, s, t):
        with pytest.raises(DomainError):
            edge_bound(10, s, t)

    def test_babai_guiduli(self):
        assert babai_guiduli_main_term(1000, 3, 3) == pytest.approx(BG_1000_3_3, **rel)
        assert babai_guiduli_main_term(64, 2, 2) == pytest.approx(8, **rel)
        assert babai_guiduli_main_term(1, 5, 3) == pytest.approx(BG_1_5_3, **rel)
        with pytest.raises(DomainError):
            babai_guiduli_main_term(10, 2, 3)


def test_all_bounds_families():
    fams = [b.family for b in all_bounds(ZInstance(10, 10, 4, 3))]
    assert fams.count(BoundFamily.GENERIC_K) == 3
    assert BoundFamily.FUREDI in fams and BoundFamily.BABAI_GUIDULI_MAIN in fams
    fams = [b.family for b in all_bounds(ZInstance(10, 10, 2, 3))]
    assert BoundFamily.FUREDI not in fams


class TestDominanceScan:
    def test_k1_window_4_4(self):
        rep = dominance_scan(4, 4, 1, [10**6])
        assert 10**6 in rep.boundary_summary
        lo, hi = rep.boundary_summary[10**6]
        ns = [n for _, n, _ in rep.grid]
        assert min(ns) < lo <= hi <= max(ns)

    def test_k0_small_n(self):
        rep = dominance_scan(3, 3, 0, [10**6])
        small = [w for m, n, w in rep.grid if n < 100]
        assert small and all(w == 0 for w in small)

    def test_square_point(self):
        assert best_k(ZInstance(10**6, 10**6, 3, 3))[0] == 1
        rep = dominance_scan(3, 3, 1, [10**6])
        assert max(n for _, n, _ in rep.grid) >= 10**6
        assert all(w == 1 for _, n, w in rep.grid if n >= 10**6)

    def test_winner_matches_best_k(self):
        rep = dominance_scan(5, 4, 2, [10**4, 10**5], n_per_m=50)
        for m, n, w in rep.grid:
            assert w == best_k(ZInstance(m, n, 5, 4))[0]
            assert 0 <= w <= 3

    def test_domain(self):
        with pytest.raises(DomainError):
            dominance_scan(2, 3, 0, [100])
        with pytest.raises(DomainError):
            dominance_scan(3, 3, 2, [100])


# -- properties --------------------------------------------------------------

instances = st.builds(
    ZInstance,
    m=st.integers(1, 10**6), n=st.integers(1, 10**6),
    s=st.integers(2, 12), t=st.integers(2, 12),
)


@given(instances)
def test_k0_bitwise_kst(inst):
    assert generic_bound(inst, 0) == kst_bound(inst)


@given(instances)
def test_generic_beats_furedi(inst):
    if inst.s < inst.t:
        inst = ZInstance(inst.m, inst.n, inst.t, inst.s)
    assert generic_bound(inst, inst.t - 2) < furedi_bound(inst)


@given(instances)
def test_best_k_is_argmin(inst):
    k, v = best_k(inst)
    assert v == generic_bound(inst, k)
    for i in range(inst.s - 1):
        g = generic_bound(inst, i)
        assert v <= g + 1e-9 * g


@given(st.integers(1, 10**7), st.integers(3, 10), st.integers(3, 10))
def test_edge_bound_is_half_n_mu(n, s, t):
    if s < t:
        s, t = t, s
    assert edge_bound(n, s, t) == pytest.approx(n * spectral_bound_generic(n, s, t, t - 2) / 2, rel=1e-12)


@given(st.integers(2, 10**7), st.integers(3, 10), st.integers(3, 10), st.data())
def test_spectral_monotone(n, s, t, data):
    if s < t:
        s, t = t, s
    k = data.draw(st.integers(0, t - 2))
    v = spectral_bound_generic(n, s, t, k)
    assert spectral_bound_generic(n + 1, s, t, k) > v
    assert spectral_bound_generic(n, s + 1, t, k) > v


@settings(max_examples=50)
@given(instances)
def test_bounds_nonnegative(inst):
    assert all(b.value >= 0 for b in all_bounds(inst))


def test_bounds_are_not_rounded():
    assert not float(kst_bound(ZInstance(64, 64, 3, 3))).is_integer()
    assert math.isfinite(kst_bound(ZInstance(10**6, 10**6, 12, 12)))

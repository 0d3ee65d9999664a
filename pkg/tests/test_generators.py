import pytest

from hadpoly.analysis import (
    has_internal_zeros,
    is_gamma_positive,
    is_log_concave,
    is_real_rooted,
    is_ulc,
    symmetry_certificate,
)
from hadpoly.decomp import (
    decomposition_is_gamma_positive,
    decomposition_is_interlacing,
    decomposition_is_nonnegative,
)
from hadpoly.generators import (
    TrialConfig,
    gen_contiguous_nonneg,
    gen_gamma_positive,
    gen_gamma_positive_symdec,
    gen_interlacing_symdec,
    gen_logconcave,
    gen_nonneg_symdec,
    gen_real_rooted,
    gen_symmetric,
    gen_ulc,
)
from hadpoly.rng import SplitMix64


class TestTrialConfig:
    def test_defaults(self):
        cfg = TrialConfig()
        assert cfg.trials == 200 and cfg.max_degree == 8

    def test_validation(self):
        with pytest.raises(ValueError):
            TrialConfig(trials=0)
        with pytest.raises(ValueError):
            TrialConfig(seed=-1)
        with pytest.raises(ValueError):
            TrialConfig(max_degree=0)


class TestSplitMix:
    def test_deterministic(self):
        a = SplitMix64(42)
        b = SplitMix64(42)
        assert [a.next_u64() for _ in range(5)] == [b.next_u64() for _ in range(5)]

    def test_derive_is_stable_and_independent(self):
        base = SplitMix64(42)
        child1 = base.derive(3, 7)
        child2 = base.derive(3, 7)
        other = base.derive(3, 8)
        s1 = [child1.next_u64() for _ in range(3)]
        assert s1 == [child2.next_u64() for _ in range(3)]
        assert s1 != [other.next_u64() for _ in range(3)]

    def test_randint_bounds(self):
        rng = SplitMix64(1)
        values = [rng.randint(2, 5) for _ in range(200)]
        assert set(values) <= {2, 3, 4, 5}
        assert set(values) == {2, 3, 4, 5}

    def test_rational_bounds(self):
        rng = SplitMix64(2)
        for _ in range(100):
            r = rng.rational(9, 9)
            assert 0 <= r <= 9


class TestHypothesisValidity:
    """Every generator's output satisfies its own hypothesis predicate."""

    def test_real_rooted(self):
        rng = SplitMix64(5)
        for i in range(1000):
            t = gen_real_rooted(rng, i % 9, 9)
            assert is_real_rooted(t.poly).holds
            assert all(c >= 0 for c in t.poly.coeffs)
            assert t.ref_degree == (i % 9)

    def test_ulc(self):
        rng = SplitMix64(7)
        for i in range(300):
            d = i % 8
            t = gen_ulc(rng, d, 9)
            assert is_ulc(t.poly, d).holds

    def test_ulc_reaches_non_real_rooted(self):
        rng = SplitMix64(11)
        hit = False
        for i in range(300):
            t = gen_ulc(rng, 2 + i % 5, 9)
            if not is_real_rooted(t.poly).holds:
                hit = True
                break
        assert hit

    def test_symmetric(self):
        rng = SplitMix64(13)
        for i in range(1000):
            s = i % 8
            defect = i % 3
            t = gen_symmetric(rng, s, defect, 9)
            cert = symmetry_certificate(t.poly, t.ref_degree)
            assert cert is not None
            assert cert.center_numerator == s
            assert cert.defect == defect
            assert is_gamma_positive(t.poly, s).holds

    def test_gamma_positive(self):
        rng = SplitMix64(17)
        for i in range(1000):
            s = i % 9
            t = gen_gamma_positive(rng, s, 9)
            assert t.ref_degree == s
            assert is_gamma_positive(t.poly, s).holds

    def test_interlacing_symdec(self):
        rng = SplitMix64(19)
        for i in range(300):
            d = i % 7
            dec = gen_interlacing_symdec(rng, d, 9)
            assert dec.d == d
            assert decomposition_is_nonnegative(dec).holds
            assert decomposition_is_interlacing(dec).holds

    def test_logconcave(self):
        rng = SplitMix64(23)
        for i in range(1000):
            d = i % 9
            t = gen_logconcave(rng, d, 9)
            assert is_log_concave(t.poly).holds
            assert has_internal_zeros(t.poly).holds
            assert t.poly.degree == d

    def test_contiguous(self):
        rng = SplitMix64(29)
        for i in range(1000):
            d = i % 9
            t = gen_contiguous_nonneg(rng, d, 9)
            assert has_internal_zeros(t.poly).holds
            assert t.poly.degree == d

    def test_nonneg_symdec(self):
        rng = SplitMix64(31)
        for i in range(1000):
            d = i % 8
            dec = gen_nonneg_symdec(rng, d, 9)
            assert decomposition_is_nonnegative(dec).holds
            assert not dec.reconstruct().is_zero

    def test_gamma_symdec(self):
        rng = SplitMix64(37)
        for i in range(1000):
            d = i % 8
            dec = gen_gamma_positive_symdec(rng, d, 9)
            assert decomposition_is_gamma_positive(dec).holds


class TestDeterminism:
    def test_same_seed_same_instances(self):
        a = [gen_real_rooted(SplitMix64(99).derive(i), 5, 9).poly for i in range(10)]
        b = [gen_real_rooted(SplitMix64(99).derive(i), 5, 9).poly for i in range(10)]
        assert a == b

    def test_different_seeds_differ(self):
        a = gen_real_rooted(SplitMix64(1), 6, 9).poly
        b = gen_real_rooted(SplitMix64(2), 6, 9).poly
        assert a != b

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hadpoly.poly import Poly
from hadpoly.roots import (
    RealRoot,
    compare_roots,
    count_real_roots,
    isolate_roots,
    real_roots_with_multiplicity,
    square_free_part,
    sturm_chain,
    yun_decomposition,
)


def P(*coeffs):
    return Poly(coeffs)


def linear_product(*roots):
    """prod (x - r) for the given rational roots."""
    p = Poly.one()
    for r in roots:
        p = p * Poly([-Fraction(r), 1])
    return p


small_roots = st.fractions(min_value=-6, max_value=6, max_denominator=4)


class TestSturm:
    def test_quadratic_no_real_roots(self):
        assert count_real_roots(P(1, 0, 7)) == 0

    def test_distinct_linear_factors(self):
        p = linear_product(-2, -1, 3)
        assert count_real_roots(p) == 3

    def test_interval_counts(self):
        p = linear_product(-2, -1, 3)
        assert count_real_roots(p, Fraction(-3), Fraction(0)) == 2
        assert count_real_roots(p, Fraction(0), Fraction(4)) == 1
        # (lo, hi] includes the right endpoint
        assert count_real_roots(p, Fraction(-2), Fraction(-1)) == 1
        assert count_real_roots(p, Fraction(-3), Fraction(-2)) == 1

    def test_chain_of_zero_raises(self):
        with pytest.raises(ValueError):
            sturm_chain(P())

    @given(st.lists(small_roots, min_size=1, max_size=5))
    @settings(max_examples=50, deadline=None)
    def test_counts_distinct_roots(self, roots):
        p = linear_product(*roots)
        assert count_real_roots(p) == len(set(roots))


class TestSquareFree:
    def test_square_free_part(self):
        p = P(1, 1) ** 2 * P(2, 1)
        assert square_free_part(p) == (P(1, 1) * P(2, 1)).monic()

    def test_yun_multiplicities(self):
        p = P(1, 1) ** 2 * P(2, 1)
        assert yun_decomposition(p) == [(P(2, 1), 1), (P(1, 1), 2)]

    def test_yun_rebuilds_monic_input(self):
        p = P(1, 1) ** 3 * P(3, 1) ** 2 * P(-1, 1)
        acc = Poly.one()
        for q, m in yun_decomposition(p):
            acc = acc * q**m
        assert acc == p.monic()


class TestIsolation:
    def test_repeated_and_simple_rational_roots(self):
        iso = isolate_roots(P(1, 1) ** 2 * P(2, 1))
        assert [(iv.lo, iv.hi, iv.multiplicity) for iv in iso.intervals] == [
            (-2, -2, 1),
            (-1, -1, 2),
        ]
        assert iso.exact_roots == ((Fraction(-2), 1), (Fraction(-1), 2))

    def test_irrational_roots_bracketed(self):
        iso = isolate_roots(P(-2, 0, 1))
        assert iso.count_distinct == 2
        neg, pos = iso.intervals
        assert -2 < neg.lo < neg.hi < -1
        assert 1 < pos.lo < pos.hi < 2

    def test_cubic_with_one_real_root(self):
        # 8x^3 + 10x^2 + 3x + 1 has the single real root -1
        iso = isolate_roots(P(1, 3, 10, 8))
        assert [(iv.lo, iv.hi, iv.multiplicity) for iv in iso.intervals] == [
            (-1, -1, 1)
        ]

    def test_non_dyadic_rational_roots_exact(self):
        p = linear_product(Fraction(-3, 7), Fraction(-1, 3), 0, 5, 5, 5)
        iso = isolate_roots(p)
        assert iso.exact_roots == (
            (Fraction(-3, 7), 1),
            (Fraction(-1, 3), 1),
            (Fraction(0), 1),
            (Fraction(5), 3),
        )

    def test_intervals_disjoint_and_sorted(self):
        p = linear_product(-1, Fraction(-9, 8), Fraction(-17, 16), -2) * P(1, 0, 1)
        iso = isolate_roots(p)
        for a, b in zip(iso.intervals, iso.intervals[1:]):
            assert a.hi < b.lo

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            isolate_roots(P(3))

    def test_count_matches_sturm(self):
        p = linear_product(-3, Fraction(-1, 2), 1, 4) * P(1, 1, 1)
        iso = isolate_roots(p)
        assert iso.count_distinct == count_real_roots(p)
        # Sturm count over each reported interval is exactly one
        for iv in iso.intervals:
            if iv.is_exact:
                continue
            assert count_real_roots(p, iv.lo, iv.hi) == 1

    @given(st.lists(small_roots, min_size=1, max_size=5))
    @settings(max_examples=40, deadline=None)
    def test_multiplicity_totals(self, roots):
        p = linear_product(*roots)
        iso = isolate_roots(p)
        assert iso.count_with_multiplicity == len(roots)
        assert iso.count_distinct == len(set(roots))


class TestComparison:
    def test_exact_vs_exact(self):
        assert compare_roots(RealRoot.exact(Fraction(1)), RealRoot.exact(Fraction(2))) == -1
        assert compare_roots(RealRoot.exact(Fraction(2)), RealRoot.exact(Fraction(2))) == 0

    def test_shared_algebraic_root_detected_equal(self):
        # sqrt(2) isolated inside two different polynomials
        p1 = P(-2, 0, 1)
        p2 = P(-2, 0, 1) * P(5, 1)
        r1 = real_roots_with_multiplicity(p1)[-1][0]  # sorted ascending
        r2 = real_roots_with_multiplicity(p2)[-1][0]
        assert compare_roots(r1, r2) == 0

    def test_close_roots_separate(self):
        a = Fraction(1, 3)
        b = Fraction(1, 3) + Fraction(1, 2**20)
        p = linear_product(a, b)
        roots = [r for r, _ in real_roots_with_multiplicity(p)]
        assert len(roots) == 2
        assert compare_roots(roots[0], roots[1]) == -1

    def test_ascending_order(self):
        p = linear_product(-2, Fraction(-1, 2), 3) * P(-3, 0, 1)
        values = real_roots_with_multiplicity(p)
        for (r1, _), (r2, _) in zip(values, values[1:]):
            assert compare_roots(r1, r2) == -1

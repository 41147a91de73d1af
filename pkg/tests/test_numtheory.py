import math
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from circulant_transfer import (
    divisor_count,
    divisors,
    euler_phi,
    gn_set,
    gnr_set,
    mobius,
    ramanujan_sum,
    sine_sum_closed,
    sine_sum_direct,
    two_adic_valuation,
)


def cosine_sum(n: int, q: int) -> float:
    """Direct floating oracle for ramanujan_sum."""
    return sum(
        math.cos(2 * math.pi * ((a * q) % n) / n)
        for a in range(1, n + 1)
        if gcd(a, n) == 1
    )


class TestTwoAdicValuation:
    @pytest.mark.parametrize("n,expected", [(8, 3), (12, 2), (1, 0), (2, 1), (96, 5)])
    def test_values(self, n, expected):
        assert two_adic_valuation(n) == expected

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            two_adic_valuation(0)

    @given(st.integers(0, 20), st.integers(0, 1000))
    def test_reconstruction(self, a, k):
        n = 2**a * (2 * k + 1)
        assert two_adic_valuation(n) == a


class TestDivisors:
    @pytest.mark.parametrize(
        "n,expected",
        [(4, [1, 2, 4]), (1, [1]), (12, [1, 2, 3, 4, 6, 12])],
    )
    def test_values(self, n, expected):
        assert divisors(n) == expected
        assert divisor_count(n) == len(expected)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            divisors(0)

    @given(st.integers(1, 500))
    def test_matches_filter(self, n):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


class TestResidueClasses:
    def test_gn_units(self):
        assert gn_set(8, 1).elements == (1, 3, 5, 7)

    def test_gn_gcd_two(self):
        assert gn_set(8, 2).elements == (2, 6)

    def test_gn_empty(self):
        assert gn_set(4, 4).elements == ()

    def test_gn_rejects_nondivisor(self):
        with pytest.raises(ValueError):
            gn_set(8, 3)

    @pytest.mark.parametrize(
        "n,d,r,expected",
        [(8, 1, 1, (1, 5)), (8, 2, 3, (6,)), (4, 1, 3, (3,)), (4, 1, 1, (1,))],
    )
    def test_gnr_values(self, n, d, r, expected):
        assert gnr_set(n, d, r).elements == expected

    def test_gnr_rejects_bad_residue(self):
        with pytest.raises(ValueError):
            gnr_set(8, 1, 2)

    def test_gnr_rejects_bad_divisor(self):
        with pytest.raises(ValueError):
            gnr_set(8, 4, 1)

    def test_gnr_rejects_odd_order(self):
        with pytest.raises(ValueError):
            gnr_set(6, 1, 1)

    def test_partition(self):
        # the two orientation classes split gn_set(n, d) whenever 4 | n/d
        for n in range(4, 68, 4):
            for d in divisors(n // 4):
                ones = gnr_set(n, d, 1).as_set()
                threes = gnr_set(n, d, 3).as_set()
                assert ones.isdisjoint(threes)
                assert ones | threes == gn_set(n, d).as_set()

    def test_classes_are_mutual_negations(self):
        for n in (4, 8, 12, 16, 20):
            ones = gnr_set(n, 1, 1).as_set()
            threes = gnr_set(n, 1, 3).as_set()
            assert {(n - k) % n for k in ones} == threes


class TestRamanujanSum:
    @pytest.mark.parametrize(
        "n,q,expected",
        [(1, 7, 1), (5, 3, -1), (5, 10, 4), (6, 2, -1), (12, 4, -2)],
    )
    def test_values(self, n, q, expected):
        assert ramanujan_sum(n, q) == expected

    def test_against_cosine_oracle(self):
        for n in range(1, 49):
            for q in range(1, 2 * n + 1):
                assert abs(ramanujan_sum(n, q) - cosine_sum(n, q)) < 1e-6

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            ramanujan_sum(0, 1)
        with pytest.raises(ValueError):
            ramanujan_sum(3, 0)

    @given(st.integers(1, 200), st.integers(1, 2000))
    def test_periodicity(self, n, q):
        folded = q % n or n
        assert ramanujan_sum(n, q) == ramanujan_sum(n, folded)

    @given(st.integers(1, 300))
    def test_phi_and_mobius_specials(self, n):
        # c_n(n) sums phi(n) cosines of full turns; c_n(1) hits all primitive roots
        assert ramanujan_sum(n, n) == euler_phi(n)
        assert ramanujan_sum(n, 1) == mobius(n)


class TestSineSums:
    @pytest.mark.parametrize(
        "n,q,sign,expected",
        [(4, 1, 1, -2), (8, 2, 1, -4), (4, 2, 1, 0), (4, 1, -1, 2), (8, 6, 1, 4)],
    )
    def test_direct_values(self, n, q, sign, expected):
        assert sine_sum_direct(n, q, sign) == expected

    @pytest.mark.parametrize("n,q,expected", [(4, 1, -2), (8, 2, -4), (8, 1, 0)])
    def test_closed_values(self, n, q, expected):
        assert sine_sum_closed(n, q) == expected

    @pytest.mark.parametrize("func", [sine_sum_direct, sine_sum_closed])
    def test_rejects_orders_off_four(self, func):
        for n in (1, 2, 6, 9):
            with pytest.raises(ValueError):
                func(n, 1)

    def test_closed_matches_direct(self):
        for n in range(4, 68, 4):
            for q in range(1, n + 1):
                assert sine_sum_closed(n, q) == sine_sum_direct(n, q, 1)

    def test_sign_antisymmetry(self):
        for n in range(4, 44, 4):
            for q in range(1, n + 1):
                assert sine_sum_direct(n, q, -1) == -sine_sum_direct(n, q, 1)

    def test_reduction_to_quadruple_odd_part(self):
        # s_n(q) = 2**(t-2) * s_{4m}(q / 2**(t-2)) for n = 2**t * m, t >= 3
        for n in (8, 16, 24, 32, 48, 64, 96):
            t = two_adic_valuation(n)
            m = n >> t
            step = 1 << (t - 2)
            for q in range(step, n + 1, step):
                assert sine_sum_closed(n, q) == step * sine_sum_closed(4 * m, q // step)

    def test_odd_part_shift_lands_in_orientation_class(self):
        # m + 4r stays coprime to 4m and keeps a fixed residue mod 4
        for m in (1, 3, 5, 7, 9, 11, 15, 21):
            n = 4 * m
            target = gnr_set(n, 1, 1 if m % 4 == 1 else 3).as_set()
            for r in gn_set(m, 1):
                assert (m + 4 * r) % n in target

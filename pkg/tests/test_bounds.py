import math
import random

import pytest

from conftest import random_finite_order_matrix
from fatf.bounds import (
    automorphism_order_bound,
    constants,
    free_periodic_exponent,
    group_periodic_exponent,
    order_bound,
    periodic_exponent_bound,
    phi_threshold,
)
from fatf.intlat import matrix_order, unity_exponent


class TestThreshold:
    def test_known_values(self):
        assert phi_threshold(1) == 2
        assert phi_threshold(2) == 6
        assert phi_threshold(3) == 6
        assert phi_threshold(4) == 12

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            phi_threshold(0)


class TestConstants:
    def test_report_1_2(self):
        r = constants(1, 2)
        assert (r.C, r.L1, r.L3, r.free_per, r.C3) == (2, 2, 2, 720, 720)

    def test_report_2_2(self):
        r = constants(2, 2)
        assert r.L1 == 36
        assert r.C1 == 36 * 36

    def test_degenerate_free_rank(self):
        assert free_periodic_exponent(0) == 1
        assert free_periodic_exponent(1) == 1
        assert constants(1, 0).free_per == 1
        # rank <= 1 collapses to a free-abelian group of rank m + n
        assert automorphism_order_bound(3, 1) == order_bound(4)
        assert automorphism_order_bound(0, 3) == order_bound(3)

    def test_zero_abelian_rank(self):
        assert order_bound(0) == 1
        assert constants(0, 2).L1 == 1

    def test_exponent_is_factorial_of_threshold(self):
        assert periodic_exponent_bound(2) == math.factorial(6)
        assert group_periodic_exponent(1, 2) == math.lcm(2, 720, 720)


class TestInstanceBounds:
    def test_matrix_order_within_bound(self):
        rng = random.Random(7)
        for _ in range(60):
            m = rng.randint(1, 4)
            Q = random_finite_order_matrix(rng, m)
            k = matrix_order(Q)
            assert k != math.inf
            assert k <= order_bound(m)

    def test_unity_exponent_divides_uniform_exponent(self):
        rng = random.Random(8)
        for _ in range(60):
            m = rng.randint(1, 3)
            Q = random_finite_order_matrix(rng, m)
            assert periodic_exponent_bound(m) % unity_exponent(Q) == 0

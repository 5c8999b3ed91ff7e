import random

import pytest

from gsftkit.errors import BudgetExceeded, HypothesisError, InputError
from gsftkit.groups import FiniteGroup
from gsftkit.gsft import augmentation_matrix
from gsftkit.matrices import IntMatrix
from gsftkit.periodic import brute_force_census, census, divisors, is_prime, kim_roush_condition, mobius
from gsftkit.sampling import random_essential_matrix, random_u_multiple


def test_number_theory_helpers():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_full_two_shift_counts():
    c = census(IntMatrix([[2]]), 6)
    assert c.per_counts == (2, 4, 8, 16, 32, 64)
    assert c.least_period_points == (2, 2, 6, 12, 30, 54)
    assert c.least_period_orbits == (2, 1, 2, 3, 6, 9)


def test_golden_mean_counts():
    c = census(IntMatrix([[1, 1], [1, 0]]), 5)
    assert c.per_counts == (1, 3, 4, 7, 11)  # Lucas numbers
    assert c.least_period_orbits == (1, 1, 1, 1, 2)


def test_census_matches_brute_force():
    rng = random.Random(17)
    for _ in range(20):
        a = random_essential_matrix(rng, rng.randint(1, 3))
        assert census(a, 5) == brute_force_census(a, 5)


def test_budget_and_input_errors():
    with pytest.raises(BudgetExceeded):
        brute_force_census(IntMatrix([[3]]), 10, budget=100)
    with pytest.raises(InputError):
        census(IntMatrix([[1, 0], [1, 0]]), 3)
    with pytest.raises(InputError):
        census(IntMatrix([[-1]]), 3)


def test_csv_and_json():
    c = census(IntMatrix([[2]]), 3)
    assert c.to_csv().splitlines() == ["n,trace,least_period_points,least_period_orbits", "1,2,2,2", "2,4,2,1",
                                       "3,8,6,2"]
    assert c.to_json()["rows"][1] == {"n": 2, "trace": 4, "least_period_points": 2, "least_period_orbits": 1}


def test_kim_roush_golden_cases():
    assert kim_roush_condition(IntMatrix([[2]]), 2, 16).passed
    assert kim_roush_condition(IntMatrix([[3]]), 3, 9).passed
    verdict = kim_roush_condition(IntMatrix([[1, 1], [1, 0]]), 2, 16)
    assert not verdict.passed
    assert verdict.first_failure.n == 2
    assert str(verdict.first_failure.value) == "1/2"
    assert verdict.to_json()["scope"] == "checked up to n = 16"


def test_kim_roush_points_mode_is_weaker():
    # the fractional golden mean sum is rejected only in orbit mode
    assert kim_roush_condition(IntMatrix([[1, 1], [1, 0]]), 2, 2, mode="points").passed
    assert kim_roush_condition(IntMatrix([[2]]), 2, 16, mode="points").passed


def test_kim_roush_hypotheses():
    with pytest.raises(InputError):
        kim_roush_condition(IntMatrix([[2]]), 4, 8)
    with pytest.raises(HypothesisError):
        kim_roush_condition(IntMatrix([[0, 1], [1, 0]]), 2, 8)
    with pytest.raises(InputError):
        kim_roush_condition(IntMatrix([[2]]), 2, 8, mode="other")


def test_inert_extensions_pass_kim_roush():
    rng = random.Random(23)
    for p in (2, 3):
        group = FiniteGroup.cyclic(p)
        for _ in range(10):
            b = random_u_multiple(rng, group, rng.randint(1, 2), primitive=True)
            assert kim_roush_condition(augmentation_matrix(b), p, 12).passed

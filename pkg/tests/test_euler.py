from fractions import Fraction
from math import gcd

import pytest

from hermzeta.characters import TRIVIAL, QuadraticCharacter, sigma_neg
from hermzeta.euler import (
    euler_factor,
    local_lemma_check,
    theta,
    theta0,
    theta0_charsum_check,
    theta0_closed_form,
    theta1,
)
from hermzeta.exact_arith import kronecker, prime_divisors


def test_factor_trivial_when_p_misses_D_delta():
    assert euler_factor(1, 5, -3).coefficients == (1,)


def test_factor_split_prime_t2():
    # chi_{-7}(2) = 1, so R_2(4, X) = 1 + 2X + 4X**2
    assert kronecker(-7, 2) == 1
    assert euler_factor(4, 2, -7).coefficients == (1, 2, 4)


def test_factor_inert_prime():
    # chi_{-4}(3) = -1: (1 - (-3X)**2) / (1 + 3X) = 1 - 3X
    assert euler_factor(3, 3, -4).coefficients == (1, -3)


@pytest.mark.parametrize("delta", [1, 2, -1, 5, -7, 11])
def test_factor_ramified_odd_t0(delta):
    assert euler_factor(delta, 3, -3).coefficients == (1, kronecker(-delta, 3) * 3)


def test_factor_constant_coefficient_is_one(D):
    for delta in range(-40, 41):
        if delta:
            for p in prime_divisors(D * delta):
                assert euler_factor(delta, p, D).coefficients[0] == 1


def test_theta_example():
    assert theta(1, -3, 2) == Fraction(8, 9)


def test_theta_splits_for_coprime_delta(D):
    for delta in range(-60, 61):
        if delta and gcd(delta, 2 * D) == 1:
            for s in (1, 2, 4):
                assert theta(delta, D, s) == theta0(delta, D, s) * theta1(delta, D, s)


def test_theta1_is_divisor_sum(D):
    chi = QuadraticCharacter(D)
    for delta in range(1, 120):
        if gcd(delta, D) == 1:
            for s in (1, 2, 3, 6):
                assert theta1(delta, D, s) == sigma_neg(chi, TRIVIAL, s, delta)
    assert theta1(1, D, 3) == 1


def test_local_lemma_all_ramified_primes(D):
    for delta in range(-99, 100):
        if delta and gcd(delta, 2 * D) == 1:
            assert theta0(delta, D, 2) == theta0_closed_form(delta, D, 2)
            for p in prime_divisors(D):
                for s in (1, 2, 3):
                    assert local_lemma_check(delta, p, D, s)


@pytest.mark.parametrize("D", [-4, -8, -24, -20, -40, -56, -84, -120])
def test_local_lemma_p2_subcases(D):
    # D/4 mod 8 in {7, 3}, {6}, {2} are the three even shapes
    for delta in range(-199, 200, 2):
        if gcd(delta, D) == 1:
            for s in (1, 2, 4):
                assert local_lemma_check(delta, 2, D, s)


def test_local_lemma_rejects_even_delta():
    with pytest.raises(ValueError):
        local_lemma_check(2, 3, -3, 2)


@pytest.mark.parametrize("delta, D, k, j", [(1, -3, 1, 1), (5, -4, 1, 0), (7, -24, 2, 1)])
def test_theta0_charsum_examples(delta, D, k, j):
    assert theta0_charsum_check(delta, D, k, j)


def test_theta0_charsum_grid(D):
    for delta in range(1, 200):
        if gcd(delta, 2 * D) == 1:
            for k in (1, 2, 3):
                for j in (0, 1):
                    assert theta0_charsum_check(delta, D, k, j)


def test_theta_rejects_zero():
    with pytest.raises(ValueError):
        theta(0, -3, 2)
    with pytest.raises(ValueError):
        theta0(3, -3, 2)

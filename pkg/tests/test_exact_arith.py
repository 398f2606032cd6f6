from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.functions.combinatorial.numbers import kronecker_symbol

from hermzeta.characters import TRIVIAL, QuadraticCharacter
from hermzeta.exact_arith import (
    FACTOR_LIMIT,
    L_nonpositive,
    bernoulli,
    divisors,
    factorize,
    fraction_sqrt,
    gen_bernoulli,
    is_prime,
    kronecker,
    mobius,
    neg_one_pow,
    valuation,
)


@pytest.mark.parametrize("a, n, expected", [(7, 1, 1), (-4, 2, 0), (-4, 3, -1), (-1, 0, 1), (3, 0, 0), (-3, -1, -1)])
def test_kronecker_examples(a, n, expected):
    assert kronecker(a, n) == expected


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_kronecker_matches_sympy(a, n):
    assert kronecker(a, n) == kronecker_symbol(a, n)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 101, 997])
def test_kronecker_is_euler_criterion_at_odd_primes(p):
    for a in range(-2 * p, 2 * p):
        e = pow(a, (p - 1) // 2, p)
        assert kronecker(a, p) == (0 if a % p == 0 else (1 if e == 1 else -1))


@given(st.integers(-500, 500), st.integers(1, 500), st.integers(1, 500))
def test_kronecker_multiplicative_in_bottom(a, m, n):
    assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


def test_is_prime_agrees_with_sympy():
    assert [n for n in range(3000) if is_prime(n)] == list(sympy.primerange(0, 3000))
    assert is_prime(2**61 - 1) and not is_prime(3215031751)


@pytest.mark.parametrize("n, expected", [(1, []), (12, [(2, 2), (3, 1)]), (-15, [(3, 1), (5, 1)])])
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


@given(st.integers(1, 10**9))
def test_factorize_matches_sympy(n):
    assert dict(factorize(n)) == sympy.factorint(n)


def test_factorize_rejects_zero_and_huge():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(FACTOR_LIMIT + 1)


@pytest.mark.parametrize("n, p, expected", [(8, 2, (3, 1)), (5, 2, (0, 5)), (-12, 3, (1, -4))])
def test_valuation(n, p, expected):
    assert valuation(n, p) == expected


def test_divisors_and_mobius():
    assert divisors(-12) == (1, 2, 3, 4, 6, 12)
    assert [mobius(n) for n in range(1, 200)] == [sympy.mobius(n) for n in range(1, 200)]


def test_fraction_sqrt():
    assert fraction_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    with pytest.raises(ValueError):
        fraction_sqrt(Fraction(2))


@pytest.mark.parametrize("m, expected", [(0, 1), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (3, 0), (12, Fraction(-691, 2730))])
def test_bernoulli_examples(m, expected):
    assert bernoulli(m) == expected


def test_bernoulli_even_agrees_with_sympy():
    for m in range(2, 40, 2):
        b = sympy.bernoulli(m)
        assert bernoulli(m) == Fraction(int(b.p), int(b.q))


def test_gen_bernoulli_examples():
    assert gen_bernoulli(TRIVIAL, 2) == Fraction(1, 6)
    assert gen_bernoulli(QuadraticCharacter(-4), 1) == Fraction(-1, 2)
    assert gen_bernoulli(QuadraticCharacter(-4), 3) == Fraction(3, 2)


def test_gen_bernoulli_parity_vanishing():
    # B_{m,chi} = 0 when chi(-1) != (-1)**m, except m = 1 for trivial chi
    for D in (-3, -4, -7, 5, 8, 12):
        chi = QuadraticCharacter(D)
        for m in range(1, 9):
            if chi.parity != neg_one_pow(m):
                assert gen_bernoulli(chi, m) == 0


def test_L_nonpositive_examples():
    assert L_nonpositive(TRIVIAL, -1) == Fraction(-1, 12)
    assert L_nonpositive(TRIVIAL, 0) == Fraction(-1, 2)
    assert L_nonpositive(QuadraticCharacter(-4), 0) == Fraction(1, 2)
    assert L_nonpositive(QuadraticCharacter(-4), -2) == Fraction(-1, 2)


def test_L_at_zero_is_class_number_formula():
    # L(chi_D, 0) = 2 h(D) / w(D) for D < 0
    hw = {-3: (1, 6), -4: (1, 4), -7: (1, 2), -15: (2, 2), -20: (2, 2), -23: (3, 2), -47: (5, 2)}
    for D, (h, w) in hw.items():
        assert L_nonpositive(QuadraticCharacter(D), 0) == Fraction(2 * h, w)


def test_L_nonpositive_against_hurwitz_numerics():
    import mpmath

    for D in (-3, -4, -8, 5):
        chi = QuadraticCharacter(D)
        f = chi.modulus
        for s in (0, -1, -2, -3):
            num = sum(chi(a) * mpmath.zeta(s, mpmath.mpf(a) / f) for a in range(1, f + 1)) * mpmath.mpf(f) ** (-s)
            assert abs(float(L_nonpositive(chi, s)) - float(num)) < 1e-9

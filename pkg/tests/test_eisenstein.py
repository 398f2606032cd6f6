from dataclasses import replace
from fractions import Fraction
from math import gcd

import mpmath
import pytest

from hermzeta.characters import TRIVIAL, QuadraticCharacter
from hermzeta.eisenstein import (
    C_from_L,
    C_bernoulli,
    C_symbolic,
    F_expansion,
    L_odd_positive,
    SymbolicConstant,
    eisenstein_combination,
    eisenstein_expansion,
    fricke_check,
    fricke_check_gauss,
    fricke_image,
    g_combination,
    g_combination_gauss,
    g_constant_check,
    special_value_Z,
    special_value_Z_star,
    special_value_Z_theta,
    verify_main_theorem,
    zeta_even,
)
from hermzeta.euler import theta
from hermzeta.exact_arith import L_nonpositive, neg_one_pow


def _L_numeric(D, s):
    chi = QuadraticCharacter(D)
    f = chi.modulus
    return mpmath.mpf(f) ** (-s) * sum(chi(a) * mpmath.zeta(s, mpmath.mpf(a) / f) for a in range(1, f + 1))


# ------------------------------------------------------------ SymbolicConstant


def test_symbolic_canonical_form():
    c = SymbolicConstant(Fraction(1, 2), 1, 3, 7)
    assert (c.rational, c.pi_exp, c.sqrt_exp) == (Fraction(7, 2), 1, 1)
    assert SymbolicConstant(Fraction(3), 2, 1, 1).sqrt_exp == 0
    zero = SymbolicConstant(Fraction(0), -1, 1, 3)
    assert (zero.pi_exp, zero.sqrt_exp) == (0, 0)


def test_symbolic_arithmetic():
    a = SymbolicConstant(Fraction(2), -1, 1, 3)
    assert a * a == SymbolicConstant(Fraction(12), -2)
    assert (a / a).is_rational and a / a == SymbolicConstant(Fraction(1))
    assert 1 / a == SymbolicConstant(Fraction(1, 6), 1, 1, 3)
    assert -a == SymbolicConstant(Fraction(-2), -1, 1, 3)
    with pytest.raises(ValueError):
        a * SymbolicConstant(Fraction(1), 0, 1, 5)


def test_symbolic_float_uses_high_precision_pi():
    a = SymbolicConstant(Fraction(2), -1, 1, 3)
    assert float(a) == float(2 * mpmath.sqrt(3) / mpmath.pi)
    assert str(a) == "2 * pi^-1 * sqrt(3)"


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_zeta_even(k):
    z = zeta_even(k)
    assert z.pi_exp == 2 * k and z.sqrt_exp == 0
    assert abs(float(z) - float(mpmath.zeta(2 * k))) < 1e-15


def test_zeta_even_values():
    assert zeta_even(1) == SymbolicConstant(Fraction(1, 6), 2)
    assert zeta_even(2) == SymbolicConstant(Fraction(1, 90), 4)


def test_L_odd_positive_numeric(D):
    for k in (1, 2, 3):
        v = L_odd_positive(D, k)
        assert (v.pi_exp, v.sqrt_exp) == (2 * k + 1, 1)
        assert abs(float(v) / float(_L_numeric(D, 2 * k + 1)) - 1) < 1e-12


def test_L_odd_positive_minus_four():
    # L(chi_{-4}, 3) = pi**3 / 32; the root of |D| = 4 stays symbolic
    v = L_odd_positive(-4, 1)
    assert (v.rational, v.sqrt_exp) == (Fraction(1, 64), 1)
    assert v == SymbolicConstant(Fraction(1, 32), 3)
    assert hash(v) == hash(SymbolicConstant(Fraction(1, 32), 3))


# ---------------------------------------------------------------- C_{k,D}


def test_C_examples():
    assert C_symbolic(1, -3) == SymbolicConstant(Fraction(-3, 8), -1, 1, 3)


def test_C_structure(D):
    for k in (1, 2, 3, 4):
        c = C_symbolic(k, D)
        assert (c.pi_exp, c.sqrt_exp) == (-1, 1)
        assert c.rational < 0
        assert C_bernoulli(k, D) == C_from_L(k, D)


def test_C_numeric_against_definition():
    for D in (-3, -4, -7):
        for k in (1, 2):
            direct = -mpmath.zeta(2 * k) / (abs(D) ** (2 * k) * _L_numeric(D, 2 * k + 1))
            assert abs(float(C_symbolic(k, D)) - float(direct)) < 1e-14 * abs(float(direct))


# ------------------------------------------------------------ q-expansions


def test_E3_minus_four_trivial():
    e = eisenstein_expansion(QuadraticCharacter(-4), TRIVIAL, 3, 5)
    assert e[0] == Fraction(-1, 4)
    assert e[1] == 1 and e[2] == 1 and e[3] == -8
    assert (e.level, e.character_disc) == (4, -4)


def test_eisenstein_expansion_shape(D):
    for d1, d2 in [(D, 1), (1, D)]:
        e = eisenstein_expansion(QuadraticCharacter(d1), QuadraticCharacter(d2), 5, 10)
        assert e[1] == 1
        if d2 != 1:
            assert e[0] == 0


def test_eisenstein_rejects_low_weight():
    with pytest.raises(ValueError):
        eisenstein_expansion(QuadraticCharacter(-4), TRIVIAL, 1, 5)


def test_F_constant_minus_four():
    assert F_expansion(1, -4, 0, 2)[0] == Fraction(1, 64)


def test_F_first_coefficient(D):
    for k in (1, 2):
        for j in (0, 1):
            s = (-1) ** j
            assert F_expansion(k, D, j, 1)[1] == s * theta(s, D, 2 * k)


def test_combination_constant_term(D):
    for k in (1, 2, 3):
        combo = eisenstein_combination(k, D, 0).expand(1)
        expected = -L_nonpositive(QuadraticCharacter(D), -2 * k) / (2 * abs(D) ** (2 * k))
        assert combo[0] == expected
        assert combo[1] == F_expansion(k, D, 0, 1)[1]


def test_combination_full_match_minus_three():
    assert F_expansion(1, -3, 1, 50) == eisenstein_combination(1, -3, 1).expand(50)


@pytest.mark.parametrize("k, D, j", [(1, -3, 0), (2, -24, 1)])
def test_verify_main_theorem_examples(k, D, j):
    report = verify_main_theorem(k, D, j, 200)
    assert report.ok and report.checked == 201


def test_verify_main_theorem_coprime_subset():
    report = verify_main_theorem(1, -15, 0, 100, indices="coprime")
    assert report.ok and report.checked == len([n for n in range(1, 101) if gcd(n, 30) == 1])
    with pytest.raises(ValueError):
        verify_main_theorem(1, -15, 0, 0)


# ------------------------------------------------------------------ Fricke


def test_fricke_example():
    assert fricke_check(1, -4, 0, 50)


def test_fricke_grid(D):
    for k in (1, 2):
        for j in (0, 1):
            assert fricke_check(k, D, j, 40)
            assert fricke_check_gauss(k, D, j, 40)
            assert g_constant_check(k, D, j)
            assert g_constant_check(k, D, j, gauss=True)


def test_fricke_image_twice_returns_the_pairs_up_to_scale():
    combo = eisenstein_combination(1, -15, 0)
    once = fricke_image(combo, "gauss")
    twice = fricke_image(replace(once, i_power=0), "gauss")
    assert [(t.chi1, t.chi2) for t in twice.terms] == [(t.chi1, t.chi2) for t in combo.terms]
    assert len({a.coeff / b.coeff for a, b in zip(twice.terms, combo.terms)}) == 1


def test_g_constant_only_pair_one_D_survives(D):
    g = g_combination(1, D, 0)
    survivors = [t for t in g.terms if t.chi2.is_trivial]
    assert len(survivors) == 1 and survivors[0].chi1.discriminant == D


def test_g_sides_share_constant_term(D):
    for k in (1, 2):
        for j in (0, 1):
            assert g_combination(k, D, j).expand(0)[0] == g_combination_gauss(k, D, j).expand(0)[0]


# ---------------------------------------------------------- special values


def test_special_value_frozen():
    assert special_value_Z(1, 0, -3, 2) == SymbolicConstant(Fraction(2), -1, 1, 3)
    assert special_value_Z(1, 0, -4, 1) == SymbolicConstant(Fraction(5, 2), -1, 1, 4)
    assert special_value_Z(3, 1, -3, 2) == SymbolicConstant(Fraction(3281, 1620), -1, 1, 3)


def test_special_value_matches_theta_route(D):
    for k in (1, 2):
        for j in (0, 1):
            for delta in range(1, 13):
                v = special_value_Z(delta, j, D, k)
                assert (v.pi_exp, v.sqrt_exp) == (-1, 1)
                assert v == special_value_Z_theta(neg_one_pow(j - 1) * delta, D, k)


def test_special_value_Z_star_forms_exist():
    naive = special_value_Z_star(1, 1, -3, 2)
    gauss = special_value_Z_star(1, 1, -3, 2, form="gauss")
    assert (naive.pi_exp, naive.sqrt_exp) == (gauss.pi_exp, gauss.sqrt_exp) == (-1, 1)
    with pytest.raises(ValueError):
        special_value_Z_star(1, 1, -3, 2, form="other")


def test_special_value_rejects_bad_input():
    with pytest.raises(ValueError):
        special_value_Z(0, 0, -3, 1)
    with pytest.raises(ValueError):
        special_value_Z(1, 3, -3, 1)

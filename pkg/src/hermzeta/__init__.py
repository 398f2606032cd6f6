"""Zeta functions of binary Hermitian forms over imaginary quadratic fields.

Exact special values, representation counts and the Eisenstein series that
carry them, with brute-force oracles for every identity.
"""

from .characters import TRIVIAL, QuadraticCharacter, sigma, sigma_neg
from .discriminants import enumerate_F_D, is_fundamental, prime_discriminants, two_star
from .eisenstein import (
    C_symbolic,
    EisensteinCombination,
    QExpansion,
    SymbolicConstant,
    F_expansion,
    eisenstein_combination,
    eisenstein_expansion,
    fricke_check,
    g_combination,
    special_value_Z,
    special_value_Z_star,
    verify_main_theorem,
)
from .euler import euler_factor, theta, theta0, theta1
from .exact_arith import bernoulli, factorize, gen_bernoulli, kronecker, L_nonpositive
from .hermitian import egm_coefficient_oracle, r_count, r_star_count, truncated_Z

__all__ = [
    "TRIVIAL", "QuadraticCharacter", "sigma", "sigma_neg",
    "enumerate_F_D", "is_fundamental", "prime_discriminants", "two_star",
    "C_symbolic", "EisensteinCombination", "QExpansion", "SymbolicConstant", "F_expansion",
    "eisenstein_combination", "eisenstein_expansion", "fricke_check", "g_combination",
    "special_value_Z", "special_value_Z_star", "verify_main_theorem",
    "euler_factor", "theta", "theta0", "theta1",
    "bernoulli", "factorize", "gen_bernoulli", "kronecker", "L_nonpositive",
    "egm_coefficient_oracle", "r_count", "r_star_count", "truncated_Z",
]

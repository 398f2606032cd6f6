"""Real quadratic Dirichlet characters and twisted divisor sums."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exact_arith import divisors, kronecker


@dataclass(frozen=True)
class QuadraticCharacter:
    """chi_d = (d / .) for a fundamental discriminant d (d = 1 gives the trivial character).

    The modulus-1 character is 1 on every integer, including 0 and negatives.
    """

    discriminant: int
    modulus: int = field(init=False)

    def __post_init__(self) -> None:
        if self.discriminant == 0:
            raise ValueError("discriminant must be nonzero")
        object.__setattr__(self, "modulus", abs(self.discriminant))

    def __call__(self, n: int) -> int:
        if self.modulus == 1:
            return 1
        return kronecker(self.discriminant, n)

    @property
    def is_trivial(self) -> bool:
        return self.modulus == 1

    @property
    def parity(self) -> int:
        """chi(-1)."""
        return self(-1)

    def __repr__(self) -> str:
        return f"chi_{self.discriminant}"


TRIVIAL = QuadraticCharacter(1)


def chi_eval(chi: QuadraticCharacter, n: int) -> int:
    return chi(n)


def sigma(chi1: QuadraticCharacter, chi2: QuadraticCharacter, t: int, n: int) -> int:
    """sigma_t(chi1, chi2; n) = sum_{d | n, d > 0} chi1(d) chi2(n/d) d**t.

    For n < 0 the divisors d run over |n| and chi2 sees the signed cofactor n/d.
    """
    if n == 0:
        raise ValueError("sigma is undefined at n = 0")
    if t < 0:
        raise ValueError("use sigma_neg for negative exponents")
    total = 0
    for d in divisors(n):
        c1 = chi1(d)
        if c1:
            total += c1 * chi2(n // d) * d**t
    return total


def sigma_neg(chi1: QuadraticCharacter, chi2: QuadraticCharacter, s: int, n: int) -> Fraction:
    """sigma_{-s}(chi1, chi2; n) as an exact rational (s >= 0)."""
    if n == 0:
        raise ValueError("sigma is undefined at n = 0")
    total = Fraction(0)
    for d in divisors(n):
        c = chi1(d) * chi2(n // d)
        if c:
            total += Fraction(c, d**s)
    return total


def sigma_functional_check(chi_D: QuadraticCharacter, s: int, delta: int) -> bool:
    """|delta|**s sigma_{-s}(chi_D; delta) == chi_D(|delta|) sigma_s(chi_D; delta)."""
    if delta == 0 or gcd(chi_D.modulus, delta) != 1:
        raise ValueError("need delta != 0 coprime to the modulus")
    if s < 1:
        raise ValueError("need s >= 1")
    lhs = abs(delta) ** s * sigma_neg(chi_D, TRIVIAL, s, delta)
    rhs = chi_D(abs(delta)) * sigma(chi_D, TRIVIAL, s, delta)
    return lhs == rhs

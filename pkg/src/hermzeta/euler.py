"""Local Euler factors R_p(delta, X) and the finite Euler product theta(delta, s).

``theta(delta, s) = prod_{p | D*delta} R_p(delta, p**(-1-s))`` where D < 0 is the
discriminant of the imaginary quadratic field. The factor table (with
``t = v_p(delta)``, ``delta0 = delta / p**t``):

* p does not divide D:  (1 - (chi_D(p) p X)**(t+1)) / (1 - chi_D(p) p X)
* p | D odd:            1 + (-|D/p|**t delta0 / p) (pX)**(t+1)
* p = 2, 4 | D:         keyed on half_disc = D/4 mod 8, with
  odd_complement = -half_disc/2 (half_disc = 2 mod 4) or (1 - half_disc)/2
  (half_disc = 3 mod 4):
    - half_disc = 2 (mod 8):    1 + (8 / delta0 odd_complement**t) (2X)**(t+3)
    - half_disc = 6 (mod 8):    1 - (-8 / delta0 odd_complement**t) (2X)**(t+3)
    - half_disc = 3, 7 (mod 8): 1 - (-4 / delta0 odd_complement**t) (2X)**(t+2)

``half_disc`` and ``odd_complement`` are the quantities usually written D_1, D_2;
they are renamed here so they do not collide with splitting pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Tuple

from .characters import QuadraticCharacter
from .discriminants import enumerate_F_D, prime_discriminants, require_negative_fundamental
from .exact_arith import is_prime, kronecker, neg_one_pow, prime_divisors, valuation


@dataclass(frozen=True)
class EulerFactorPolynomial:
    """Integer polynomial sum_i coefficients[i] X**i attached to a prime."""

    prime: int
    coefficients: Tuple[int, ...]

    def __post_init__(self) -> None:
        assert self.coefficients[0] == 1

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def _binomial(coeff: int, degree: int, p: int) -> Tuple[int, ...]:
    # 1 + coeff * (pX)**degree
    out = [0] * (degree + 1)
    out[0] = 1
    out[degree] += coeff * p**degree
    return tuple(out)


@lru_cache(maxsize=None)
def euler_factor(delta: int, p: int, D: int) -> EulerFactorPolynomial:
    """R_p(delta, X) as an integer polynomial in X."""
    if delta == 0:
        raise ValueError("R_p is only used for delta != 0")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    require_negative_fundamental(D)
    t, delta0 = valuation(delta, p)
    if D % p:
        c = kronecker(D, p)
        return EulerFactorPolynomial(p, tuple((c * p) ** i for i in range(t + 1)))
    if p != 2:
        D0 = D // p
        sign = kronecker(-abs(D0) ** t * delta0, p)
        return EulerFactorPolynomial(p, _binomial(sign, t + 1, p))
    half_disc = D // 4
    if half_disc % 4 == 2:
        odd_complement = -half_disc // 2
    elif half_disc % 4 == 3:
        odd_complement = (1 - half_disc) // 2
    else:  # pragma: no cover - impossible for fundamental D
        raise AssertionError(f"D/4 = {half_disc} is not 2 or 3 mod 4")
    bottom = delta0 * odd_complement**t
    r = half_disc % 8
    if r == 2:
        return EulerFactorPolynomial(2, _binomial(kronecker(8, bottom), t + 3, 2))
    if r == 6:
        return EulerFactorPolynomial(2, _binomial(-kronecker(-8, bottom), t + 3, 2))
    assert r in (3, 7), r
    return EulerFactorPolynomial(2, _binomial(-kronecker(-4, bottom), t + 2, 2))


def _local_value(delta: int, p: int, D: int, s: int) -> Fraction:
    return euler_factor(delta, p, D)(Fraction(1, p ** (1 + s)))


def _check_s(s: int) -> None:
    if s < 1:
        raise ValueError("theta is evaluated at integers s >= 1")


def theta(delta: int, D: int, s: int) -> Fraction:
    """theta(delta, s) = prod_{p | D delta} R_p(delta, p**(-1-s))."""
    if delta == 0:
        raise ValueError("theta is only defined for delta != 0")
    _check_s(s)
    result = Fraction(1)
    for p in prime_divisors(D * delta):
        result *= _local_value(delta, p, D, s)
    return result


def _check_coprime(delta: int, D: int) -> None:
    if delta == 0 or gcd(delta, D) != 1:
        raise ValueError("the theta0/theta1 split needs delta != 0 coprime to D")


def theta0(delta: int, D: int, s: int) -> Fraction:
    """Product of the local factors over p | D."""
    _check_coprime(delta, D)
    _check_s(s)
    result = Fraction(1)
    for p in prime_divisors(D):
        result *= _local_value(delta, p, D, s)
    return result


def theta1(delta: int, D: int, s: int) -> Fraction:
    """Product of the local factors over p | delta."""
    _check_coprime(delta, D)
    _check_s(s)
    result = Fraction(1)
    for p in prime_divisors(delta):
        result *= _local_value(delta, p, D, s)
    return result


def sgn(x: int) -> int:
    return 1 if x > 0 else -1


def local_closed_form(delta: int, p: int, D: int, s: int) -> Fraction:
    """1 + sgn(p*) chi_{p*}(delta) |p*|**(-s), valid for p | D and (delta, 2D) = 1."""
    star = next(pd.star for pd in prime_discriminants(D) if pd.prime == p)
    return 1 + Fraction(sgn(star) * QuadraticCharacter(star)(delta), abs(star) ** s)


def theta0_closed_form(delta: int, D: int, s: int) -> Fraction:
    result = Fraction(1)
    for p in prime_divisors(D):
        result *= local_closed_form(delta, p, D, s)
    return result


def local_lemma_check(delta: int, p: int, D: int, s: int) -> bool:
    """R_p(delta, p**(-1-s)) equals its closed form for p | D, (delta, 2D) = 1."""
    if gcd(delta, 2 * D) != 1:
        raise ValueError("need delta coprime to 2D")
    return _local_value(delta, p, D, s) == local_closed_form(delta, p, D, s)


def theta0_charsum_check(delta: int, D: int, k: int, j: int) -> bool:
    """chi_D(delta) (-1)**(j-1) |D|**(2k) theta0((-1)**j delta, 2k)
    == sum_{(D1, D2) in F_D} chi_{D2}((-1)**(j-1) delta) |D2|**(2k)."""
    if delta < 1 or gcd(delta, 2 * D) != 1:
        raise ValueError("need delta >= 1 coprime to 2D")
    if k < 1:
        raise ValueError("need k >= 1")
    j %= 2
    chi_D = QuadraticCharacter(D)
    lhs = chi_D(delta) * neg_one_pow(j - 1) * abs(D) ** (2 * k) * theta0(neg_one_pow(j) * delta, D, 2 * k)
    rhs = sum(
        QuadraticCharacter(d2)(neg_one_pow(j - 1) * delta) * abs(d2) ** (2 * k)
        for _, d2 in enumerate_F_D(D)
    )
    return lhs == rhs

"""Fundamental discriminants, prime discriminants p*, and the splitting pairs F_D."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import List

from .exact_arith import factorize, is_prime, is_squarefree, kronecker, prime_divisors


def is_fundamental(d: int) -> bool:
    """True for 1, squarefree d = 1 (mod 4), and 4m with m = 2, 3 (mod 4) squarefree."""
    if d == 1:
        return True
    if d == 0:
        return False
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def require_negative_fundamental(D: int) -> None:
    if D >= 0:
        raise ValueError(f"D = {D} must be negative")
    if not is_fundamental(D):
        raise ValueError(f"D = {D} is not a fundamental discriminant")


@dataclass(frozen=True)
class PrimeDiscriminant:
    prime: int
    star: int


@dataclass(frozen=True)
class SplittingPair:
    d1: int
    d2: int

    def __iter__(self):
        yield self.d1
        yield self.d2


def odd_prime_star(p: int) -> PrimeDiscriminant:
    """p* = (-1/p) p: p if p = 1 (mod 4), -p if p = 3 (mod 4)."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return PrimeDiscriminant(p, p if p % 4 == 1 else -p)


def two_star(D: int) -> int:
    """2*_D in {1, -4, 8, -8} by the case table on D/4 mod 8."""
    if not is_fundamental(D):
        raise ValueError(f"D = {D} is not a fundamental discriminant")
    if D % 2:
        value = 1
    else:
        r = (D // 4) % 8
        if r in (3, 7):
            value = -4
        elif r == 2:
            value = 8
        elif r == 6:
            value = -8
        else:  # pragma: no cover - impossible for fundamental D
            raise AssertionError(f"D/4 = {D // 4} has impossible residue mod 8")
    odd_part = prod(odd_prime_star(p).star for p in prime_divisors(D) if p != 2)
    assert value * odd_part == D, (D, value, odd_part)
    return value


def prime_discriminants(D: int) -> List[PrimeDiscriminant]:
    """p* for every prime p | D, with 2* = 2*_D, ascending in p."""
    out = []
    for p in prime_divisors(D):
        if p == 2:
            out.append(PrimeDiscriminant(2, two_star(D)))
        else:
            out.append(odd_prime_star(p))
    return out


def enumerate_F_D(D: int) -> List[SplittingPair]:
    """All (D1, D2) in F_D via subsets Q of the primes dividing D.

    Subset Q is indexed by bitmask over ascending primes; D2 = prod_{q in Q} q*.
    """
    require_negative_fundamental(D)
    stars = [pd.star for pd in prime_discriminants(D)]
    pairs = []
    for mask in range(1 << len(stars)):
        d2 = prod(s for i, s in enumerate(stars) if mask >> i & 1)
        pairs.append(SplittingPair(D // d2, d2))
    return pairs


def brute_force_F_D(D: int) -> List[SplittingPair]:
    """F_D by direct search over divisors of D; order-independent oracle."""
    out = []
    n = abs(D)
    for a in range(1, n + 1):
        if n % a:
            continue
        for d1 in (a, -a):
            d2 = D // d1
            if is_fundamental(d1) and is_fundamental(d2) and gcd(d1, d2) == 1:
                out.append(SplittingPair(d1, d2))
    return out


def chi_factorization_check(D: int, n: int) -> bool:
    """kronecker(D, n) == prod_{p | D} kronecker(p*, n)."""
    if not is_fundamental(D):
        raise ValueError(f"D = {D} is not a fundamental discriminant")
    if D == 1:
        return kronecker(1, n) == 1
    rhs = prod(kronecker(pd.star, n) for pd in prime_discriminants(D))
    return kronecker(D, n) == rhs


def omega(n: int) -> int:
    return len(factorize(n))

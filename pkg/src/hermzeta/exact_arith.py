"""Exact scalar arithmetic: Kronecker symbols, factorization, Bernoulli numbers.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`,
which is always stored reduced with a positive denominator.

Bernoulli numbers use the first-kind convention ``B_1 = -1/2``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt
from typing import TYPE_CHECKING, List, Tuple

if TYPE_CHECKING:
    from .characters import QuadraticCharacter

Factorization = List[Tuple[int, int]]

# |n| above this is rejected by factorize(); trial division to 10**6 is then complete.
FACTOR_LIMIT = 10**12

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), totally defined on pairs of integers.

    (a/0) is 1 for a = +-1 and 0 otherwise; (a/-1) is -1 for a < 0.
    """
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = (n & -n).bit_length() - 1
    if v:
        if a % 2 == 0:
            return 0
        n >>= v
        if v & 1 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a/n) for odd n > 0
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3 * 10**24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def _factor_abs(n: int) -> Tuple[Tuple[int, int], ...]:
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    p, step = 5, 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def factorize(n: int) -> Factorization:
    """Prime factorization of |n| as [(p, e), ...] with increasing p.

    The sign of n is dropped; callers that need it keep it themselves.
    """
    if n == 0:
        raise ValueError("cannot factorize 0")
    n = abs(n)
    if n > FACTOR_LIMIT:
        raise ValueError(f"|n| = {n} exceeds the factorization limit {FACTOR_LIMIT}")
    return list(_factor_abs(n))


def prime_divisors(n: int) -> List[int]:
    return [p for p, _ in factorize(n)]


def valuation(n: int, p: int) -> Tuple[int, int]:
    """Return (t, n0) with n = p**t * n0 and p not dividing n0 (sign kept in n0)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    t = 0
    while n % p == 0:
        n //= p
        t += 1
    return t, n


@lru_cache(maxsize=None)
def divisors(n: int) -> Tuple[int, ...]:
    """Positive divisors of |n| in increasing order."""
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return tuple(sorted(ds))


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for _, e in factorize(n))


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def fraction_sqrt(q: Fraction) -> Fraction:
    """Exact square root of a non-negative rational square; ValueError otherwise."""
    if q < 0 or not (is_square(q.numerator) and is_square(q.denominator)):
        raise ValueError(f"{q} is not the square of a rational")
    return Fraction(isqrt(q.numerator), isqrt(q.denominator))


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m with B_1 = -1/2, from sum_{j<=m} C(m+1, j) B_j = 0."""
    if m < 0:
        raise ValueError("bernoulli index must be >= 0")
    if m == 0:
        return Fraction(1)
    if m == 1:
        return Fraction(-1, 2)
    if m % 2:
        return Fraction(0)
    total = sum(comb(m + 1, j) * bernoulli(j) for j in range(m))
    return -total / (m + 1)


def bernoulli_poly(m: int, x: Fraction) -> Fraction:
    """Bernoulli polynomial B_m(x) = sum_i C(m, i) B_i x**(m - i)."""
    return sum((comb(m, i) * bernoulli(i) * x ** (m - i) for i in range(m + 1)), Fraction(0))


def gen_bernoulli(chi: "QuadraticCharacter", m: int) -> Fraction:
    """Generalized Bernoulli number B_{m,chi} = f**(m-1) * sum_{a=1}^{f} chi(a) B_m(a/f).

    For the modulus-1 character this returns the plain B_m.
    """
    if m < 1:
        raise ValueError("gen_bernoulli needs m >= 1")
    f = chi.modulus
    if f == 1:
        return bernoulli(m)
    total = sum(
        (chi(a) * bernoulli_poly(m, Fraction(a, f)) for a in range(1, f + 1)),
        Fraction(0),
    )
    return f ** (m - 1) * total


def L_nonpositive(chi: "QuadraticCharacter", s: int) -> Fraction:
    """Exact L(chi, s) at s = 1 - m <= 0, i.e. -B_{m,chi}/m.

    For the modulus-1 character this is zeta(1 - m); zeta(0) = -1/2 is
    special-cased because -B_1/1 is +1/2 under the B_1 = -1/2 convention.
    """
    if s > 0:
        raise ValueError("L_nonpositive needs s <= 0")
    m = 1 - s
    if chi.modulus == 1 and m == 1:
        return Fraction(-1, 2)
    return -gen_bernoulli(chi, m) / m


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1


def neg_one_pow(e: int) -> int:
    """(-1)**e as an int, also for negative e."""
    return -1 if e % 2 else 1

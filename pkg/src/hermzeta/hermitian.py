"""Representation counts r(delta, n), r*(delta, n) and the Dirichlet-series oracle.

Elements of the ring of integers are a + b*omega with omega = (D + sqrt(D))/2,
so the norm is the binary form a**2 + D*a*b + (D**2 - D)/4 * b**2 of
discriminant D.

r*(delta, n) is counted through beta = gamma / sqrt(D) with gamma in the ring of
integers: |D| beta conj(beta) = N(gamma), and classes mod n*O become classes of
gamma mod n*sqrt(D)*O. N(gamma) mod n|D| is constant on those classes, and
(Z / n|D|)**2 covers each of them exactly |D| times, hence the division.

Counts come in two flavours. ``method="brute"`` enumerates every pair (a, b)
in one residue system. ``method="local"`` uses CRT: the count modulo m is the
product of the counts modulo the prime powers exactly dividing m, and each
prime-power count is itself enumerated (after completing the square when p is
odd).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Sequence, Tuple

import numpy as np

from .characters import QuadraticCharacter
from .discriminants import require_negative_fundamental
from .euler import euler_factor
from .exact_arith import factorize, prime_divisors


class RStarDivisibilityError(ArithmeticError):
    """Raw r* count not divisible by |D|: the counting model is inconsistent."""


class EGMIntegralityError(ArithmeticError):
    """A coefficient of the Dirichlet-series expansion failed to be a non-negative integer."""


@dataclass(frozen=True)
class QuadraticIntegerRing:
    D: int

    def __post_init__(self) -> None:
        require_negative_fundamental(self.D)

    @property
    def form(self) -> Tuple[int, int, int]:
        D = self.D
        return 1, D, (D * D - D) // 4

    def norm(self, a: int, b: int) -> int:
        A, B, C = self.form
        return A * a * a + B * a * b + C * b * b


# ---------------------------------------------------------------- brute force


@lru_cache(maxsize=256)
def representation_histogram(m: int, D: int) -> np.ndarray:
    """hist[v] = #{(a, b) in [0, m)**2 : N(a + b omega) = v (mod m)}."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    _, B, C = QuadraticIntegerRing(D).form
    a = np.arange(m, dtype=np.int64)
    hist = np.zeros(m, dtype=np.int64)
    rows = max(1, 2_000_000 // m)
    for start in range(0, m, rows):
        b = np.arange(start, min(m, start + rows), dtype=np.int64)[:, None]
        vals = (a * ((a + B * b) % m) + (C % m) * (b * b % m)) % m
        hist += np.bincount(vals.ravel(), minlength=m)
    hist.setflags(write=False)
    return hist


def _r_count_brute(delta: int, n: int, D: int) -> int:
    return int(representation_histogram(n, D)[delta % n])


def r_star_raw_count(delta: int, n: int, D: int) -> int:
    """#{(a, b) in [0, n|D|)**2 : N(a + b omega) = delta (mod n|D|)}."""
    m = n * abs(D)
    return int(representation_histogram(m, D)[delta % m])


# ------------------------------------------------------------------ via CRT


@lru_cache(maxsize=None)
def _square_counts(m: int) -> np.ndarray:
    u = np.arange(m, dtype=np.int64)
    return np.bincount(u * u % m, minlength=m)


@lru_cache(maxsize=None)
def _odd_prime_power_count(D: int, m: int, c: int) -> int:
    # 4 N(a + b omega) = (2a + Db)**2 - D b**2 and a -> 2a + Db is a bijection mod odd m
    b = np.arange(m, dtype=np.int64)
    targets = (4 * c + (D % m) * (b * b % m)) % m
    return int(_square_counts(m)[targets].sum())


def prime_power_count(delta: int, p: int, e: int, D: int) -> int:
    """#{(a, b) mod p**e : N(a + b omega) = delta (mod p**e)}."""
    m = p**e
    if p == 2:
        return int(representation_histogram(m, D)[delta % m])
    return _odd_prime_power_count(D, m, delta % m)


def _local_count(delta: int, m: int, D: int) -> int:
    total = 1
    for p, e in factorize(m):
        total *= prime_power_count(delta, p, e, D)
        if total == 0:
            return 0
    return total


# ------------------------------------------------------------------- public


def r_count(delta: int, n: int, D: int, method: str = "local") -> int:
    """r(delta, n): residues beta mod nO with beta conj(beta) = delta (mod n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    require_negative_fundamental(D)
    if method == "brute":
        return _r_count_brute(delta, n, D)
    if method == "local":
        return _local_count(delta, n, D)
    raise ValueError(f"unknown method {method!r}")


def r_star_count(delta: int, n: int, D: int, method: str = "local") -> int:
    """r*(delta, n) via gamma = sqrt(D) beta; see the module docstring."""
    if n < 1:
        raise ValueError("n must be >= 1")
    require_negative_fundamental(D)
    if method == "brute":
        raw = r_star_raw_count(delta, n, D)
    elif method == "local":
        raw = _local_count(delta, n * abs(D), D)
    else:
        raise ValueError(f"unknown method {method!r}")
    q, rem = divmod(raw, abs(D))
    if rem:
        raise RStarDivisibilityError(
            f"raw r* count {raw} for delta={delta}, n={n}, D={D} is not divisible by {abs(D)}"
        )
    return q


# ---------------------------------------------------------- Dirichlet series


class DirichletCoefficients:
    """Truncated Dirichlet series sum_{n <= N} c_n n**(-s) with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence) -> None:
        self.coeffs: List[Fraction] = [Fraction(c) for c in coeffs]
        if not self.coeffs:
            raise ValueError("need at least one coefficient")

    @classmethod
    def from_function(cls, f: Callable[[int], object], N: int) -> "DirichletCoefficients":
        return cls([f(n) for n in range(1, N + 1)])

    @classmethod
    def identity(cls, N: int) -> "DirichletCoefficients":
        return cls([1] + [0] * (N - 1))

    @classmethod
    def zeta(cls, N: int) -> "DirichletCoefficients":
        return cls([1] * N)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        """1-based access: c_n."""
        if n < 1:
            raise IndexError("Dirichlet coefficients start at n = 1")
        return self.coeffs[n - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirichletCoefficients):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        return f"DirichletCoefficients([{head}{', ...' if len(self) > 6 else ''}], N={len(self)})"

    def __mul__(self, other: "DirichletCoefficients") -> "DirichletCoefficients":
        return dirichlet_mul(self, other)

    def evaluate(self, s: int) -> Fraction:
        return sum((c / Fraction(n) ** s for n, c in enumerate(self.coeffs, 1) if c), Fraction(0))


def dirichlet_mul(a: DirichletCoefficients, b: DirichletCoefficients) -> DirichletCoefficients:
    """Dirichlet convolution (a*b)_n = sum_{de = n} a_d b_e."""
    if len(a) != len(b):
        raise ValueError("Dirichlet series must have equal length")
    N = len(a)
    out = [Fraction(0)] * N
    for d in range(1, N + 1):
        ad = a.coeffs[d - 1]
        if not ad:
            continue
        for e in range(1, N // d + 1):
            be = b.coeffs[e - 1]
            if be:
                out[d * e - 1] += ad * be
    return DirichletCoefficients(out)


def dirichlet_inv(a: DirichletCoefficients) -> DirichletCoefficients:
    """Inverse under Dirichlet convolution, truncated at the same length."""
    c1 = a.coeffs[0]
    if c1 == 0:
        raise ZeroDivisionError("Dirichlet series with c_1 = 0 is not invertible")
    N = len(a)
    inv = [Fraction(0)] * N
    inv[0] = 1 / c1
    for n in range(2, N + 1):
        acc = Fraction(0)
        for d in range(2, n + 1):
            if n % d == 0 and a.coeffs[d - 1]:
                acc += a.coeffs[d - 1] * inv[n // d - 1]
        inv[n - 1] = -acc / c1
    return DirichletCoefficients(inv)


def theta_dirichlet_coeffs(delta: int, D: int, N: int) -> DirichletCoefficients:
    """theta(delta, s) = prod_p R_p(delta, p**(-1-s)) expanded as sum_m c_m m**(-s).

    X**i contributes p**(-i) (p**i)**(-s), so c_{p**i} = coeff_i / p**i locally.
    """
    if delta == 0:
        raise ValueError("theta is only defined for delta != 0")
    terms = {1: Fraction(1)}
    for p in prime_divisors(D * delta):
        poly = euler_factor(delta, p, D)
        new: dict = {}
        for m, v in terms.items():
            for i, c in enumerate(poly.coefficients):
                mm = m * p**i
                if c and mm <= N:
                    new[mm] = new.get(mm, 0) + v * Fraction(c, p**i)
        terms = new
    coeffs = [Fraction(0)] * N
    for m, v in terms.items():
        coeffs[m - 1] = v
    return DirichletCoefficients(coeffs)


def shifted_L_coeffs(D: int, N: int) -> DirichletCoefficients:
    """L(chi_D, s + 1) = sum chi_D(n)/n n**(-s)."""
    chi = QuadraticCharacter(D)
    return DirichletCoefficients.from_function(lambda n: Fraction(chi(n), n), N)


def dedekind_zeta_coeffs(D: int, N: int) -> DirichletCoefficients:
    """zeta_K(s) = zeta(s) L(chi_D, s); c_n counts ideals of norm n."""
    chi = QuadraticCharacter(D)
    return dirichlet_mul(DirichletCoefficients.zeta(N), DirichletCoefficients.from_function(chi, N))


def egm_coefficient_oracle(delta: int, D: int, N: int) -> List[int]:
    """Predicted r(delta, 1..N) from the closed-form Dirichlet series of Z(delta, s).

    Z(delta, s) = sum r(delta, n) n**(-1-s) equals theta(-delta, s) zeta(s) / L(chi_D, s+1)
    for delta != 0 and zeta_K(s) / L(chi_D, s+1) for delta = 0; the n-th coefficient
    of the right side in n**(-s) is r(delta, n)/n.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    require_negative_fundamental(D)
    if delta == 0:
        numer = dedekind_zeta_coeffs(D, N)
    else:
        numer = dirichlet_mul(theta_dirichlet_coeffs(-delta, D, N), DirichletCoefficients.zeta(N))
    b = dirichlet_mul(numer, dirichlet_inv(shifted_L_coeffs(D, N)))
    out = []
    for n, bn in enumerate(b.coeffs, 1):
        v = n * bn
        if v.denominator != 1 or v < 0:
            raise EGMIntegralityError(f"coefficient {n} for delta={delta}, D={D} is {v}")
        out.append(int(v))
    return out


def truncated_Z(delta: int, D: int, k: int, N: int, star: bool = False) -> Tuple[float, float]:
    """Partial sum of Z(delta, 2k) (or Z*) over n <= N, and the magnitude of its last term.

    Each term r/n**(2k+1) is rounded once from its exact value and the terms are
    summed with math.fsum.
    """
    if k < 1 or N < 1:
        raise ValueError("need k >= 1 and N >= 1")
    count = r_star_count if star else r_count
    e = 2 * k + 1
    terms = [count(delta, n, D) / n**e for n in range(1, N + 1)]
    return math.fsum(terms), abs(terms[-1])

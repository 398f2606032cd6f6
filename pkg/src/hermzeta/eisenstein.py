"""Eisenstein series q-expansions, the constant C_{k,D}, and the main identities.

Everything stored here is normalized to rational coefficients. For a negative
fundamental discriminant D, level |D|, weight 2k+1 and j in {0, 1}:

* ``F_expansion`` is the generating series of Z((-1)**(j-1) Delta, 2k) scaled by
  L(chi_D, 2k+1)/zeta(2k): constant -L(chi_D, -2k)/(2|D|**(2k)) and q**Delta
  coefficient (-1)**j Delta**(2k) theta((-1)**j Delta, 2k).
* ``eisenstein_combination`` is -|D|**(-2k) sum_{F_D} |D2|**(2k) chi_{D2}((-1)**(j-1)) E(chi_{D1}, chi_{D2}).
* ``g_combination`` is the dual series built from E(chi_{D2}, chi_{D1}).

Transcendental quantities (zeta(2k), L(chi_D, 2k+1), C_{k,D}, special values of
Z) are :class:`SymbolicConstant` values rational * pi**a * |D|**(b/2).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import factorial, gcd
from typing import Iterable, List, Optional, Tuple

import mpmath

from .characters import QuadraticCharacter, sigma
from .discriminants import enumerate_F_D, is_fundamental, require_negative_fundamental
from .euler import theta
from .exact_arith import L_nonpositive, bernoulli, factorize, fraction_sqrt, neg_one_pow

PI_DIGITS = 50


# ------------------------------------------------------------ symbolic values


@dataclass(frozen=True, eq=False)
class SymbolicConstant:
    """rational * pi**pi_exp * abs_d**(sqrt_exp / 2), canonical with sqrt_exp in {0, 1}.

    A square factor of abs_d is kept under the root (|D| = 4 stays sqrt(4)) so the
    shape of a value does not depend on D; equality and hashing compare values.
    """

    rational: Fraction
    pi_exp: int = 0
    sqrt_exp: int = 0
    abs_d: int = 1

    def __post_init__(self) -> None:
        q = Fraction(self.rational)
        pi_exp, e, n = self.pi_exp, self.sqrt_exp, self.abs_d
        if n < 1:
            raise ValueError("abs_d must be positive")
        if n == 1:
            e = 0
        half, e = divmod(e, 2)
        q *= Fraction(n) ** half
        if q == 0:
            pi_exp, e = 0, 0
        if e == 0:
            n = 1
        object.__setattr__(self, "rational", q)
        object.__setattr__(self, "pi_exp", pi_exp)
        object.__setattr__(self, "sqrt_exp", e)
        object.__setattr__(self, "abs_d", n)

    def _value_key(self) -> Tuple[Fraction, int, int]:
        if not self.sqrt_exp:
            return self.rational, self.pi_exp, 1
        square, free = 1, self.abs_d
        for p, e in factorize(free):
            square *= p ** (e // 2)
            free //= p ** (2 * (e // 2))
        return self.rational * square, self.pi_exp, free

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolicConstant):
            return NotImplemented
        return self._value_key() == other._value_key()

    def __hash__(self) -> int:
        return hash(self._value_key())

    def _check(self, other: "SymbolicConstant") -> int:
        if self.abs_d == 1:
            return other.abs_d
        if other.abs_d not in (1, self.abs_d):
            raise ValueError("cannot combine constants over different |D|")
        return self.abs_d

    def __mul__(self, other):
        if not isinstance(other, SymbolicConstant):
            return replace(self, rational=self.rational * Fraction(other))
        n = self._check(other)
        return SymbolicConstant(
            self.rational * other.rational,
            self.pi_exp + other.pi_exp,
            self.sqrt_exp + other.sqrt_exp,
            n,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, SymbolicConstant):
            return replace(self, rational=self.rational / Fraction(other))
        n = self._check(other)
        return SymbolicConstant(
            self.rational / other.rational,
            self.pi_exp - other.pi_exp,
            self.sqrt_exp - other.sqrt_exp,
            n,
        )

    def __rtruediv__(self, other):
        return SymbolicConstant(Fraction(other)) / self

    def __neg__(self):
        return replace(self, rational=-self.rational)

    def __pow__(self, e: int):
        return SymbolicConstant(self.rational**e, self.pi_exp * e, self.sqrt_exp * e, self.abs_d)

    @property
    def is_rational(self) -> bool:
        return self.pi_exp == 0 and self.sqrt_exp == 0

    def to_mpf(self, dps: int = PI_DIGITS):
        with mpmath.workdps(dps):
            v = mpmath.mpf(self.rational.numerator) / self.rational.denominator
            v *= mpmath.pi**self.pi_exp
            if self.sqrt_exp:
                v *= mpmath.sqrt(self.abs_d)
            return +v

    def __float__(self) -> float:
        return float(self.to_mpf())

    def __str__(self) -> str:
        parts = [str(self.rational)]
        if self.pi_exp:
            parts.append(f"pi^{self.pi_exp}")
        if self.sqrt_exp:
            parts.append(f"sqrt({self.abs_d})")
        return " * ".join(parts)


def zeta_even(k: int) -> SymbolicConstant:
    """zeta(2k) = (-1)**(k+1) B_{2k} (2 pi)**(2k) / (2 (2k)!)."""
    if k < 1:
        raise ValueError("need k >= 1")
    q = neg_one_pow(k + 1) * bernoulli(2 * k) * 2 ** (2 * k) / (2 * factorial(2 * k))
    return SymbolicConstant(q, 2 * k)


def L_odd_positive(D: int, k: int) -> SymbolicConstant:
    """L(chi_D, 2k+1) for D < 0 from the functional equation

    Gamma(2k+1) (-1)**k L(chi_D, 2k+1) = g(chi_D)/(2i) (2 pi/|D|)**(2k+1) L(chi_D, -2k)

    with Gauss sum g(chi_D) = i sqrt|D| and conductor |D|.
    """
    require_negative_fundamental(D)
    n = abs(D)
    w = 2 * k + 1
    gauss_over_2i = SymbolicConstant(Fraction(1, 2), 0, 1, n)
    two_pi_over_f = SymbolicConstant(Fraction(2**w, n**w), w, 0, n)
    L_neg = L_nonpositive(QuadraticCharacter(D), -2 * k)
    return gauss_over_2i * two_pi_over_f * L_neg / (neg_one_pow(k) * factorial(2 * k))


def C_bernoulli(k: int, D: int) -> SymbolicConstant:
    """2 (-1)**(k+1) |D|**(1/2) zeta(2k) Gamma(2k+1) / ((2 pi)**(2k+1) L(chi_D, -2k))."""
    require_negative_fundamental(D)
    n = abs(D)
    L_neg = L_nonpositive(QuadraticCharacter(D), -2 * k)
    if L_neg == 0:
        raise ZeroDivisionError(f"L(chi_{D}, {-2 * k}) vanishes")
    sqrt_d = SymbolicConstant(Fraction(1), 0, 1, n)
    two_pi_w = SymbolicConstant(Fraction(2 ** (2 * k + 1)), 2 * k + 1)
    return 2 * neg_one_pow(k + 1) * sqrt_d * zeta_even(k) * factorial(2 * k) / two_pi_w / L_neg


def C_from_L(k: int, D: int) -> SymbolicConstant:
    """-zeta(2k) / (|D|**(2k) L(chi_D, 2k+1))."""
    return -zeta_even(k) / (abs(D) ** (2 * k)) / L_odd_positive(D, k)


def C_symbolic(k: int, D: int) -> SymbolicConstant:
    """C_{k,D}; both standard expressions are computed and required to agree."""
    c = C_bernoulli(k, D)
    alt = C_from_L(k, D)
    if c != alt:
        raise AssertionError(f"C_{{{k},{D}}} forms disagree: {c} vs {alt}")
    return c


# --------------------------------------------------------------- q-expansions


@dataclass(frozen=True)
class QExpansion:
    weight: int
    level: int
    character_disc: int
    coefficients: Tuple[Fraction, ...]

    @property
    def N(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def _compatible(self, other: "QExpansion") -> None:
        if (self.weight, self.level, self.character_disc, self.N) != (
            other.weight,
            other.level,
            other.character_disc,
            other.N,
        ):
            raise ValueError("q-expansions live in different spaces or have different lengths")

    def __add__(self, other: "QExpansion") -> "QExpansion":
        self._compatible(other)
        return replace(self, coefficients=tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def scale(self, c) -> "QExpansion":
        c = Fraction(c)
        return replace(self, coefficients=tuple(c * a for a in self.coefficients))

    def mismatches(self, other: "QExpansion", indices: Optional[Iterable[int]] = None) -> List[Tuple[int, Fraction, Fraction]]:
        self._compatible(other)
        idx = range(self.N + 1) if indices is None else indices
        return [(n, self[n], other[n]) for n in idx if self[n] != other[n]]


def _check_weight(weight: int) -> None:
    if weight < 3:
        raise ValueError("Eisenstein series need weight >= 3")


def eisenstein_expansion(
    chi1: QuadraticCharacter, chi2: QuadraticCharacter, weight: int, N: int
) -> QExpansion:
    """E_w(chi1, chi2) = delta_{N2,1} L(chi1, 1-w)/2 + sum sigma_{w-1}(chi1, chi2; n) q**n."""
    _check_weight(weight)
    if not is_fundamental(chi1.discriminant):
        raise ValueError("chi1 must be primitive")
    a0 = L_nonpositive(chi1, 1 - weight) / 2 if chi2.is_trivial else Fraction(0)
    coeffs = [a0] + [Fraction(sigma(chi1, chi2, weight - 1, n)) for n in range(1, N + 1)]
    return QExpansion(
        weight,
        chi1.modulus * chi2.modulus,
        chi1.discriminant * chi2.discriminant,
        tuple(coeffs),
    )


@dataclass(frozen=True)
class EisensteinTerm:
    coeff: Fraction
    chi1: QuadraticCharacter
    chi2: QuadraticCharacter


@dataclass(frozen=True)
class EisensteinCombination:
    """i**i_power * level**(sqrt_level_exp/2) * sum_t coeff_t E_w(chi1_t, chi2_t)."""

    weight: int
    level: int
    character_disc: int
    terms: Tuple[EisensteinTerm, ...]
    i_power: int = 0
    sqrt_level_exp: int = 0

    def prefactor_rational(self) -> Fraction:
        if self.i_power % 4:
            raise ValueError("combination carries a factor of i")
        if self.sqrt_level_exp % 2:
            raise ValueError("combination carries a factor sqrt(level)")
        return Fraction(self.level) ** (self.sqrt_level_exp // 2)

    def expand(self, N: int) -> QExpansion:
        scale = self.prefactor_rational()
        total = [Fraction(0)] * (N + 1)
        for term in self.terms:
            series = eisenstein_expansion(term.chi1, term.chi2, self.weight, N)
            if series.level != self.level or series.character_disc != self.character_disc:
                raise ValueError(f"term {term} does not live in level {self.level}")
            for n, a in enumerate(series.coefficients):
                total[n] += term.coeff * a
        return QExpansion(self.weight, self.level, self.character_disc, tuple(scale * a for a in total))

    def rescaled(self, factor: Fraction = Fraction(1), i_power: int = 0, sqrt_level_exp: int = 0) -> "EisensteinCombination":
        i_total = self.i_power + i_power
        sign = -1 if i_total % 4 >= 2 else 1
        e_total = self.sqrt_level_exp + sqrt_level_exp
        half, e_total = divmod(e_total, 2)
        factor = sign * Fraction(factor) * Fraction(self.level) ** half
        return replace(
            self,
            terms=tuple(replace(t, coeff=t.coeff * factor) for t in self.terms),
            i_power=i_total % 2,
            sqrt_level_exp=e_total,
        )


def _check_kj(k: int, j: int) -> int:
    if k < 1:
        raise ValueError("need k >= 1")
    if j not in (0, 1, 2):
        raise ValueError("j must be 0 or 1 (2 is accepted as 0)")
    return j % 2


def eisenstein_combination(k: int, D: int, j: int) -> EisensteinCombination:
    """-|D|**(-2k) sum_{F_D} |D2|**(2k) chi_{D2}((-1)**(j-1)) E_{2k+1}(chi_{D1}, chi_{D2})."""
    j = _check_kj(k, j)
    require_negative_fundamental(D)
    scale = Fraction(-1, abs(D) ** (2 * k))
    terms = []
    for d1, d2 in enumerate_F_D(D):
        chi2 = QuadraticCharacter(d2)
        c = scale * abs(d2) ** (2 * k) * chi2(neg_one_pow(j - 1))
        terms.append(EisensteinTerm(c, QuadraticCharacter(d1), chi2))
    return EisensteinCombination(2 * k + 1, abs(D), D, tuple(terms))


def g_combination(k: int, D: int, j: int) -> EisensteinCombination:
    """-|D|**(-2k) sum_{F_D} |D2|**(2k) chi_{D2}((-1)**j) |D1|**(-(2k+1)) E_{2k+1}(chi_{D2}, chi_{D1})."""
    j = _check_kj(k, j)
    require_negative_fundamental(D)
    scale = Fraction(-1, abs(D) ** (2 * k))
    terms = []
    for d1, d2 in enumerate_F_D(D):
        chi2 = QuadraticCharacter(d2)
        c = scale * Fraction(abs(d2) ** (2 * k) * chi2(neg_one_pow(j)), abs(d1) ** (2 * k + 1))
        terms.append(EisensteinTerm(c, chi2, QuadraticCharacter(d1)))
    return EisensteinCombination(2 * k + 1, abs(D), D, tuple(terms))


def g_combination_gauss(k: int, D: int, j: int) -> EisensteinCombination:
    """sum_{F_D} chi_{D2}((-1)**(j-1)) E_{2k+1}(chi_{D2}, chi_{D1}).

    This is the image of ``eisenstein_combination`` under the Fricke rule that
    keeps the Gauss-sum ratio (see ``fricke_image(rule="gauss")``), with the
    factor i |D|**(-k) removed. Its coefficients are the normalized
    Delta**(2k) Z*((-1)**(j-1) Delta, 2k) measured by the r* counts.
    """
    j = _check_kj(k, j)
    require_negative_fundamental(D)
    terms = []
    for d1, d2 in enumerate_F_D(D):
        chi2 = QuadraticCharacter(d2)
        terms.append(EisensteinTerm(Fraction(chi2(neg_one_pow(j - 1))), chi2, QuadraticCharacter(d1)))
    return EisensteinCombination(2 * k + 1, abs(D), D, tuple(terms))


def _gauss_i_power(chi: QuadraticCharacter) -> int:
    # g(chi_d) = sqrt|d| for d > 0 and i sqrt|d| for d < 0
    return 1 if chi.discriminant < 0 else 0


def fricke_image(combo: EisensteinCombination, rule: str = "naive") -> EisensteinCombination:
    """Apply the Fricke involution W_N termwise to a combination of level N.

    ``rule="naive"``:  E_w(chi1, chi2) | W_N = chi2(-1) (N2/N1)**(w/2) E_w(chi2, chi1)
    ``rule="gauss"``:  E_w(chi1, chi2) | W_N = chi2(-1) (N1/N2)**(w/2) g(chi2)/g(chi1) E_w(chi2, chi1)

    The second form is what the Fricke rule for the unnormalized G_w gives after
    undoing the normalization of E_w, which divides by the Gauss sum of chi1 and
    multiplies by N1**w. Real characters are their own conjugates.
    """
    if combo.i_power or combo.sqrt_level_exp:
        raise ValueError("fricke_image expects a plain rational combination")
    N, w = combo.level, combo.weight
    if rule not in ("naive", "gauss"):
        raise ValueError(f"unknown Fricke rule {rule!r}")
    images = []
    for t in combo.terms:
        n1, n2 = t.chi1.modulus, t.chi2.modulus
        if n1 * n2 != N:
            raise ValueError("term level does not match the combination level")
        if rule == "naive":
            # (N2/N1)**(w/2) = sqrt((N2/N1)**w * N) * N**(-1/2)
            factor = fraction_sqrt(Fraction(n2, n1) ** w * N)
            phase = 0
        else:
            # (N1/N2)**(w/2) * |g(chi2)/g(chi1)| = (N1/N2)**((w-1)/2), rational for odd w
            factor = fraction_sqrt(Fraction(n1, n2) ** w * Fraction(n2, n1))
            phase = (_gauss_i_power(t.chi2) - _gauss_i_power(t.chi1)) % 4
        images.append((t.coeff * t.chi2.parity * factor, phase, t))
    # pull out a common power of i; a relative i**2 becomes a sign
    base = min(p for _, p, _ in images)
    if any((p - base) % 2 for _, p, _ in images):
        raise ValueError("terms do not share a common phase")
    terms = tuple(
        EisensteinTerm(c * (-1 if p - base == 2 else 1), t.chi2, t.chi1) for c, p, t in images
    )
    return EisensteinCombination(
        w, N, combo.character_disc, terms, i_power=base, sqrt_level_exp=-1 if rule == "naive" else 0
    )


def F_constant_term(k: int, D: int) -> Fraction:
    """-L(chi_D, -2k) / (2 |D|**(2k))."""
    return -L_nonpositive(QuadraticCharacter(D), -2 * k) / (2 * abs(D) ** (2 * k))


def F_expansion(k: int, D: int, j: int, N: int) -> QExpansion:
    """Normalized generating series: a_Delta = (-1)**j Delta**(2k) theta((-1)**j Delta, 2k)."""
    j = _check_kj(k, j)
    require_negative_fundamental(D)
    sign = neg_one_pow(j)
    coeffs = [F_constant_term(k, D)]
    for delta in range(1, N + 1):
        coeffs.append(sign * delta ** (2 * k) * theta(sign * delta, D, 2 * k))
    return QExpansion(2 * k + 1, abs(D), D, tuple(coeffs))


def f_constant_normalized(k: int, D: int) -> SymbolicConstant:
    """Constant term of the unnormalized f, times L(chi_D, 2k+1)/zeta(2k)."""
    n = abs(D)
    raw = SymbolicConstant(Fraction(neg_one_pow(k + 1) * factorial(2 * k), 2 ** (2 * k + 1)), -(2 * k + 1), 1, n)
    return raw * zeta_even(k) * L_odd_positive(D, k) / zeta_even(k)


def g_constant_normalized(k: int, D: int, j: int) -> SymbolicConstant:
    """(-1)**(j+k+1) |D|**(1/2+2k) zeta(2k) Gamma(2k+1)/(2 pi)**(2k+1), times L(chi_D, 2k+1)/zeta(2k)."""
    j = _check_kj(k, j)
    n = abs(D)
    raw = SymbolicConstant(
        Fraction(neg_one_pow(j + k + 1) * n ** (2 * k) * factorial(2 * k), 2 ** (2 * k + 1)),
        -(2 * k + 1),
        1,
        n,
    )
    return raw * zeta_even(k) * L_odd_positive(D, k) / zeta_even(k)


def fricke_check(k: int, D: int, j: int, N: int) -> bool:
    """g_combination equals |D|**(-(2k+1)/2) (eisenstein_combination | W_|D|), coefficientwise."""
    w = 2 * k + 1
    transported = fricke_image(eisenstein_combination(k, D, j), "naive").rescaled(sqrt_level_exp=-w)
    return transported.expand(N) == g_combination(k, D, j).expand(N)


def fricke_check_gauss(k: int, D: int, j: int, N: int) -> bool:
    """eisenstein_combination | W_|D| (Gauss-sum rule) equals i |D|**(-k) g_combination_gauss."""
    image = fricke_image(eisenstein_combination(k, D, j), "gauss")
    target = g_combination_gauss(k, D, j).rescaled(Fraction(1, abs(D) ** k), i_power=1)
    if image.i_power != target.i_power or image.sqrt_level_exp != target.sqrt_level_exp:
        return False
    strip = dict(i_power=0, sqrt_level_exp=0)
    return replace(image, **strip).expand(N) == replace(target, **strip).expand(N)


def g_constant_check(k: int, D: int, j: int, gauss: bool = False) -> bool:
    """Constant term of the g-side equals the normalized constant (-1)**(j+k+1) ... exactly."""
    combo = g_combination_gauss(k, D, j) if gauss else g_combination(k, D, j)
    expected = g_constant_normalized(k, D, j)
    return expected.is_rational and combo.expand(0)[0] == expected.rational


# ------------------------------------------------------------ special values


def _pair_sum_Z(delta: int, D: int, k: int, j: int) -> Fraction:
    return Fraction(
        sum(
            abs(d2) ** (2 * k)
            * QuadraticCharacter(d2)(neg_one_pow(j - 1))
            * sigma(QuadraticCharacter(d1), QuadraticCharacter(d2), 2 * k, delta)
            for d1, d2 in enumerate_F_D(D)
        )
    )


def _pair_sum_Z_star(delta: int, D: int, k: int, j: int) -> Fraction:
    return sum(
        (
            Fraction(abs(d2) ** (2 * k) * QuadraticCharacter(d2)(neg_one_pow(j)), abs(d1) ** (2 * k + 1))
            * sigma(QuadraticCharacter(d2), QuadraticCharacter(d1), 2 * k, delta)
            for d1, d2 in enumerate_F_D(D)
        ),
        Fraction(0),
    )


def _pair_sum_Z_star_gauss(delta: int, D: int, k: int, j: int) -> Fraction:
    return Fraction(
        sum(
            QuadraticCharacter(d2)(neg_one_pow(j - 1))
            * sigma(QuadraticCharacter(d2), QuadraticCharacter(d1), 2 * k, delta)
            for d1, d2 in enumerate_F_D(D)
        )
    )


def _check_special(delta: int, k: int, j: int) -> int:
    if delta < 1:
        raise ValueError("need delta >= 1")
    return _check_kj(k, j)


def special_value_Z(delta: int, j: int, D: int, k: int) -> SymbolicConstant:
    """Z((-1)**(j-1) delta, 2k) from the divisor-sum formula:

    (-1)**j delta**(2k) Z = C_{k,D} sum_{F_D} |D2|**(2k) chi_{D2}((-1)**(j-1)) sigma_{2k}(chi_{D1}, chi_{D2}; delta)
    """
    j = _check_special(delta, k, j)
    value = C_symbolic(k, D) * (_pair_sum_Z(delta, D, k, j) * neg_one_pow(j) / delta ** (2 * k))
    assert value.rational == 0 or (value.pi_exp, value.sqrt_exp) == (-1, 1)
    return value


def special_value_Z_theta(delta: int, D: int, k: int) -> SymbolicConstant:
    """Z(delta, 2k) = theta(-delta, 2k) zeta(2k) / L(chi_D, 2k+1) for delta != 0."""
    return zeta_even(k) * theta(-delta, D, 2 * k) / L_odd_positive(D, k)


def special_value_Z_star(delta: int, j: int, D: int, k: int, form: str = "naive") -> SymbolicConstant:
    """Z*((-1)**(j-1) delta, 2k) from a divisor-sum formula.

    ``form="naive"``:   delta**(2k) Z* = C_{k,D} sum |D2|**(2k) chi_{D2}((-1)**j) |D1|**(-(2k+1)) sigma_{2k}(chi_{D2}, chi_{D1}; delta)
    ``form="gauss"``: delta**(2k) Z* = -C_{k,D} |D|**(2k) sum chi_{D2}((-1)**(j-1)) sigma_{2k}(chi_{D2}, chi_{D1}; delta)

    The gauss form is the q**delta coefficient of ``g_combination_gauss``
    rescaled by zeta(2k)/L(chi_D, 2k+1) = -C_{k,D} |D|**(2k).
    """
    j = _check_special(delta, k, j)
    C = C_symbolic(k, D)
    if form == "naive":
        value = C * (_pair_sum_Z_star(delta, D, k, j) / delta ** (2 * k))
    elif form == "gauss":
        value = C * (-abs(D) ** (2 * k) * _pair_sum_Z_star_gauss(delta, D, k, j) / delta ** (2 * k))
    else:
        raise ValueError(f"unknown form {form!r}")
    assert value.rational == 0 or (value.pi_exp, value.sqrt_exp) == (-1, 1)
    return value


# ------------------------------------------------------------- verification


def coprime_indices(D: int, N: int) -> List[int]:
    return [n for n in range(1, N + 1) if gcd(n, 2 * D) == 1]


@dataclass
class MainTheoremReport:
    k: int
    D: int
    j: int
    N: int
    indices: str
    checked: int
    mismatches: List[Tuple[int, Fraction, Fraction]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.mismatches)} mismatches"
        return f"k={self.k} D={self.D} j={self.j} N={self.N} [{self.indices}] {self.checked} coefficients: {status}"


def verify_main_theorem(k: int, D: int, j: int, N: int, indices: str = "all") -> MainTheoremReport:
    """Compare F_expansion with eisenstein_combination coefficient by coefficient.

    ``indices="coprime"`` restricts to Delta >= 1 with gcd(Delta, 2D) = 1.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    j = _check_kj(k, j)
    lhs = F_expansion(k, D, j, N)
    rhs = eisenstein_combination(k, D, j).expand(N)
    if indices == "all":
        idx = list(range(N + 1))
    elif indices == "coprime":
        idx = coprime_indices(D, N)
    else:
        raise ValueError(f"unknown index set {indices!r}")
    return MainTheoremReport(k, D, j, N, indices, len(idx), lhs.mismatches(rhs, idx))

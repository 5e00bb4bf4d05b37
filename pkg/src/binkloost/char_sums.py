"""Additive character sums and the L-polynomial of ``y^2 + y = x^9 + x^3``.

Sums are over the whole field (``chi(f(0)) = 1`` included) unless
``nonzero=True`` is passed.  The power sums ``S_r`` that drive the
L-polynomial recursion use the same whole-field convention:
``#X(F_{2^r}) = 2^r + 1 + S_r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import NonIntegralCoefficient, OddDegree, check_cap
from .field import TABLE_CAP, FieldContext, make_field

__all__ = [
    "SparsePoly",
    "SumKind",
    "LPolynomial",
    "char_sum",
    "closed_char_sum",
    "lpoly_build",
    "lpoly_power_sum",
    "curve_power_sums",
    "poly_mul",
    "NONIC_CURVE",
    "LPOLY_FACTORS",
]


@dataclass(frozen=True)
class SparsePoly:
    """``sum(coeff * x**exp)`` with strictly increasing positive exponents."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        exps = [e for e, _ in self.terms]
        if any(e < 1 for e in exps) or exps != sorted(set(exps)):
            raise ValueError("exponents must be positive and strictly increasing")
        if any(c == 0 for _, c in self.terms):
            raise ValueError("coefficients must be nonzero")

    @classmethod
    def monomials(cls, *exponents: int) -> SparsePoly:
        """Sum of ``x**e`` with coefficient 1 for each exponent."""
        return cls(tuple((e, 1) for e in sorted(exponents)))

    def __str__(self) -> str:
        return " + ".join(f"x^{e}" if c == 1 else f"{c:#x}*x^{e}" for e, c in self.terms)


class SumKind(str, Enum):
    X3 = "X3"
    X9 = "X9"
    X3_PLUS_X = "X3_PLUS_X"
    X9_PLUS_X3 = "X9_PLUS_X3"

    @property
    def poly(self) -> SparsePoly:
        return {
            SumKind.X3: SparsePoly.monomials(3),
            SumKind.X9: SparsePoly.monomials(9),
            SumKind.X3_PLUS_X: SparsePoly.monomials(1, 3),
            SumKind.X9_PLUS_X3: SparsePoly.monomials(3, 9),
        }[self]


NONIC_CURVE = SumKind.X9_PLUS_X3.poly


def char_sum(ctx: FieldContext, f: SparsePoly, *, nonzero: bool = False) -> int:
    """Exact ``sum chi(f(x))`` over the field (or its nonzero elements)."""
    check_cap(ctx.m, TABLE_CAP, "char_sum")
    n = ctx.order
    i = np.arange(n, dtype=np.int64)
    values = np.zeros(n, dtype=np.int64)
    for e, c in f.terms:
        lc = int(ctx.log_table[c])
        values ^= ctx.exp_table[(lc + e * i) % n]
    total = int(ctx.chi_table[values].sum())
    return total if nonzero else total + 1


def closed_char_sum(kind: SumKind | str, m: int) -> int:
    """Closed form of the whole-field sum of ``chi(f)`` over GF(2^m), m even."""
    kind = SumKind(kind)
    if m < 2 or m % 2:
        raise OddDegree(f"closed forms need an even m >= 2, got {m}")
    root_q = 1 << (m // 2)
    sign = -1 if (m // 2) % 2 == 0 else 1  # -(-1)^(m/2)
    if kind is SumKind.X3:
        return sign * 2 * root_q
    if kind is SumKind.X9:
        return sign * (8 if m % 3 == 0 else 2) * root_q
    r8 = m % 8
    if kind is SumKind.X3_PLUS_X:
        return {0: -2 * root_q, 2: 0, 6: 0, 4: 2 * root_q}[r8]
    return {0: -8 * root_q, 2: 2 * root_q, 6: 2 * root_q, 4: 4 * root_q}[r8]


# --- L-polynomials -----------------------------------------------------------

GENUS = 4


@dataclass(frozen=True)
class LPolynomial:
    """Integer coefficients ``a_0 .. a_8`` of the zeta numerator, lowest first."""

    coeffs: tuple[int, ...]

    def __call__(self, t):
        return sum(c * t**i for i, c in enumerate(self.coeffs))

    def satisfies_functional_equation(self) -> bool:
        g = GENUS
        return self.coeffs[0] == 1 and all(
            self.coeffs[2 * g - i] == 2 ** (g - i) * self.coeffs[i] for i in range(g)
        )


def lpoly_build(power_sums: Sequence[int]) -> LPolynomial:
    """L-polynomial of a genus-4 curve over F_2 from ``S_1 .. S_4``.

    ``i * a_i = S_i a_0 + S_{i-1} a_1 + ... + S_1 a_{i-1}``, then
    ``a_{8-i} = 2^(4-i) a_i``.
    """
    if len(power_sums) != GENUS:
        raise ValueError(f"need exactly {GENUS} power sums")
    s = [0, *map(int, power_sums)]
    a = [1]
    for i in range(1, GENUS + 1):
        num = sum(s[i - j] * a[j] for j in range(i))
        if num % i:
            raise NonIntegralCoefficient(f"a_{i} = {num}/{i} is not an integer")
        a.append(num // i)
    for i in range(GENUS - 1, -1, -1):
        a.append(2 ** (GENUS - i) * a[i])
    return LPolynomial(tuple(a))


def lpoly_power_sum(lpoly: LPolynomial, r: int) -> int:
    """``S_r`` predicted by ``L``: coefficient of ``t^r`` in ``t L'(t) / L(t)``."""
    if not 1 <= r <= 16:
        raise ValueError("r must be in 1..16")
    a = lpoly.coeffs
    deriv = [i * c for i, c in enumerate(a)]  # t * L'(t)
    out = [0] * (r + 1)
    for k in range(r + 1):
        acc = deriv[k] if k < len(deriv) else 0
        for j in range(1, min(k, len(a) - 1) + 1):
            acc -= a[j] * out[k - j]
        out[k] = acc  # a_0 = 1, so the division is exact
    return out[r]


def curve_power_sums(
    f: SparsePoly = NONIC_CURVE, degrees: Iterable[int] = range(1, 5), *, nonzero: bool = False
) -> list[int]:
    """Brute-force ``S_r(f)`` over GF(2^r) for each requested ``r``."""
    return [char_sum(make_field(r), f, nonzero=nonzero) for r in degrees]


def poly_mul(*polys: Sequence[int]) -> tuple[int, ...]:
    """Product of integer polynomials given lowest coefficient first."""
    out = [1]
    for p in polys:
        prod = [0] * (len(out) + len(p) - 1)
        for i, x in enumerate(out):
            for j, y in enumerate(p):
                prod[i + j] += x * y
        out = prod
    return tuple(out)


# (2t^2 - 2t + 1)(2t^2 + 2t + 1)^2(2t^2 + 1)
LPOLY_FACTORS = ((1, -2, 2), (1, 2, 2), (1, 2, 2), (1, 0, 2))

"""Irreducible cubics with prescribed coefficients, and points on
``y^2 + c y + x y = x^3``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateC, ZeroCoefficient, ZeroInput, check_cap
from .field import FieldContext
from .kloosterman import kloosterman_direct

__all__ = [
    "CurveCount",
    "CensusReport",
    "count_irreducible_cubics",
    "curve_point_count",
    "curve_count",
    "verify_theorem4",
    "CENSUS_CAP",
]

CENSUS_CAP = 14


@dataclass(frozen=True)
class CurveCount:
    c: int
    points: int
    p3: int
    epsilon: int


@dataclass(frozen=True)
class CensusReport:
    c: int
    lhs: int  # 3 * P3(1, c)
    points: int
    rhs: int  # q + 1 + chi(c) K(c^4 + c^3)
    kloosterman: int
    mod3_residue: int
    expected_mod3: int
    passed: bool


def count_irreducible_cubics(ctx: FieldContext, a2: int, a0: int) -> int:
    """Number of ``d`` for which ``x^3 + a2 x^2 + d x + a0`` is irreducible.

    A cubic is irreducible iff it has no root.  Since ``a0 != 0`` a root
    ``x`` is nonzero, and then it forces ``d = x^2 + a2 x + a0 / x``; so
    the reducible ``d`` are exactly the image of that map on nonzero x.
    """
    if a2 == 0 or a0 == 0:
        raise ZeroCoefficient("a2 and a0 must be nonzero")
    check_cap(ctx.m, CENSUS_CAP, "count_irreducible_cubics")
    x = np.arange(1, ctx.q, dtype=np.int64)
    d = ctx.pow_array(x, 2) ^ ctx.mul_array(np.full_like(x, a2), x)
    d ^= ctx.mul_array(np.full_like(x, a0), ctx.inv_array(x))
    return ctx.q - len(np.unique(d))


def _check_c(ctx: FieldContext, c: int) -> None:
    if c == 0:
        raise ZeroInput("c must be nonzero")
    check_cap(ctx.m, CENSUS_CAP, "curve_point_count")


def curve_point_count(ctx: FieldContext, c: int, method: str = "scan") -> int:
    """Projective points of ``y^2 + (x + c) y = x^3`` over GF(2^m).

    ``method="scan"`` tests every pair ``(x, y)``.  ``method="trace"``
    counts the roots of each quadratic in ``y`` instead: two when
    ``Tr(x^3 / (x + c)^2) = 0``, none otherwise, and exactly one at
    ``x = c``.  Both add the single point at infinity.
    """
    _check_c(ctx, c)
    q = ctx.q
    ys = np.arange(q, dtype=np.int64)
    if method == "scan":
        y_sq = ctx.pow_array(ys, 2)
        ly = ctx.log_table[ys]
        affine = 0
        for xs in np.array_split(ys, max(1, q * q >> 22)):
            lin = ctx.exp_table2[ctx.log_table[xs ^ c][:, None] + ly[None, :]]
            lin[(xs == c)[:, None] | (ys == 0)[None, :]] = 0
            lhs = y_sq[None, :] ^ lin
            affine += int(np.count_nonzero(lhs == ctx.pow_array(xs, 3)[:, None]))
        return affine + 1
    if method == "trace":
        x = np.delete(ys, c)
        ratio = ctx.mul_array(ctx.pow_array(x, 3), ctx.inv_array(ctx.pow_array(x ^ c, 2)))
        affine = int(np.sum(1 - 2 * ctx.trace_table[ratio].astype(np.int64) + 1))
        return affine + 1 + 1
    raise ValueError(f"unknown method {method!r}")


def curve_count(ctx: FieldContext, c: int) -> CurveCount:
    """Point count of the curve for ``c`` together with ``P3(1, c)``."""
    _check_c(ctx, c)
    points = curve_point_count(ctx, c)
    return CurveCount(c, points, count_irreducible_cubics(ctx, 1, c), int(c == 1))


def verify_theorem4(ctx: FieldContext, c: int) -> CensusReport:
    """Check ``3 P3(1, c) = #X = q + 1 + chi(c) K(c^4 + c^3)`` and the residue of K mod 3."""
    if c in (0, 1):
        raise DegenerateC("c must not be 0 or 1")
    check_cap(ctx.m, CENSUS_CAP, "verify_theorem4")
    lhs = 3 * count_irreducible_cubics(ctx, 1, c)
    points = curve_point_count(ctx, c)
    c3 = ctx.pow(c, 3)
    k = kloosterman_direct(ctx, ctx.mul(c3, c) ^ c3)
    rhs = ctx.q + 1 + ctx.chi(c) * k
    if ctx.m % 2:
        expected = 0
    else:
        expected = 1 if ctx.trace(c) == 0 else 2
    residue = k % 3
    return CensusReport(
        c=c,
        lhs=lhs,
        points=points,
        rhs=rhs,
        kloosterman=k,
        mod3_residue=residue,
        expected_mod3=expected,
        passed=lhs == points == rhs and residue == expected,
    )

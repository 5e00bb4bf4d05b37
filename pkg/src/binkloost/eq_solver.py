"""Solutions of ``x^(2^k) + x^(2^k - 1) = a`` over GF(2^m)."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

import numpy as np

from ._tables import equation_values, quartic_table
from .errors import OddDegree, ZeroInput, check_cap
from .field import TABLE_CAP, FieldContext

__all__ = [
    "SolutionCase",
    "SolutionReport",
    "count_solutions",
    "enumerate_solutions",
    "quartic_preimage",
    "root_of_power",
    "MAX_K",
]

MAX_K = 62


class SolutionCase(str, Enum):
    NOT_A_POWER = "NotAPower"
    POWER_TRACE_ZERO = "PowerTraceZero"
    POWER_TRACE_NONZERO = "PowerTraceNonzero"


@dataclass(frozen=True)
class SolutionReport:
    k: int
    a: int
    s: int
    case: SolutionCase
    count: int
    root_b: int | None = None


def _check(a: int, k: int) -> None:
    if a == 0:
        raise ZeroInput("a must be nonzero")
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k must be in 1..{MAX_K}, got {k}")


def root_of_power(ctx: FieldContext, a: int, k: int) -> int | None:
    """Some ``b`` with ``b^(2^k - 1) = a``, or None.

    Takes a ``(2^s - 1)``-th root ``b0`` (s = gcd(k, m)) and raises it to
    the inverse of ``(2^k - 1)/(2^s - 1)`` modulo ``(q - 1)/(2^s - 1)``.
    """
    s = gcd(k, ctx.m)
    d = (1 << s) - 1
    b0 = ctx.power_residue_root(a, d)
    if b0 is None:
        return None
    cofactor = ((1 << k) - 1) // d
    n_d = ctx.order // d
    u = pow(cofactor, -1, n_d) if n_d > 1 else 0
    return ctx.pow(b0, u)


def count_solutions(ctx: FieldContext, k: int, a: int) -> SolutionReport:
    """Number of solutions from the power/trace trichotomy, without scanning the field."""
    _check(a, k)
    s = gcd(k, ctx.m)
    b = root_of_power(ctx, a, k)
    if b is None:
        return SolutionReport(k, a, s, SolutionCase.NOT_A_POWER, 1)
    if ctx.trace(b, s) == 0:
        return SolutionReport(k, a, s, SolutionCase.POWER_TRACE_ZERO, 1 << s, b)
    return SolutionReport(k, a, s, SolutionCase.POWER_TRACE_NONZERO, 0, b)


def enumerate_solutions(ctx: FieldContext, k: int, a: int) -> list[int]:
    """All solutions, by evaluating the left-hand side on every element."""
    _check(a, k)
    check_cap(ctx.m, TABLE_CAP, "enumerate_solutions")
    return np.flatnonzero(equation_values(ctx, k) == a).tolist()


def quartic_preimage(ctx: FieldContext, a: int) -> int | None:
    """The smallest ``c`` with ``c^4 + c^3 = a``, or None (m even)."""
    if a == 0:
        raise ZeroInput("a must be nonzero")
    if ctx.m % 2:
        raise OddDegree("quartic_preimage is defined for even m only")
    c = int(quartic_table(ctx)[a])
    return None if c < 0 else c

"""Per-field inverse-image tables shared by the classifier and the solver.

Each table is built once per context with numpy and cached; reads are
lock-free afterwards.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import check_cap
from .field import TABLE_CAP, FieldContext


def smallest_preimage(values: np.ndarray, size: int) -> np.ndarray:
    """``out[y]`` = smallest ``x`` with ``values[x] == y``, or -1."""
    order = np.argsort(values, kind="stable")
    sv = values[order]
    first = np.ones(len(sv), dtype=bool)
    first[1:] = sv[1:] != sv[:-1]
    out = np.full(size, -1, dtype=np.int64)
    out[sv[first]] = order[first]
    return out


@lru_cache(maxsize=16)
def cube_root_table(ctx: FieldContext) -> np.ndarray:
    """Smallest cube root of every element (-1 for non-cubes)."""
    check_cap(ctx.m, TABLE_CAP, "cube-root table")
    x = np.arange(ctx.q, dtype=np.int64)
    out = smallest_preimage(ctx.pow_array(x, 3), ctx.q)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=16)
def quartic_table(ctx: FieldContext) -> np.ndarray:
    """Smallest ``c`` with ``c^4 + c^3 = a`` for every ``a`` (-1 if none)."""
    check_cap(ctx.m, TABLE_CAP, "quartic preimage table")
    x = np.arange(ctx.q, dtype=np.int64)
    out = smallest_preimage(ctx.pow_array(x, 4) ^ ctx.pow_array(x, 3), ctx.q)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=64)
def equation_values(ctx: FieldContext, k: int) -> np.ndarray:
    """``x^(2^k) + x^(2^k - 1)`` for every element ``x``."""
    check_cap(ctx.m, TABLE_CAP, "equation table")
    x = np.arange(ctx.q, dtype=np.int64)
    e = (1 << k) - 1
    xe = ctx.pow_array(x, e)
    out = ctx.mul_array(xe, x) ^ xe
    out.setflags(write=False)
    return out

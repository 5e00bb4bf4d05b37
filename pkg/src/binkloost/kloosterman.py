"""Binary Kloosterman sums and their residues modulo 8, 3 and 24."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._tables import cube_root_table, quartic_table
from .errors import DegreeOutOfRange, OddDegree, ZeroInput, check_cap
from .field import TABLE_CAP, FieldContext

__all__ = [
    "Case",
    "Classification",
    "kloosterman_direct",
    "kloosterman_all",
    "congruence_mod8",
    "congruence_mod3",
    "classify24",
    "spectrum",
    "MOD24_BY_TRACES",
    "SPECTRUM_CAP",
]

SPECTRUM_CAP = 14

# (Tr(c), Tr(c^3)) -> K(c^4 + c^3) mod 24, m even.
MOD24_BY_TRACES = {(0, 0): 7, (0, 1): 19, (1, 0): 11, (1, 1): 23}


class Case(str, Enum):
    CUBE_NONZERO_TR2 = "CubeNonzeroTr2"
    QUARTIC_IMAGE = "QuarticImage"


@dataclass(frozen=True)
class Classification:
    """Residue of K(a) mod 24 for one nonzero ``a`` (m even).

    ``witness`` is a cube root ``b`` of ``a`` with ``Tr2(b) != 0`` in the
    first case and some ``c`` with ``c^4 + c^3 = a`` in the second;
    ``eps`` and ``delta`` are ``Tr(c)`` and ``Tr(c^3)`` (None in the
    first case).
    """

    a: int
    case: Case
    witness: int
    tr_a: int
    mod8: int
    mod3: int
    mod24: int
    eps: int | None = None
    delta: int | None = None


def _require_nonzero(a: int) -> None:
    if a == 0:
        raise ZeroInput("a must be a nonzero field element")


def _require_congruence_range(ctx: FieldContext) -> None:
    # the congruences fail in GF(2) and GF(4), e.g. K(1) = 3 there
    if ctx.m < 3:
        raise DegreeOutOfRange(f"the congruences for K(a) need m >= 3, got m = {ctx.m}")


def _chi_by_log(ctx: FieldContext) -> np.ndarray:
    # chi(generator ** i), i = 0 .. q-2
    return ctx.chi_table[ctx.exp_table]


def kloosterman_direct(ctx: FieldContext, a: int) -> int:
    """K(a) = sum over nonzero x of chi(x + a/x), summed term by term."""
    _require_nonzero(a)
    check_cap(ctx.m, TABLE_CAP, "kloosterman_direct")
    n = ctx.order
    u = _chi_by_log(ctx)
    la = int(ctx.log_table[a])
    # x = g^i, a/x = g^(la - i), chi is additive
    return int(u @ u[(la - np.arange(n)) % n])


def kloosterman_all(ctx: FieldContext) -> np.ndarray:
    """K(a) for every element, indexed by its encoding (entry 0 is unused, set to 0).

    All sums at once as the cyclic self-convolution of ``i -> chi(g^i)``.
    """
    check_cap(ctx.m, SPECTRUM_CAP, "kloosterman_all")
    n = ctx.order
    u = _chi_by_log(ctx)
    full = np.convolve(u, u)
    by_log = full[:n].copy()
    by_log[: n - 1] += full[n:]
    out = np.zeros(ctx.q, dtype=np.int64)
    out[ctx.exp_table] = by_log
    return out


def spectrum(ctx: FieldContext) -> dict[int, int]:
    """Value -> multiplicity table of K over the nonzero elements."""
    values = kloosterman_all(ctx)[1:]
    return dict(sorted(Counter(values.tolist()).items()))


def congruence_mod8(ctx: FieldContext, a: int) -> int:
    _require_nonzero(a)
    _require_congruence_range(ctx)
    return 3 if ctx.trace(a) else 7


def _is_cube_case(ctx: FieldContext, a: int) -> tuple[bool, int]:
    root = int(cube_root_table(ctx)[a])
    return root >= 0 and ctx.trace(root, 2) != 0, root


def classify24(ctx: FieldContext, a: int) -> Classification:
    _require_nonzero(a)
    _require_congruence_range(ctx)
    if ctx.m % 2:
        raise OddDegree("the mod-24 classification is only implemented for even m")
    tr_a = ctx.trace(a)
    mod8 = 3 if tr_a else 7
    cube_case, root = _is_cube_case(ctx, a)
    if cube_case:
        return Classification(
            a=a,
            case=Case.CUBE_NONZERO_TR2,
            witness=root,
            tr_a=tr_a,
            mod8=mod8,
            mod3=0,
            mod24=3 if tr_a else 15,
        )
    c = int(quartic_table(ctx)[a])
    if c < 0:
        raise AssertionError(f"{a:#x} is neither a special cube nor a quartic image")
    eps = ctx.trace(c)
    delta = ctx.trace(ctx.mul(c, ctx.mul(c, c)))
    return Classification(
        a=a,
        case=Case.QUARTIC_IMAGE,
        witness=c,
        tr_a=tr_a,
        mod8=mod8,
        mod3=1 if eps == 0 else 2,
        mod24=MOD24_BY_TRACES[eps, delta],
        eps=eps,
        delta=delta,
    )


def congruence_mod3(ctx: FieldContext, a: int) -> int | None:
    """K(a) mod 3.

    For odd m only divisibility is known: returns 0 when
    ``Tr(a^(1/3)) = 0`` and None otherwise.
    """
    _require_nonzero(a)
    _require_congruence_range(ctx)
    if ctx.m % 2 == 0:
        return classify24(ctx, a).mod3
    cube_root = ctx.pow(a, pow(3, -1, ctx.order) if ctx.order > 1 else 0)
    return 0 if ctx.trace(cube_root) == 0 else None

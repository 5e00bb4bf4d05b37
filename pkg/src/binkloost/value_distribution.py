"""How often each residue of K(a) mod 24 occurs, for m even.

Three independent routes produce a :class:`DistTable`:

* ``FAST``   tallies :func:`classify24` over the nonzero elements,
* ``BRUTE``  tallies the Kloosterman sums themselves,
* ``CLOSED`` evaluates the closed-form tables keyed by ``m mod 24`` and
  ``m mod 8``.

The intermediate counts (``C(eps, delta)``, ``N(eps, delta)`` and the
``S_beta(eps)`` totals) are available both by direct enumeration and from
their character-sum expressions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from .char_sums import SumKind, closed_char_sum
from .errors import CountMismatch, NonIntegralCount, OddDegree, check_cap
from .field import TABLE_CAP, FieldContext, make_field
from .kloosterman import MOD24_BY_TRACES, SPECTRUM_CAP, classify24, kloosterman_all

__all__ = [
    "CELLS",
    "RESIDUES",
    "CountGrid",
    "DistTable",
    "Mode",
    "count_grid_direct",
    "count_grid_closed",
    "image_counts",
    "distribution",
    "quartic_table_row",
    "closed_quartic_counts",
    "closed_cube_counts",
    "GRID_CAP",
]

GRID_CAP = 20
CELLS = ((0, 0), (0, 1), (1, 0), (1, 1))
RESIDUES = (3, 7, 11, 15, 19, 23)


@dataclass(frozen=True)
class CountGrid:
    """``C[eps, delta]``, ``N[eps, delta]`` and ``sbeta_total[eps]`` for one even m.

    ``sbeta`` optionally carries the per-class counts ``#S_beta(eps)``
    keyed by ``(eps, beta)``; only direct enumeration fills it.
    """

    m: int
    C: dict[tuple[int, int], int]
    N: dict[tuple[int, int], int]
    sbeta_total: dict[int, int]
    sbeta: dict[tuple[int, int], int] = field(default_factory=dict, compare=False)

    def same_counts(self, other: CountGrid) -> bool:
        return (self.m, self.C, self.N, self.sbeta_total) == (
            other.m,
            other.C,
            other.N,
            other.sbeta_total,
        )


@dataclass(frozen=True)
class DistTable:
    m: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


class Mode(str, Enum):
    FAST = "fast"
    CLOSED = "closed"
    BRUTE = "brute"


def _require_even(m: int) -> None:
    if m % 2:
        raise OddDegree(f"the mod-24 distribution needs m even, got m = {m}")


# --- direct enumeration ------------------------------------------------------


def count_grid_direct(ctx: FieldContext) -> CountGrid:
    _require_even(ctx.m)
    check_cap(ctx.m, GRID_CAP, "count_grid_direct")
    q, n = ctx.q, ctx.order
    tr = ctx.trace_table.astype(np.int64)

    c = np.arange(2, q, dtype=np.int64)
    cells = 2 * tr[c] + tr[ctx.pow_array(c, 3)]
    C_counts = np.bincount(cells, minlength=4)

    i = np.arange(1, n // 3, dtype=np.int64)
    g3 = ctx.exp_table[(3 * i) % n]
    g9 = ctx.exp_table[(9 * i) % n]
    N_counts = np.bincount(2 * tr[g3] + tr[g9], minlength=4)

    b = np.arange(1, q, dtype=np.int64)
    eps = tr[ctx.pow_array(b, 3)]
    beta = ctx.trace_array(b, 2)
    sbeta = {}
    for e in (0, 1):
        for bv in np.unique(beta):
            if bv:
                sbeta[e, int(bv)] = int(np.count_nonzero((eps == e) & (beta == bv)))
    totals = {e: sum(v for (ee, _), v in sbeta.items() if ee == e) for e in (0, 1)}

    return CountGrid(
        m=ctx.m,
        C={cell: int(C_counts[2 * cell[0] + cell[1]]) for cell in CELLS},
        N={cell: int(N_counts[2 * cell[0] + cell[1]]) for cell in CELLS},
        sbeta_total=totals,
        sbeta=sbeta,
    )


# --- character-sum expressions ----------------------------------------------


def _exact(num: int, den: int, what: str) -> int:
    if num % den:
        raise NonIntegralCount(f"{what} = {num}/{den} is not an integer")
    return num // den


def count_grid_closed(m: int) -> CountGrid:
    """The count grid from the closed-form character sums."""
    _require_even(m)
    if m < 4:
        raise OddDegree("count_grid_closed needs m >= 4")
    q = 1 << m
    s3 = closed_char_sum(SumKind.X3, m)
    s9 = closed_char_sum(SumKind.X9, m)
    s31 = closed_char_sum(SumKind.X3_PLUS_X, m)
    s93 = closed_char_sum(SumKind.X9_PLUS_X3, m)
    C, N = {}, {}
    for e, d in CELLS:
        h = 1 + (-1) ** d + (-1) ** e + (-1) ** (e + d)
        N[e, d] = _exact(
            q + (-1) ** d * s9 + (-1) ** e * s3 + (-1) ** (e + d) * s93 - 4 * h, 12, f"N{e, d}"
        )
        C[e, d] = _exact(q + (-1) ** d * s3 + (-1) ** (e + d) * s31 - 2 * h, 4, f"C{e, d}")
    # nonzero-x sums: S*(f) = S(f) - 1, the shift cancels in the difference
    s3_star, s31_star = s3 - 1, s31 - 1
    sbeta_total = {
        e: _exact(3 * (q + (-1) ** e * s3_star - (-1) ** e * s31_star), 8, f"Sbeta({e})")
        for e in (0, 1)
    }
    return CountGrid(m=m, C=C, N=N, sbeta_total=sbeta_total)


def image_counts(ctx: FieldContext) -> dict[tuple[int, int], int]:
    """Distinct values of ``c^4 + c^3`` as ``c`` ranges over each cell.

    Checked against ``#C - 3N/4``; raises :class:`CountMismatch` if the two
    disagree.
    """
    _require_even(ctx.m)
    check_cap(ctx.m, GRID_CAP, "image_counts")
    tr = ctx.trace_table.astype(np.int64)
    c = np.arange(2, ctx.q, dtype=np.int64)
    c3 = ctx.pow_array(c, 3)
    images = ctx.mul_array(c3, c) ^ c3
    cells = 2 * tr[c] + tr[c3]
    grid = count_grid_direct(ctx)
    out = {}
    for e, d in CELLS:
        seen = np.zeros(ctx.q, dtype=bool)
        seen[images[cells == 2 * e + d]] = True
        direct = int(seen.sum())
        formula = grid.C[e, d] - Fraction(3 * grid.N[e, d], 4)
        if direct != formula:
            raise CountMismatch(f"cell {(e, d)}: {direct} distinct images vs {formula}")
        out[e, d] = direct
    return out


# --- the closed-form tables --------------------------------------------------

# Offsets of N(k) from 3 * 2^(m-4), as (multiple of 2^(m/2-3), constant),
# ordered N(7), N(19), N(11), N(23).
_QUARTIC_ROWS: dict[str, tuple[tuple[int, int], ...]] = {
    "0": ((1, -1), (1, 0), (-1, 0), (-1, 0)),
    "±6": ((-2, -1), (0, 0), (2, 0), (0, 0)),
    "12": ((3, -1), (-1, 0), (-3, 0), (1, 0)),
    "±8": ((-2, -1), (4, 0), (-4, 0), (2, 0)),
    "±2,±10": ((1, -1), (-3, 0), (5, 0), (-3, 0)),
    "±4": ((0, -1), (2, 0), (-6, 0), (4, 0)),
}

_ROW_BY_RESIDUE = {
    0: "0",
    6: "±6", 18: "±6",
    12: "12",
    8: "±8", 16: "±8",
    2: "±2,±10", 22: "±2,±10", 10: "±2,±10", 14: "±2,±10",
    4: "±4", 20: "±4",
}  # fmt: skip


def quartic_table_row(m: int) -> str:
    """Row label of the m mod 24 table that applies to ``m``."""
    _require_even(m)
    return _ROW_BY_RESIDUE[m % 24]


def _as_count(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise NonIntegralCount(f"{what} evaluates to {value}")
    return int(value)


def closed_quartic_counts(m: int) -> dict[int, int]:
    """N(7), N(19), N(11), N(23) from the m mod 24 table."""
    row = _QUARTIC_ROWS[quartic_table_row(m)]
    base = 3 * Fraction(2) ** (m - 4)
    unit = Fraction(2) ** (m // 2 - 3)
    return {
        k: _as_count(base + coef * unit + const, f"N({k}) at m = {m}")
        for k, (coef, const) in zip((7, 19, 11, 23), row)
    }


def closed_cube_counts(m: int) -> dict[int, int]:
    """N(3), N(15) from the m mod 8 table."""
    _require_even(m)
    base = Fraction(2) ** (m - 3)
    r = m % 8
    if r == 0:
        shift = Fraction(0)
    elif r in (2, 6):
        shift = -Fraction(2) ** (m // 2 - 2)
    else:
        shift = Fraction(2) ** (m // 2 - 1)
    return {
        3: _as_count(base + shift, f"N(3) at m = {m}"),
        15: _as_count(base - shift, f"N(15) at m = {m}"),
    }


def _ordered(counts: dict[int, int]) -> dict[int, int]:
    return {k: int(counts.get(k, 0)) for k in RESIDUES}


def distribution(ctx_or_m: FieldContext | int, mode: Mode | str = Mode.FAST) -> DistTable:
    mode = Mode(mode)
    if isinstance(ctx_or_m, FieldContext):
        ctx, m = ctx_or_m, ctx_or_m.m
    else:
        ctx, m = None, int(ctx_or_m)
    _require_even(m)
    if mode is Mode.CLOSED:
        if m < 4:
            raise OddDegree("the closed-form tables need m >= 4")
        return DistTable(m, _ordered({**closed_quartic_counts(m), **closed_cube_counts(m)}))
    if ctx is None:
        ctx = make_field(m)
    if mode is Mode.FAST:
        check_cap(m, TABLE_CAP, "distribution FAST")
        tally = Counter(classify24(ctx, a).mod24 for a in range(1, ctx.q))
    else:
        check_cap(m, SPECTRUM_CAP, "distribution BRUTE")
        tally = Counter((kloosterman_all(ctx)[1:] % 24).tolist())
    return DistTable(m, _ordered(tally))


def residue_for_cell(eps: int, delta: int) -> int:
    return MOD24_BY_TRACES[eps, delta]

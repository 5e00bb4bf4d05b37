import pytest

from binkloost.value_distribution import (
    CELLS,
    RESIDUES,
    Mode,
    closed_cube_counts,
    closed_quartic_counts,
    count_grid_closed,
    count_grid_direct,
    distribution,
    image_counts,
    quartic_table_row,
)
from binkloost.errors import FieldTooLarge, OddDegree
from binkloost.kloosterman import Case, classify24
from conftest import field

M6 = {7: 9, 19: 12, 11: 14, 23: 12, 3: 6, 15: 10}

# Tables inside the proof of the m mod 24 result: offsets of (3/4)N(eps, delta)
# from 2^(m-4) and of #C(eps, delta) from 2^(m-2), as (multiple of sqrt q, const).
THREE_QUARTER_N = {
    "0": ((-9 / 8, -1), (7 / 8, 0), (1 / 8, 0), (1 / 8, 0)),
    "±6": ((3 / 4, -1), (-1 / 2, 0), (1 / 4, 0), (-1 / 2, 0)),
    "12": ((-3 / 8, -1), (1 / 8, 0), (-5 / 8, 0), (7 / 8, 0)),
    "±8": ((-3 / 4, -1), (1 / 2, 0), (1 / 2, 0), (-1 / 4, 0)),
    "±2,±10": ((3 / 8, -1), (-1 / 8, 0), (-1 / 8, 0), (-1 / 8, 0)),
    "±4": ((0, -1), (-1 / 4, 0), (-1 / 4, 0), (1 / 2, 0)),
}
C_TABLE = {
    0: ((-1, -2), (1, 0), (0, 0), (0, 0)),
    2: ((1 / 2, -2), (-1 / 2, 0), (1 / 2, 0), (-1 / 2, 0)),
    6: ((1 / 2, -2), (-1 / 2, 0), (1 / 2, 0), (-1 / 2, 0)),
    4: ((0, -2), (0, 0), (-1, 0), (1, 0)),
}


def test_grid_direct_m6():
    g = count_grid_direct(field(6))
    assert g.N == {(0, 0): 12, (0, 1): 0, (1, 0): 8, (1, 1): 0}
    assert g.C == {(0, 0): 18, (0, 1): 12, (1, 0): 20, (1, 1): 12}
    assert g.sbeta_total == {0: 30, 1: 18}


def test_grid_closed_m8():
    assert count_grid_closed(8).C[0, 0] == 46


def test_grid_m12_uses_row_12():
    assert quartic_table_row(12) == "12"
    # (3/4) N(0,0) = 2^8 - 3 * 2^3 - 1 = 231
    assert count_grid_direct(field(12)).N[0, 0] == 308
    assert count_grid_closed(12).N[0, 0] == 308


@pytest.mark.parametrize("m", range(4, 15, 2))
def test_grid_closed_equals_direct(m):
    direct = count_grid_direct(field(m))
    closed = count_grid_closed(m)
    assert direct.same_counts(closed)
    q = 1 << m
    assert sum(direct.C.values()) == q - 2
    assert sum(direct.N.values()) == (q - 1) // 3 - 1
    assert all(n % 4 == 0 for n in direct.N.values())
    assert all(t % 3 == 0 for t in direct.sbeta_total.values())
    for (eps, _beta), n in direct.sbeta.items():
        assert 3 * n == direct.sbeta_total[eps]


@pytest.mark.parametrize("m", range(4, 21, 2))
def test_grid_against_proof_tables(m):
    closed = count_grid_closed(m)
    root_q = 2 ** (m // 2)
    row = THREE_QUARTER_N[quartic_table_row(m)]
    for cell, (coef, const) in zip(CELLS, row):
        assert 3 * closed.N[cell] / 4 == 2 ** (m - 4) + coef * root_q + const
    for cell, (coef, const) in zip(CELLS, C_TABLE[m % 8]):
        assert closed.C[cell] == 2 ** (m - 2) + coef * root_q + const


def test_h_term():
    for eps, delta in CELLS:
        h = 1 + (-1) ** delta + (-1) ** eps + (-1) ** (eps + delta)
        assert h == (4 if (eps, delta) == (0, 0) else 0)


def test_image_counts_m6():
    counts = image_counts(field(6))
    assert counts[0, 0] == 9 and counts[1, 0] == 14


@pytest.mark.parametrize("m", range(4, 13, 2))
def test_image_counts_direct_equals_formula(m):
    counts = image_counts(field(m))
    fast = distribution(field(m), Mode.FAST).counts
    assert counts == {(0, 0): fast[7], (0, 1): fast[19], (1, 0): fast[11], (1, 1): fast[23]}


def test_row_map_is_total():
    rows = {quartic_table_row(m) for m in range(4, 52, 2)}
    assert rows == set(THREE_QUARTER_N)
    assert quartic_table_row(18) == quartic_table_row(6) == "±6"
    assert quartic_table_row(20) == "±4" and quartic_table_row(22) == "±2,±10"


def test_closed_m6():
    assert distribution(6, "closed").counts == {k: M6[k] for k in RESIDUES}


def test_closed_m4():
    assert distribution(4, Mode.CLOSED).counts == {3: 4, 7: 2, 11: 0, 15: 0, 19: 4, 23: 5}


@pytest.mark.parametrize("m", range(4, 61, 2))
def test_closed_tables_are_integral(m):
    table = distribution(m, Mode.CLOSED)
    assert table.total == (1 << m) - 1
    assert all(v >= 0 for v in table.counts.values())


@pytest.mark.parametrize("m", range(4, 13, 2))
def test_three_routes_agree(m):
    ctx = field(m)
    closed = distribution(m, Mode.CLOSED)
    assert distribution(ctx, Mode.FAST) == closed
    assert distribution(ctx, Mode.BRUTE) == closed


@pytest.mark.parametrize("m", [4, 6, 8, 10])
def test_partition(m):
    ctx = field(m)
    special = {ctx.pow(b, 3) for b in range(1, ctx.q) if ctx.trace(b, 2) != 0}
    images = set()
    for c in range(2, ctx.q):
        c3 = ctx.pow(c, 3)
        images.add(ctx.mul(c3, c) ^ c3)
    assert special.isdisjoint(images) and len(special) + len(images) == ctx.q - 1
    table = distribution(ctx).counts
    assert table[3] + table[15] == len(special)
    assert table[7] + table[11] + table[19] + table[23] == len(images)
    grid = count_grid_direct(ctx)
    assert table[15] == grid.sbeta_total[0] // 3 and table[3] == grid.sbeta_total[1] // 3
    assert all(classify24(ctx, a).case is Case.CUBE_NONZERO_TR2 for a in special)


def test_closed_pieces():
    assert closed_quartic_counts(6) == {7: 9, 19: 12, 11: 14, 23: 12}
    assert closed_cube_counts(6) == {3: 6, 15: 10}
    assert closed_cube_counts(8) == {3: 32, 15: 32}


def test_errors():
    with pytest.raises(OddDegree):
        distribution(5, Mode.CLOSED)
    with pytest.raises(OddDegree):
        count_grid_direct(field(7))
    with pytest.raises(OddDegree):
        count_grid_closed(2)
    with pytest.raises(FieldTooLarge):
        distribution(16, Mode.BRUTE)
    with pytest.raises(FieldTooLarge):
        count_grid_direct(field(22))

"""Exhaustive verification suites behind ``binkloost verify``.

Each suite checks one family of identities for a single extension degree
and stops at the first counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .char_sums import SumKind, char_sum, closed_char_sum
from .cubic import CENSUS_CAP, verify_theorem4
from .value_distribution import (
    Mode,
    count_grid_closed,
    count_grid_direct,
    distribution,
    image_counts,
)
from .eq_solver import count_solutions, enumerate_solutions
from .errors import CountMismatch
from .field import FieldContext, to_hex
from .kloosterman import SPECTRUM_CAP, classify24, kloosterman_direct

__all__ = ["SuiteResult", "SUITES", "SUITE_ORDER", "run_suite"]


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    m: int
    status: str  # "pass", "fail" or "skip"
    checked: int = 0
    invariant: str | None = None
    counterexample: str | None = None
    detail: str | None = None

    @property
    def failed(self) -> bool:
        return self.status == "fail"


def _fail(suite, m, checked, invariant, element=None, detail=None) -> SuiteResult:
    return SuiteResult(
        suite,
        m,
        "fail",
        checked,
        invariant,
        None if element is None else to_hex(element),
        detail,
    )


def _skip(suite, m, why) -> SuiteResult:
    return SuiteResult(suite, m, "skip", detail=why)


def suite_field(ctx: FieldContext) -> SuiteResult:
    m, q = ctx.m, ctx.q
    g = ctx.generator
    if ctx.pow(g, ctx.order) != 1:
        return _fail("field", m, 0, "field_core: generator^(q-1) = 1", g)
    ones = 0
    for x in range(q):
        if x and ctx.mul(x, ctx.inv(x)) != 1:
            return _fail("field", m, x, "field_core: x * inv(x) = 1", x)
        if ctx.trace(x) != ctx.trace_direct(x):
            return _fail("field", m, x, "field_core: linear trace = Frobenius trace", x)
        if ctx.trace(ctx.square(x)) != ctx.trace(x):
            return _fail("field", m, x, "field_core: Tr(x^2) = Tr(x)", x)
        ones += ctx.trace(x)
    if 2 * ones != q:
        return _fail("field", m, q, "field_core: trace is balanced", detail=f"{ones} ones")
    return SuiteResult("field", m, "pass", q)


def suite_lemma10(ctx: FieldContext) -> SuiteResult:
    if ctx.m % 2:
        return _skip("lemma10", ctx.m, "closed forms are for even m")
    for kind in SumKind:
        brute = char_sum(ctx, kind.poly)
        closed = closed_char_sum(kind, ctx.m)
        if brute != closed:
            return _fail(
                "lemma10", ctx.m, 0, f"char_sums: closed form {kind.value}",
                detail=f"brute {brute} != closed {closed}",
            )
    return SuiteResult("lemma10", ctx.m, "pass", 4)


def suite_thm6(ctx: FieldContext, ks=(1, 2, 3, 4)) -> SuiteResult:
    checked = 0
    for k in ks:
        total = 0
        for a in range(1, ctx.q):
            report = count_solutions(ctx, k, a)
            found = enumerate_solutions(ctx, k, a)
            checked += 1
            if report.count != len(found):
                return _fail(
                    "thm6", ctx.m, checked, f"eq_solver: count = |solutions| (k = {k})", a,
                    f"predicted {report.count}, found {len(found)}",
                )
            total += report.count
        if total != ctx.q - 2:
            return _fail("thm6", ctx.m, checked, f"eq_solver: sum of counts = q - 2 (k = {k})",
                         detail=str(total))
    return SuiteResult("thm6", ctx.m, "pass", checked)


def suite_thm4(ctx: FieldContext) -> SuiteResult:
    if ctx.m > CENSUS_CAP:
        return _skip("thm4", ctx.m, f"cubic census capped at m <= {CENSUS_CAP}")
    for c in range(2, ctx.q):
        r = verify_theorem4(ctx, c)
        if not r.passed:
            return _fail(
                "thm4", ctx.m, c - 1, "cubic_census: 3 P3(1,c) = #X = q + 1 + chi(c) K(c^4+c^3)", c,
                f"lhs {r.lhs}, points {r.points}, rhs {r.rhs}, K mod 3 = {r.mod3_residue}",
            )
    return SuiteResult("thm4", ctx.m, "pass", ctx.q - 2)


def suite_thm9(ctx: FieldContext) -> SuiteResult:
    if ctx.m % 2 or ctx.m < 4:
        return _skip("thm9", ctx.m, "classification is for even m >= 4")
    for a in range(1, ctx.q):
        predicted = classify24(ctx, a).mod24
        actual = kloosterman_direct(ctx, a) % 24
        if predicted != actual:
            return _fail("thm9", ctx.m, a, "kloosterman: classify24 = K(a) mod 24", a,
                         f"classified {predicted}, actual {actual}")
    return SuiteResult("thm9", ctx.m, "pass", ctx.q - 1)


def suite_lemma12(ctx: FieldContext) -> SuiteResult:
    if ctx.m % 2 or ctx.m < 4:
        return _skip("lemma12", ctx.m, "needs even m >= 4")
    direct = count_grid_direct(ctx)
    closed = count_grid_closed(ctx.m)
    if not direct.same_counts(closed):
        return _fail("lemma12", ctx.m, 1, "value_distribution: direct grid = closed grid",
                     detail=f"direct {direct}, closed {closed}")
    for (eps, beta), n in direct.sbeta.items():
        if 3 * n != direct.sbeta_total[eps]:
            return _fail("lemma12", ctx.m, 2, "value_distribution: #S_beta equal across beta", beta)
    try:
        image_counts(ctx)
    except CountMismatch as exc:
        return _fail("lemma12", ctx.m, 3, "value_distribution: distinct images = #C - 3N/4",
                     detail=str(exc))
    return SuiteResult("lemma12", ctx.m, "pass", 3)


def _distribution_suite(name: str, residues: tuple[int, ...]):
    def run(ctx: FieldContext) -> SuiteResult:
        if ctx.m % 2 or ctx.m < 4:
            return _skip(name, ctx.m, "needs even m >= 4")
        closed = distribution(ctx.m, Mode.CLOSED).counts
        tables = {"fast": distribution(ctx, Mode.FAST).counts}
        if ctx.m <= SPECTRUM_CAP:
            tables["brute"] = distribution(ctx, Mode.BRUTE).counts
        for label, counts in tables.items():
            for k in residues:
                if counts[k] != closed[k]:
                    return _fail(name, ctx.m, len(residues),
                                 f"value_distribution: closed N({k}) = {label} N({k})",
                                 detail=f"closed {closed[k]}, {label} {counts[k]}")
        return SuiteResult(name, ctx.m, "pass", len(residues) * len(tables))

    return run


SUITES: dict[str, Callable[[FieldContext], SuiteResult]] = {
    "field": suite_field,
    "lemma10": suite_lemma10,
    "thm6": suite_thm6,
    "thm4": suite_thm4,
    "thm9": suite_thm9,
    "lemma12": suite_lemma12,
    "thm13": _distribution_suite("thm13", (7, 11, 19, 23)),
    "thm16": _distribution_suite("thm16", (3, 15)),
}

# dependency order: earlier failures explain later ones
SUITE_ORDER = tuple(SUITES)


def run_suite(name: str, ctx: FieldContext) -> SuiteResult:
    return SUITES[name](ctx)

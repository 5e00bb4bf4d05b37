"""Command-line interface.

Every command writes one or more records to stdout.  ``--format json``
emits one JSON object per line with sorted keys; ``csv`` emits a header
and rows with the fixed column order listed in ``CSV_COLUMNS``; ``table``
is for people and may change.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 enumeration cap exceeded (lift with ``--force`` or BINKLOOST_FORCE=1).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Iterable, Sequence

from . import __version__
from .char_sums import (
    LPOLY_FACTORS,
    SumKind,
    char_sum,
    curve_power_sums,
    closed_char_sum,
    lpoly_build,
    lpoly_power_sum,
    poly_mul,
)
from .cubic import count_irreducible_cubics, curve_point_count
from .value_distribution import Mode, distribution
from .eq_solver import count_solutions, enumerate_solutions
from .errors import FieldTooLarge, KloostermanError, caps_lifted
from .field import FieldContext, from_hex, make_field, to_hex
from .kloosterman import classify24, congruence_mod3, congruence_mod8, kloosterman_direct
from .verify import SUITE_ORDER, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

CSV_COLUMNS = {
    "ksum": ["a", "value", "tr_a", "mod8", "mod3", "mod24"],
    "classify": ["a", "case", "witness", "tr_a", "eps", "delta", "mod8", "mod3", "mod24"],
    "distribution": ["mode", "residue", "count"],
    "solve-eq": ["k", "a", "s", "case", "count", "root_b", "solutions"],
    "curve-count": ["c", "points", "p3", "epsilon", "identity_rhs"],
    "expsums": ["kind", "brute", "closed"],
    "lpoly": ["r", "power_sum", "predicted", "coeff"],
    "verify": ["suite", "m", "status", "checked", "invariant", "counterexample", "detail"],
}


class UsageError(Exception):
    pass


def _hex_arg(text: str) -> int:
    try:
        return from_hex(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hexadecimal element: {text!r}") from None


def _field_info(ctx: FieldContext | None) -> dict[str, Any] | None:
    if ctx is None:
        return None
    return {"m": ctx.m, "modulus": to_hex(ctx.modulus), "generator": to_hex(ctx.generator)}


def _record(command: str, ctx: FieldContext | None, payload: Any, status: str | None = None):
    rec = {"command": command, "field": _field_info(ctx), "payload": payload}
    if status is not None:
        rec["status"] = status
    return rec


def _element(ctx: FieldContext, value: int) -> int:
    try:
        return ctx.element(value)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _context(args) -> FieldContext:
    return make_field(args.m, args.modulus)


# --- commands ----------------------------------------------------------------


def cmd_ksum(args):
    ctx = _context(args)
    a = _element(ctx, args.a)
    value = kloosterman_direct(ctx, a)
    payload = {
        "a": to_hex(a),
        "value": value,
        "tr_a": ctx.trace(a),
        "mod8": congruence_mod8(ctx, a) if ctx.m >= 3 else None,
        "mod3": congruence_mod3(ctx, a) if ctx.m >= 3 else None,
        "mod24": value % 24,
    }
    yield _record("ksum", ctx, payload)


def _classification_payload(cl) -> dict[str, Any]:
    return {
        "a": to_hex(cl.a),
        "case": cl.case.value,
        "witness": to_hex(cl.witness),
        "tr_a": cl.tr_a,
        "eps": cl.eps,
        "delta": cl.delta,
        "mod8": cl.mod8,
        "mod3": cl.mod3,
        "mod24": cl.mod24,
    }


def cmd_classify(args):
    ctx = _context(args)
    if args.all:
        elements = range(1, ctx.q)
    elif args.a is not None:
        elements = [_element(ctx, args.a)]
    else:
        raise UsageError("classify needs --a HEX or --all")
    for a in elements:
        yield _record("classify", ctx, _classification_payload(classify24(ctx, a)))


def cmd_distribution(args):
    mode = Mode(args.mode)
    if mode is Mode.CLOSED and args.modulus is None:
        ctx, table = None, distribution(args.m, mode)
    else:
        ctx = _context(args)
        table = distribution(ctx, mode)
    counts = {str(k): v for k, v in table.counts.items()}
    yield _record("distribution", ctx, {"mode": mode.value, "counts": counts})


def cmd_solve_eq(args):
    ctx = _context(args)
    a = _element(ctx, args.a)
    report = count_solutions(ctx, args.k, a)
    payload = {
        "k": report.k,
        "a": to_hex(a),
        "s": report.s,
        "case": report.case.value,
        "count": report.count,
        "root_b": None if report.root_b is None else to_hex(report.root_b),
        "solutions": [to_hex(x) for x in enumerate_solutions(ctx, args.k, a)],
    }
    status = "pass" if len(payload["solutions"]) == report.count else "fail"
    yield _record("solve-eq", ctx, payload, status)


def cmd_curve_count(args):
    ctx = _context(args)
    c = _element(ctx, args.c)
    points = curve_point_count(ctx, c)
    p3 = count_irreducible_cubics(ctx, 1, c) if c else None
    payload = {"c": to_hex(c), "points": points, "p3": p3, "epsilon": int(c == 1)}
    if c not in (0, 1):
        c3 = ctx.pow(c, 3)
        payload["identity_rhs"] = ctx.q + 1 + ctx.chi(c) * kloosterman_direct(ctx, ctx.mul(c3, c) ^ c3)
    else:
        payload["identity_rhs"] = None
    yield _record("curve-count", ctx, payload)


def cmd_expsums(args):
    ctx = _context(args)
    sums = {}
    for kind in SumKind:
        closed = closed_char_sum(kind, ctx.m) if ctx.m % 2 == 0 else None
        sums[kind.value] = {"brute": char_sum(ctx, kind.poly), "closed": closed}
    status = None
    if ctx.m % 2 == 0:
        status = "pass" if all(v["brute"] == v["closed"] for v in sums.values()) else "fail"
    yield _record("expsums", ctx, sums, status)


def cmd_lpoly(args):
    sums = curve_power_sums(degrees=range(1, 9))
    lp = lpoly_build(sums[:4])
    predicted = [lpoly_power_sum(lp, r) for r in range(1, 9)]
    ok = (
        lp.satisfies_functional_equation()
        and poly_mul(*LPOLY_FACTORS) == lp.coeffs
        and predicted == sums
    )
    payload = {
        "power_sums": sums,
        "coeffs": list(lp.coeffs),
        "predicted": predicted,
        "factorization_matches": poly_mul(*LPOLY_FACTORS) == lp.coeffs,
    }
    yield _record("lpoly", None, payload, "pass" if ok else "fail")


def cmd_verify(args):
    suites = SUITE_ORDER if args.suite == "all" else (args.suite,)
    if args.m_min > args.m_max:
        raise UsageError("--m-min must not exceed --m-max")
    for m in range(args.m_min, args.m_max + 1):
        ctx = make_field(m, args.modulus) if args.modulus else make_field(m)
        for name in suites:
            res = run_suite(name, ctx)
            payload = {
                "suite": res.suite,
                "m": res.m,
                "checked": res.checked,
                "invariant": res.invariant,
                "counterexample": res.counterexample,
                "detail": res.detail,
            }
            yield _record("verify", ctx, payload, res.status)


COMMANDS = {
    "ksum": cmd_ksum,
    "classify": cmd_classify,
    "distribution": cmd_distribution,
    "solve-eq": cmd_solve_eq,
    "curve-count": cmd_curve_count,
    "expsums": cmd_expsums,
    "lpoly": cmd_lpoly,
    "verify": cmd_verify,
}


# --- output ------------------------------------------------------------------


def _csv_rows(rec: dict[str, Any]) -> Iterable[dict[str, Any]]:
    cmd, p = rec["command"], rec["payload"]
    if cmd == "distribution":
        for k, v in p["counts"].items():
            yield {"mode": p["mode"], "residue": k, "count": v}
    elif cmd == "expsums":
        for kind, v in p.items():
            yield {"kind": kind, **v}
    elif cmd == "lpoly":
        for r in range(1, 9):
            yield {
                "r": r,
                "power_sum": p["power_sums"][r - 1],
                "predicted": p["predicted"][r - 1],
                "coeff": p["coeffs"][r],
            }
    elif cmd == "solve-eq":
        yield {**p, "solutions": " ".join(p["solutions"])}
    elif cmd == "verify":
        yield {**p, "status": rec["status"]}
    else:
        yield p


def _write(records: list[dict[str, Any]], fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec, sort_keys=True) + "\n")
    elif fmt == "csv":
        if not records:
            return
        buf = io.StringIO()
        writer = csv.DictWriter(
            buf, CSV_COLUMNS[records[0]["command"]], extrasaction="ignore", lineterminator="\n"
        )
        writer.writeheader()
        for rec in records:
            for row in _csv_rows(rec):
                writer.writerow({k: "" if v is None else v for k, v in row.items()})
        out.write(buf.getvalue())
    else:
        for rec in records:
            head = rec["command"]
            if rec["field"]:
                f = rec["field"]
                head += f"  GF(2^{f['m']}) modulus 0x{f['modulus']} generator 0x{f['generator']}"
            if "status" in rec:
                head += f"  [{rec['status']}]"
            out.write(head + "\n")
            for row in _csv_rows(rec):
                out.write("  " + "  ".join(f"{k}={v}" for k, v in row.items()) + "\n")


# --- argument parsing --------------------------------------------------------


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--modulus", type=_hex_arg, default=default,
                        help="irreducible modulus as hex (bit i = coefficient of x^i)")
    parser.add_argument("--format", choices=("json", "csv", "table"), default=default)
    parser.add_argument("--force", action="store_true", default=default,
                        help="lift the enumeration size caps")
    parser.add_argument("--seed", type=int, default=default,
                        help="accepted for interface stability; nothing is random")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binkloost",
        description="Binary Kloosterman sums modulo 24 and exhaustive checks over GF(2^m).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        _global_options(p, suppress=True)
        return p

    p = add("ksum", "Kloosterman sum K(a) and its residues")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", type=_hex_arg, required=True)

    p = add("classify", "residue of K(a) mod 24 without computing K (m even)")
    p.add_argument("--m", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--a", type=_hex_arg)
    g.add_argument("--all", action="store_true")

    p = add("distribution", "number of a with K(a) = k mod 24 (m even)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mode", choices=[x.value for x in Mode], default="fast")

    p = add("solve-eq", "solutions of x^(2^k) + x^(2^k-1) = a")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=_hex_arg, required=True)

    p = add("curve-count", "points on y^2 + cy + xy = x^3 and the cubic census P3(1, c)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=_hex_arg, required=True)

    p = add("expsums", "the four cubic/nonic character sums, brute force and closed form")
    p.add_argument("--m", type=int, required=True)

    add("lpoly", "L-polynomial of y^2 + y = x^9 + x^3 over F_2")

    p = add("verify", "run exhaustive verification suites")
    p.add_argument("--m-min", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--suite", choices=(*SUITE_ORDER, "all"), default="all")
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = args.format or "json"
    try:
        with caps_lifted(bool(args.force)):
            records = list(COMMANDS[args.command](args))
    except FieldTooLarge as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    except (KloostermanError, UsageError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    _write(records, fmt, out)
    failures = [r for r in records if r.get("status") == "fail"]
    if failures:
        first = failures[0]
        p = first["payload"]
        where = f" (m = {p['m']}, {p.get('invariant')})" if "invariant" in p else ""
        example = p.get("counterexample") if isinstance(p, dict) else None
        err.write(f"verification failed{where}")
        err.write(f": counterexample 0x{example}\n" if example else "\n")
        return EXIT_FAIL
    return EXIT_OK


def main() -> None:
    sys.exit(run())

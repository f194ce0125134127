"""Command-line front end: divisor-sum tables, identity verification,
and kernel benchmarks.

Exit status contract: 0 = requested work succeeded (and, for verify,
every identity passed); 1 = an identity or cross-engine equivalence
check failed; 2 = usage error.

Formats: ``plain`` (aligned columns), ``csv`` (header row, LF endings),
``json`` (one top-level object).  JSON integers whose magnitude reaches
2**53 are emitted as decimal strings so no consumer silently rounds
them.
"""

from __future__ import annotations

import argparse
import csv
import json
import statistics
import sys
import time
from typing import Callable

from sigmarec import _backend
from sigmarec.divisor_sums import (
    DivisorSumKind,
    divisor_sum,
    divisor_table,
    sieve_parameters,
)
from sigmarec.identities import (
    IdentityName,
    VerificationReport,
    check_identity,
    identity_from_name,
)
from sigmarec.recurrences import (
    RECURRENCE_FOR_KIND,
    recurrence_parameters,
    recurrence_table,
)

_JSON_INT_LIMIT = 2**53

_KIND_BY_NAME = {kind.cli_name: kind for kind in DivisorSumKind}

_CORO_TAGS = (IdentityName.COROLLARY_TRIANGULAR, IdentityName.COROLLARY_HEXAGONAL)


class UsageError(Exception):
    pass


def _json_ready(value):
    """Recursively make a structure json-safe under the big-int policy."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if -_JSON_INT_LIMIT < value < _JSON_INT_LIMIT else str(value)
    if isinstance(value, float) or isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {k: _json_ready(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_ready(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _emit_json(command: str, parameters: dict, payload_name: str, payload) -> None:
    document = {
        "command": command,
        "parameters": parameters,
        payload_name: payload,
    }
    print(json.dumps(_json_ready(document)))


def _emit_csv(header: list[str], rows: list[list]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _emit_plain_table(header: list[str], rows: list[list]) -> None:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for r in cells:
        print("  ".join(c.rjust(w) for c, w in zip(r, widths)))


def _parse_kinds(text: str) -> list[DivisorSumKind]:
    names = [part.strip() for part in text.split(",") if part.strip()]
    if not names:
        raise UsageError("at least one kind is required")
    kinds = []
    for name in names:
        if name not in _KIND_BY_NAME:
            valid = ", ".join(_KIND_BY_NAME)
            raise UsageError(f"unknown kind {name!r}; valid kinds: {valid}")
        kinds.append(_KIND_BY_NAME[name])
    return kinds


def _cmd_table(args) -> int:
    if args.max < 1:
        raise UsageError("--max must be >= 1")
    kinds = _parse_kinds(args.kinds)

    columns: dict[DivisorSumKind, list[int]] = {}
    for kind in kinds:
        if args.source == "oracle":
            columns[kind] = divisor_table(args.max, kind).row
        else:
            if kind not in RECURRENCE_FOR_KIND:
                raise UsageError(
                    f"kind {kind.cli_name!r} has no recurrence engine; "
                    "recurrence source supports sigma, tilde, bar"
                )
            columns[kind] = recurrence_table(RECURRENCE_FOR_KIND[kind], args.max).row

    header = ["n"] + [kind.cli_name for kind in kinds]
    rows = [
        [n] + [columns[kind][n - 1] for kind in kinds]
        for n in range(1, args.max + 1)
    ]

    if args.format == "json":
        parameters = {
            "max": args.max,
            "kinds": [k.cli_name for k in kinds],
            "source": args.source,
        }
        payload = [dict(zip(header, row)) for row in rows]
        _emit_json("table", parameters, "rows", payload)
    elif args.format == "csv":
        _emit_csv(header, rows)
    else:
        _emit_plain_table(header, rows)
    return 0


def _parse_identities(text: str) -> list[IdentityName]:
    if text.strip() == "all":
        return list(IdentityName)
    names = [part.strip() for part in text.split(",") if part.strip()]
    if not names:
        raise UsageError("at least one identity is required")
    tags = []
    for name in names:
        try:
            tags.append(identity_from_name(name))
        except KeyError:
            valid = ", ".join(tag.cli_name for tag in IdentityName)
            raise UsageError(
                f"unknown identity {name!r}; valid identities: all, {valid}"
            ) from None
    return tags


def _order_label(report: VerificationReport) -> str:
    # The corollary sweeps read the order as a bound on n, not a series order.
    if report.identity in _CORO_TAGS:
        return f"n<={report.order}"
    return f"order={report.order}"


def _report_dict(report: VerificationReport) -> dict:
    mismatch = None
    if report.first_mismatch is not None:
        exponent, lhs, rhs = report.first_mismatch
        mismatch = {"exponent": exponent, "lhs": lhs, "rhs": rhs}
    return {
        "identity": report.identity.cli_name,
        "order": report.order,
        "order_semantics": (
            "qualifying-n-bound" if report.identity in _CORO_TAGS else "series-order"
        ),
        "passed": report.passed,
        "first_mismatch": mismatch,
        "elapsed_seconds": report.elapsed,
    }


def _cmd_verify(args) -> int:
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    tags = _parse_identities(args.identities)
    reports = [check_identity(tag, args.order) for tag in tags]

    if args.format == "json":
        parameters = {"identities": [t.cli_name for t in tags], "order": args.order}
        _emit_json("verify", parameters, "reports", [_report_dict(r) for r in reports])
    elif args.format == "csv":
        header = [
            "identity",
            "order",
            "passed",
            "mismatch_exponent",
            "mismatch_lhs",
            "mismatch_rhs",
            "elapsed_seconds",
        ]
        rows = []
        for r in reports:
            exponent, lhs, rhs = r.first_mismatch or ("", "", "")
            rows.append(
                [r.identity.cli_name, r.order, r.passed, exponent, lhs, rhs,
                 f"{r.elapsed:.6f}"]
            )
        _emit_csv(header, rows)
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.identity.cli_name:<22} {_order_label(r)}"
            if r.first_mismatch is not None:
                exponent, lhs, rhs = r.first_mismatch
                line += f"  first mismatch at q^{exponent}: lhs={lhs} rhs={rhs}"
            line += f"  elapsed={r.elapsed:.3f}s"
            print(line)

    return 0 if all(r.passed for r in reports) else 1


def _bench_lanes(impl: str) -> list[str]:
    if impl == "both":
        return ["compiled", "python"]
    if impl == "auto":
        return ["compiled" if _backend.COMPILED else "python"]
    return [impl]


def _median_time(fn: Callable[[], object], reps: int) -> float:
    times = []
    for _ in range(reps):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def _cmd_bench(args) -> int:
    if args.max < 1:
        raise UsageError("--max must be >= 1")
    if args.reps < 1:
        raise UsageError("--reps must be >= 1")
    kinds = _parse_kinds(args.kind)
    if len(kinds) != 1:
        raise UsageError("--kind takes exactly one kind")
    kind = kinds[0]
    if kind not in RECURRENCE_FOR_KIND:
        raise UsageError(
            f"kind {kind.cli_name!r} has no recurrence engine to benchmark; "
            "choose sigma, tilde, or bar"
        )
    lanes = _bench_lanes(args.impl)
    try:
        kernel_modules = {lane: _backend.get_kernels(lane) for lane in lanes}
    except ImportError:
        raise UsageError(
            "compiled kernels are not available in this installation"
        ) from None

    modulus, weights = sieve_parameters(kind)
    rkind = RECURRENCE_FOR_KIND[kind]
    offsets, signs, hit_factor = recurrence_parameters(rkind, args.max)

    # Engine closures. Trial division is plain Python whatever the lane.
    engines: list[tuple[str, str, Callable[[], list[int]]]] = [
        (
            "trial",
            "python",
            lambda: [divisor_sum(n, kind) for n in range(1, args.max + 1)],
        )
    ]
    for lane in lanes:
        kern = kernel_modules[lane]
        engines.append(
            ("sieve", lane,
             lambda k=kern: k.divisor_sieve(args.max, modulus, weights)[1:])
        )
    for lane in lanes:
        kern = kernel_modules[lane]
        engines.append(
            ("recurrence", lane,
             lambda k=kern: k.figurate_recurrence(args.max, offsets, signs,
                                                  hit_factor)[1:])
        )

    # Equivalence is asserted before any timing is reported.
    reference: list[int] | None = None
    for engine, lane, fn in engines:
        values = fn()
        if reference is None:
            reference = values
        elif values != reference:
            print(
                f"engine disagreement: {engine}/{lane} differs from trial division",
                file=sys.stderr,
            )
            return 1

    rows = []
    for engine, lane, fn in engines:
        rows.append(
            {
                "engine": engine,
                "impl": lane,
                "median_seconds": _median_time(fn, args.reps),
            }
        )

    parameters = {
        "kind": kind.cli_name,
        "max": args.max,
        "reps": args.reps,
        "values_identical": True,
    }
    if args.format == "json":
        _emit_json("bench", parameters, "rows", rows)
    elif args.format == "csv":
        _emit_csv(
            ["engine", "impl", "median_seconds"],
            [[r["engine"], r["impl"], f"{r['median_seconds']:.6f}"] for r in rows],
        )
    else:
        print(
            f"kind={kind.cli_name} max={args.max} reps={args.reps} "
            "values identical across engines"
        )
        _emit_plain_table(
            ["engine", "impl", "median_seconds"],
            [[r["engine"], r["impl"], f"{r['median_seconds']:.6f}"] for r in rows],
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigmarec",
        description=(
            "Divisor-sum tables, figurate-number recurrences, and exact "
            "q-series identity verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="emit divisor-sum tables")
    table.add_argument("--max", type=int, required=True, help="largest n (>= 1)")
    table.add_argument(
        "--kinds",
        default="sigma,sigma-even,sigma-odd,tilde,bar",
        help="comma-separated kinds (default: all five)",
    )
    table.add_argument(
        "--source",
        choices=["oracle", "recurrence"],
        default="oracle",
        help="sieve oracle or pure recurrence engine",
    )
    table.add_argument("--format", choices=["plain", "csv", "json"], default="plain")

    verify = sub.add_parser("verify", help="check the named identities")
    verify.add_argument(
        "--identities",
        default="all",
        help="comma-separated identity names, or 'all'",
    )
    verify.add_argument(
        "--order", type=int, required=True, help="truncation order (>= 0)"
    )
    verify.add_argument("--format", choices=["plain", "csv", "json"], default="plain")

    bench = sub.add_parser(
        "bench", help="time trial division vs sieve vs recurrence"
    )
    bench.add_argument("--kind", required=True, help="sigma, tilde, or bar")
    bench.add_argument("--max", type=int, required=True, help="table size (>= 1)")
    bench.add_argument("--reps", type=int, default=3, help="repetitions (median)")
    bench.add_argument(
        "--impl",
        choices=["auto", "python", "compiled", "both"],
        default="auto",
        help="kernel lane(s) to time",
    )
    bench.add_argument("--format", choices=["plain", "csv", "json"], default="plain")

    return parser


_COMMANDS = {"table": _cmd_table, "verify": _cmd_verify, "bench": _cmd_bench}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 input outside the image of the doubled-odd map.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator, TextIO

from . import bijection as bj
from . import identities as ids
from .partitions import (
    FILTERS,
    CylindricPartition,
    Profile,
    count_sequence,
    enumerate_cylindric,
    refined_counts,
    validate_cylindric,
)
from .qseries import SeriesError, TrackedRing

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_NOT_IN_IMAGE = 0, 1, 2, 3
ORDER_ENV = "CYLPART_ORDER"

SERIES = {
    "borodin": None,
    "f11": ids.f11_closed,
    "f20": ids.f20_closed,
    "f11z": ids.f11_bivariate,
    "d11": ids.d11_series,
    "d20": ids.d20_series,
    "d11t": ids.d11_bivariate,
    "d20t": ids.d20_bivariate,
    "oc": ids.odd_two_sum,
}

FLAVOR_ALIASES = {"odd": bj.DOUBLED_ODD, **{f: f for f in bj.FLAVORS}}


class UsageError(ValueError):
    pass


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _profile(text: str) -> Profile:
    try:
        return Profile.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _default_order() -> int | None:
    raw = os.environ.get(ORDER_ENV)
    return int(raw) if raw else None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cylpart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("enumerate", help="list cylindric partitions of one weight")
    p.add_argument("--profile", type=_profile, required=True)
    p.add_argument("--weight", type=_nonneg, required=True)
    p.add_argument("--filter", choices=FILTERS, default="none")
    add_format(p)

    p = sub.add_parser("count", help="counts by weight, optionally by largest part")
    p.add_argument("--profile", type=_profile, required=True)
    p.add_argument("--max-weight", type=_nonneg, required=True)
    p.add_argument("--filter", choices=FILTERS, default="none")
    p.add_argument("--refined", action="store_true")
    add_format(p)

    p = sub.add_parser("series", help="expand a generating function")
    p.add_argument("--name", choices=tuple(SERIES), required=True)
    p.add_argument("--profile", type=_profile)
    p.add_argument("--order", type=_nonneg, default=_default_order())
    p.add_argument("--variant", choices=("two-sum", "closed"), default="two-sum",
                   help="which displayed form to expand for --name oc")
    add_format(p)

    for name, helptext in (("map", "cylindric partition -> (mu, beta)"), ("unmap", "(mu, beta) -> cylindric partition")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--profile", type=_profile, default=Profile((1, 1)))
        p.add_argument("--flavor", choices=tuple(FLAVOR_ALIASES))
        p.add_argument("--trace", action="store_true")
        p.add_argument("--strict", action="store_true",
                       help="doubled-odd pairs: require the largest beta part to equal its bound")

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("--check", choices=("all", *ids.CHECKS), default="all")
    p.add_argument("--order", type=_nonneg, default=_default_order())
    add_format(p)

    p = sub.add_parser("odd-table", help="all-odd series against naive enumeration")
    p.add_argument("--max-weight", type=_nonneg, default=25)
    p.add_argument("--format", choices=("text", "json", "markdown"), default="text")
    return parser


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_objects(stream: TextIO) -> Iterator:
    text = stream.read()
    if not text.strip():
        raise UsageError("no input on stdin")
    try:
        yield json.loads(text)
        return
    except json.JSONDecodeError:
        pass
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            try:
                yield json.loads(line)
            except json.JSONDecodeError as exc:
                raise UsageError(f"line {lineno}: {exc.msg}") from None


def _flavor(args) -> str:
    if args.flavor:
        return FLAVOR_ALIASES[args.flavor]
    return bj.DISTINCT_EVEN if args.profile == bj.P20 else bj.DISTINCT_ODD


def _check_flavor_profile(flavor: str, profile: Profile) -> None:
    expected = bj.P20 if flavor == bj.DISTINCT_EVEN else bj.P11
    if profile != expected:
        raise UsageError(f"flavor {flavor} needs profile {expected}, got {profile}")


def _cmd_enumerate(args, out: TextIO) -> int:
    for lam in enumerate_cylindric(args.profile, args.weight, args.filter):
        if args.format == "json":
            print(lam.dumps(), file=out)
        else:
            print(" / ".join(" ".join(map(str, r)) or "-" for r in lam.rows), file=out)
    return EXIT_OK


def _cmd_count(args, out: TextIO) -> int:
    if args.refined:
        rc = refined_counts(args.profile, args.max_weight, args.filter)
        for row in rc.to_json():
            if args.format == "json":
                print(_dump(row), file=out)
            else:
                print(f"n={row['n']} m={row['m']} count={row['count']}", file=out)
        return EXIT_OK
    seq = count_sequence(args.profile, args.max_weight, args.filter)
    print(_dump(seq if args.format == "text" else [str(x) for x in seq]), file=out)
    return EXIT_OK


def _cmd_series(args, out: TextIO) -> int:
    if args.order is None:
        raise UsageError(f"--order is required (or set {ORDER_ENV})")
    if args.name == "borodin":
        if args.profile is None:
            raise UsageError("--name borodin needs --profile")
        f = ids.borodin_series(args.profile, args.order)
    elif args.name == "oc" and args.variant == "closed":
        f = ids.odd_closed(args.order)
    else:
        f = SERIES[args.name](args.order)
    if args.format == "json":
        print(_dump(f.to_json()), file=out)
    elif isinstance(f.ring, TrackedRing):
        print(_dump([list(p.c) for p in f.coeffs]), file=out)
    else:
        print(_dump(f.coeffs), file=out)
    return EXIT_OK


def _cmd_map(args, stdin: TextIO, out: TextIO) -> int:
    flavor = _flavor(args)
    _check_flavor_profile(flavor, args.profile)
    status = EXIT_OK
    for obj in _read_objects(stdin):
        if isinstance(obj, dict):
            lam = CylindricPartition.from_json(obj, args.profile)
            if lam.profile != args.profile:
                raise UsageError(f"input profile {lam.profile} does not match --profile {args.profile}")
        elif isinstance(obj, list):
            lam = validate_cylindric(obj, args.profile)
        else:
            raise UsageError("expected a rows array or an object with 'rows'")
        try:
            pair, trace = bj.forward(lam, flavor)
        except bj.NotInImage as exc:
            print(_dump({"error": "NotInImage", "reason": str(exc), "rows": lam.to_json()["rows"]}), file=out)
            status = EXIT_NOT_IN_IMAGE
            continue
        result = pair.to_json()
        if args.trace:
            result["trace"] = trace.to_json()
        print(_dump(result), file=out)
    return status


def _cmd_unmap(args, stdin: TextIO, out: TextIO) -> int:
    default = _flavor(args)
    for obj in _read_objects(stdin):
        if not isinstance(obj, dict):
            raise UsageError("expected an object with 'mu' and 'beta'")
        pair = bj.PartitionPair.from_json(obj, default)
        if args.flavor:
            pair = bj.PartitionPair(pair.mu, pair.beta, default)
        _check_flavor_profile(pair.flavor, args.profile)
        trace = bj.MoveTrace() if args.trace else None
        if pair.flavor == bj.DOUBLED_ODD:
            lam = bj.inverse_odd_11(pair, trace=trace, strict=args.strict)
        else:
            lam = bj.inverse(pair, trace=trace)
        result = lam.to_json()
        if trace is not None:
            result["trace"] = trace.to_json()
        print(_dump(result), file=out)
    return EXIT_OK


def _cmd_verify(args, out: TextIO) -> int:
    names = None if args.check == "all" else [args.check]
    ok = True
    for report in ids.verify_all(names=names, order=args.order):
        ok &= report.passed
        if args.format == "json":
            print(report.dumps(), file=out)
        else:
            status = "PASS" if report.passed else "FAIL"
            extra = "" if report.passed else f" first_diff={report.first_diff} values={report.values}"
            print(f"{status} {report.identity} order={report.order} {report.ms:.0f}ms{extra}", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_odd_table(args, out: TextIO) -> int:
    table = ids.odd_vs_enumeration(args.max_weight)
    if args.format == "json":
        for row in table.rows:
            print(_dump(row.to_json()), file=out)
    else:
        print(table.to_markdown(), file=out)
        if args.format == "text":
            print(f"first differing weight: {table.first_difference}", file=out)
    return EXIT_OK


def main(argv: list[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None,
         stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "enumerate":
            return _cmd_enumerate(args, stdout)
        if args.command == "count":
            return _cmd_count(args, stdout)
        if args.command == "series":
            return _cmd_series(args, stdout)
        if args.command == "map":
            return _cmd_map(args, stdin, stdout)
        if args.command == "unmap":
            return _cmd_unmap(args, stdin, stdout)
        if args.command == "verify":
            return _cmd_verify(args, stdout)
        return _cmd_odd_table(args, stdout)
    except (ValueError, SeriesError, KeyError, TypeError) as exc:
        kind = "UsageError" if isinstance(exc, (KeyError, TypeError)) else type(exc).__name__
        print(f"error: {kind}: {exc}", file=stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

"""Command-line front-end: sequence emission, eta-quotient expansion and
batch verification with machine-readable reports.

Exit codes: 0 all good, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import __version__
from .series import Series, SeriesError
from .products import EtaQuotientSpec, eta_expand
from .verifier import (all_check_ids, get_check, run_checks,
                       a_series, c_series, p_series)

REPORT_SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _emit_values(pairs, fmt: str, out) -> None:
    """Write (index, value) pairs as b-file lines, JSON or CSV."""
    if fmt == "bfile":
        for n, v in pairs:
            out.write(f"{n} {v}\n")
    elif fmt == "json":
        json.dump({"values": [[n, v] for n, v in pairs]}, out)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(["n", "value"])
        writer.writerows(pairs)
    else:
        raise ValueError(f"unknown format {fmt!r}")


def parse_bfile(text: str) -> list:
    """Read 'n value' lines back into (n, value) pairs."""
    pairs = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, v = line.split()
        pairs.append((int(n), int(v)))
    return pairs


def _sequence_values(name: str, limit: int, modulus: int | None) -> list:
    if name == "a":
        s = a_series(limit, modulus)
    elif name == "C":
        s = c_series(limit, modulus)
    elif name == "p":
        s = p_series(limit, modulus)
    elif name in ("ce", "co"):
        # halves of p +- C; computed exactly, reduced afterwards
        p = p_series(limit)
        c = c_series(limit)
        sign = 1 if name == "ce" else -1
        vals = []
        for n in range(limit + 1):
            tot = p.coeff_at(n) + sign * c.coeff_at(n)
            if tot % 2:
                raise SeriesError(f"p({n}) {'+' if sign > 0 else '-'} C({n}) "
                                  "is odd; crank tally invariant broken")
            v = tot // 2
            vals.append((n, v % modulus if modulus else v))
        return vals
    else:
        raise ValueError(f"unknown sequence {name!r}")
    return [(n, s.coeff_at(n)) for n in range(limit + 1)]


def _cmd_seq(args) -> int:
    values = _sequence_values(args.name, args.limit, args.mod)
    _emit_values(values, args.format, sys.stdout)
    return EXIT_OK


def _cmd_eta(args) -> int:
    spec = EtaQuotientSpec.parse(args.spec)
    s = eta_expand(spec, args.order, args.mod)
    lo = min(s.valuation, spec.q_shift)
    pairs = [(e, s.coeff_at(e)) for e in range(lo, s.order + 1)]
    _emit_values(pairs, args.format, sys.stdout)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.all:
        ids = all_check_ids()
    elif args.check:
        ids = []
        for chunk in args.check:
            ids.extend(x.strip() for x in chunk.split(",") if x.strip())
    else:
        raise UsageError("nothing to verify: pass --check ids or --all")

    unknown = []
    known = []
    for cid in ids:
        try:
            get_check(cid)
            known.append(cid)
        except KeyError:
            unknown.append(cid)

    t0 = time.perf_counter()
    results = run_checks(known, args.order, jobs=args.jobs)
    total = time.perf_counter() - t0

    for r in results:
        line = f"{r.id}: {r.status} (order {r.order_used}, {r.runtime:.2f}s)"
        if r.status == "skipped" and r.note:
            line += f" {r.note}"
        if r.first_failure is not None:
            f = r.first_failure
            line += (f" first failure at index {f.index}: "
                     f"expected {f.expected}, got {f.actual}")
        print(line)

    overall = "pass" if all(r.status != "fail" for r in results) else "fail"
    if args.report:
        doc = {
            "schema_version": REPORT_SCHEMA_VERSION,
            "tool": "qcrank",
            "tool_version": __version__,
            "order_override": args.order,
            "overall": overall,
            "total_runtime_sec": round(total, 4),
            "unknown_ids": unknown,
            "checks": [r.as_dict(get_check(r.id)) for r in results],
        }
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")

    if unknown:
        print(f"error: unknown check id(s): {', '.join(unknown)}",
              file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if overall == "pass" else EXIT_CHECK_FAILED


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcrank",
        description="Exact q-series engine and congruence verifier for "
                    "crank-parity and colored-partition identities.")
    parser.add_argument("--version", action="version",
                        version=f"qcrank {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="emit a named coefficient sequence")
    p_seq.add_argument("name", choices=["a", "C", "ce", "co", "p"])
    p_seq.add_argument("--limit", type=int, required=True,
                       help="largest index n to emit (n = 0..limit)")
    p_seq.add_argument("--mod", type=int, default=None,
                       help="reduce values modulo this integer")
    p_seq.add_argument("--format", choices=["bfile", "json", "csv"],
                       default="bfile")

    p_eta = sub.add_parser(
        "eta", help="expand an eta-quotient delta:exponent[,...][;qshift=s]")
    p_eta.add_argument("spec")
    p_eta.add_argument("--order", type=int, required=True,
                       help="truncation order of the undecorated product")
    p_eta.add_argument("--mod", type=int, default=None)
    p_eta.add_argument("--format", choices=["bfile", "json", "csv"],
                       default="bfile")

    p_ver = sub.add_parser("verify", help="run catalogued checks")
    p_ver.add_argument("--check", action="append", default=[],
                       metavar="ID[,ID...]",
                       help="check ids to run (repeatable, comma-separable)")
    p_ver.add_argument("--all", action="store_true",
                       help="run the whole catalogue")
    p_ver.add_argument("--list", action="store_true",
                       help="list catalogue ids and exit")
    p_ver.add_argument("--order", type=int, default=None,
                       help="override every selected check's default order")
    p_ver.add_argument("--report", default=None,
                       help="write a JSON report to this path")
    p_ver.add_argument("--jobs", type=int, default=1,
                       help="run checks in parallel (results unchanged)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "seq":
            if args.limit < 1:
                raise UsageError("--limit must be >= 1")
            return _cmd_seq(args)
        if args.command == "eta":
            if args.order < 0:
                raise UsageError("--order must be >= 0")
            return _cmd_eta(args)
        if args.command == "verify":
            if args.list:
                for cid in all_check_ids():
                    check = get_check(cid)
                    print(f"{cid}: {check.description}")
                return EXIT_OK
            return _cmd_verify(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE
    except (SeriesError, ValueError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: severi (one degree), kontsevich (rational counts), table
(batch degrees into a cache file), verify (consistency checks), and
case-study (the two classical derivations of the 12 nodal cubics).
Exit codes: 0 computed/verified, 1 verification failure, 2 usage or
input error.  Output is deterministic: identical invocations produce
byte-identical stdout.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__, cache, classical, genfunc, kontsevich, series, severi

VERIFY_BOUNDS = {"wdvv-dmax": 8, "getzler-D": 5, "one-node-dmax": 12}
VERIFY_DEFAULTS = {"wdvv-dmax": 6, "wdvv-x1": 8, "getzler-D": 4, "one-node-dmax": 12}


def _parse_profile(text: str, flag: str) -> tuple[int, ...]:
    """Comma-separated multiplicities, e.g. '0,1' for one order-2 contact."""
    if not text:
        return ()
    try:
        entries = tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "%s expects comma-separated integers, got %r" % (flag, text)
        )
    if any(e < 0 for e in entries):
        raise argparse.ArgumentTypeError(
            "%s entries must be nonnegative, got %r" % (flag, text)
        )
    return entries


def _fmt_profile(profile: tuple[int, ...]) -> str:
    return "(" + ",".join(str(e) for e in profile) + ")"


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def cmd_severi(args) -> int:
    index = severi.validate(args.d, args.delta, args.alpha, args.beta)
    degree = severi.severi_degree(index)
    dim = severi.dimension(index)
    g = severi.genus(index)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "d": index.d,
                    "delta": index.delta,
                    "alpha": list(index.alpha),
                    "beta": list(index.beta),
                    "degree": str(degree),
                    "dim": dim,
                    "genus": g,
                },
                sort_keys=True,
            )
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["d", "delta", "alpha", "beta", "degree", "dim", "genus"])
        writer.writerow(
            [
                index.d,
                index.delta,
                ",".join(str(e) for e in index.alpha),
                ",".join(str(e) for e in index.beta),
                str(degree),
                dim,
                g,
            ]
        )
    else:
        print(
            "index d=%d delta=%d alpha=%s beta=%s"
            % (index.d, index.delta, _fmt_profile(index.alpha), _fmt_profile(index.beta))
        )
        print("degree %s" % degree)
        print("dim %d" % dim)
        print("genus %d" % g)
    return 0


def cmd_kontsevich(args) -> int:
    rows = kontsevich.rational_table(args.max)
    if args.format == "json":
        print(json.dumps([{"d": d, "n": str(n)} for d, n in rows]))
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["d", "n"])
        for d, n in rows:
            writer.writerow([d, str(n)])
    else:
        width = max(len(str(n)) for _, n in rows)
        for d, n in rows:
            print("%2d  %*s" % (d, width, n))
    return 0


def cmd_table(args) -> int:
    if not args.cache:
        print("error: table requires --cache PATH", file=sys.stderr)
        return 2
    memo = severi.MemoStore()
    indices = [
        index
        for d in range(1, args.dmax + 1)
        for index in severi.all_indices(d, args.deltamax)
    ]
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            list(pool.map(lambda ix: severi.severi_degree(ix, memo), indices))
    records = [
        cache.CacheRecord.from_degree_record(rec)
        for rec in severi.severi_table(args.dmax, args.deltamax, memo)
    ]
    existing = cache.read_cache(args.cache) if os.path.exists(args.cache) else []
    known = {}
    for rec in existing:
        try:
            known[rec.key()] = rec
        except (severi.WeightMismatch, severi.NonPositiveDegree):
            print(
                "cache corruption: invalid index d=%d delta=%d alpha=%s beta=%s"
                % (rec.d, rec.delta, list(rec.alpha), list(rec.beta)),
                file=sys.stderr,
            )
            return 1
    fresh = []
    verified = 0
    for rec in records:
        old = known.get(rec.key())
        if old is None:
            fresh.append(rec)
            continue
        if (old.degree, old.dim, old.genus) != (rec.degree, rec.dim, rec.genus):
            print(
                "cache corruption at d=%d delta=%d alpha=%s beta=%s: "
                "stored degree %s, recomputed %s"
                % (rec.d, rec.delta, list(rec.alpha), list(rec.beta),
                   old.degree, rec.degree),
                file=sys.stderr,
            )
            return 1
        verified += 1
    cache.append_records(args.cache, fresh)
    print("cache %s" % args.cache)
    print("verified %d" % verified)
    print("appended %d" % len(fresh))
    print("records %d" % (len(existing) + len(fresh)))
    return 0


def _verify_wdvv(d_max: int, x1_bound: int) -> tuple[int, list[str]]:
    spec = series.PotentialSpec(d_max, x1_bound)
    residual = series.wdvv_residual(spec)
    lines = [
        "wdvv d_max=%d x1_bound=%d window=%d nonzero=%d"
        % (d_max, x1_bound, len(series.wdvv_window(spec)), len(residual))
    ]
    for (a, b), value in residual:
        lines.append("  residual x1^%d x2^%d = %s" % (a, b, value))
    return (1 if residual else 0), lines


def _verify_getzler(D: int) -> tuple[int, list[str]]:
    bad = genfunc.getzler_residual(D)
    lines = ["getzler D=%d violations=%d" % (D, len(bad))]
    for alpha, beta, m in bad:
        lines.append(
            "  monomial alpha=%s beta=%s z^%d"
            % (_fmt_profile(alpha), _fmt_profile(beta), m)
        )
    return (1 if bad else 0), lines


def _verify_one_node(d_max: int) -> tuple[int, list[str]]:
    memo = severi.MemoStore()
    bad = []
    for d in range(2, d_max + 1):
        expected = 3 * (d - 1) ** 2
        routes = {
            "recursion": severi.severi_degree(
                severi.SeveriIndex(d, 1, (), (d,)), memo
            ),
            "chow": classical.chow_one_node(d),
            "euler": classical.euler_one_node(d),
        }
        if any(value != expected for value in routes.values()):
            bad.append((d, expected, routes))
    lines = ["one-node d=2..%d disagreements=%d" % (d_max, len(bad))]
    for d, expected, routes in bad:
        lines.append(
            "  d=%d expected %d got recursion=%d chow=%d euler=%d"
            % (d, expected, routes["recursion"], routes["chow"], routes["euler"])
        )
    return (1 if bad else 0), lines


def _verify_case_studies() -> tuple[int, list[str]]:
    values = {
        "cross-ratio": classical.cross_ratio_cubics().count,
        "rational-fibration": classical.fibration_cubics().count,
        "recursion": severi.severi_degree(severi.SeveriIndex(3, 1, (), (3,))),
        "kontsevich": kontsevich.rational_count(3),
    }
    agree = len(set(values.values())) == 1 and values["recursion"] == 12
    lines = [
        "case-studies "
        + " ".join("%s=%d" % (name, values[name]) for name in sorted(values))
    ]
    return (0 if agree else 1), lines


def cmd_verify(args) -> int:
    checks = []
    if args.which in ("wdvv", "all"):
        d_max = VERIFY_DEFAULTS["wdvv-dmax"] if args.which == "all" else args.dmax
        x1 = VERIFY_DEFAULTS["wdvv-x1"] if args.which == "all" else args.x1
        if d_max is None:
            d_max = VERIFY_DEFAULTS["wdvv-dmax"]
        if x1 is None:
            x1 = VERIFY_DEFAULTS["wdvv-x1"]
        if not 1 <= d_max <= VERIFY_BOUNDS["wdvv-dmax"]:
            print(
                "error: wdvv supports 1 <= dmax <= %d" % VERIFY_BOUNDS["wdvv-dmax"],
                file=sys.stderr,
            )
            return 2
        if x1 < 3:
            print("error: wdvv needs --x1 >= 3", file=sys.stderr)
            return 2
        checks.append(_verify_wdvv(d_max, x1))
    if args.which in ("getzler", "all"):
        D = VERIFY_DEFAULTS["getzler-D"] if args.which == "all" else args.D
        if D is None:
            D = VERIFY_DEFAULTS["getzler-D"]
        if not 2 <= D <= VERIFY_BOUNDS["getzler-D"]:
            print(
                "error: getzler supports 2 <= D <= %d" % VERIFY_BOUNDS["getzler-D"],
                file=sys.stderr,
            )
            return 2
        checks.append(_verify_getzler(D))
    if args.which in ("one-node", "all"):
        d_max = VERIFY_DEFAULTS["one-node-dmax"] if args.which == "all" else args.dmax
        if d_max is None:
            d_max = VERIFY_DEFAULTS["one-node-dmax"]
        if not 2 <= d_max <= VERIFY_BOUNDS["one-node-dmax"]:
            print(
                "error: one-node supports 2 <= dmax <= %d"
                % VERIFY_BOUNDS["one-node-dmax"],
                file=sys.stderr,
            )
            return 2
        checks.append(_verify_one_node(d_max))
    if args.which in ("case-studies", "all"):
        checks.append(_verify_case_studies())
    status = max(code for code, _ in checks)
    for _, lines in checks:
        for line in lines:
            print(line)
    print("ok" if status == 0 else "FAIL")
    return status


def _print_report(report: classical.CaseStudyReport, fmt: str):
    if fmt == "text":
        print("case-study %s" % report.method)
        for name, value in report.quantities.items():
            print("  %s = %d" % (name, value))
        for note in report.notes:
            print("  note: %s" % note)


def cmd_case_study(args) -> int:
    reports = [classical.cross_ratio_cubics(), classical.fibration_cubics()]
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "method": rep.method,
                        "quantities": rep.quantities,
                        "count": rep.count,
                        "notes": list(rep.notes),
                    }
                    for rep in reports
                ],
                sort_keys=True,
            )
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["method", "quantity", "value"])
        for rep in reports:
            for name, value in rep.quantities.items():
                writer.writerow([rep.method, name, value])
    else:
        for rep in reports:
            _print_report(rep, "text")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "csv", "json"), default="text",
        help="output format (default text)",
    )
    common.add_argument("--cache", help="degree cache file (used by table)")
    common.add_argument(
        "--threads", type=int, default=1,
        help="worker threads for independent top-level indices",
    )

    parser = argparse.ArgumentParser(
        prog="curvecount",
        description="Exact counts of nodal plane curves with tangency conditions.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("severi", parents=[common],
                       help="one Severi degree with dimension and genus")
    p.add_argument("--d", type=int, required=True, help="curve degree")
    p.add_argument("--delta", type=int, required=True, help="number of nodes")
    p.add_argument("--alpha", default="",
                   type=lambda s: _parse_profile(s, "--alpha"),
                   help="assigned contact multiplicities, e.g. 0,1")
    p.add_argument("--beta", default="",
                   type=lambda s: _parse_profile(s, "--beta"),
                   help="unassigned contact multiplicities, e.g. 3")
    p.set_defaults(func=cmd_severi)

    p = sub.add_parser("kontsevich", parents=[common],
                       help="rational curve counts N(d)")
    p.add_argument("--max", type=int, required=True, help="largest degree")
    p.set_defaults(func=cmd_kontsevich)

    p = sub.add_parser("table", parents=[common],
                       help="batch Severi degrees into a cache file")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--deltamax", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common],
                       help="run a consistency check suite")
    p.add_argument("which",
                   choices=("wdvv", "getzler", "one-node", "case-studies", "all"))
    p.add_argument("--dmax", type=int, default=None,
                   help="bound for wdvv (<= 8) or one-node (<= 12)")
    p.add_argument("--x1", type=int, default=None,
                   help="x1 truncation for wdvv (>= 3)")
    p.add_argument("--D", type=int, default=None,
                   help="degree truncation for getzler (2..5)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("case-study", parents=[common],
                       help="both classical derivations of the 12 nodal cubics")
    p.set_defaults(func=cmd_case_study)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (severi.WeightMismatch, severi.NonPositiveDegree) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except cache.CacheError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except classical.ArithmeticMismatch as exc:
        print("verification failure: %s" % exc, file=sys.stderr)
        return 1
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

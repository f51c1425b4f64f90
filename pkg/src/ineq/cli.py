"""Command line interface.

Subcommands:
  verify     run a suite (or explicit check ids) and emit a report
  sharpness  probe how closely a check's top comparison is attained
  distance   exact subspace distances and bounds for query vectors
  list       enumerate registered checks

Exit codes: 0 clean, 1 violations found, 2 usage or configuration
error, 3 instance generator exhausted.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog, harness
from .core import GeneratorExhausted, IneqError

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3


def _parse_dims(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise IneqError(f"dims must look like LO..HI, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ineq",
        description="Numerical verification of inner product space "
                    "inequalities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a check suite")
    p_verify.add_argument("--suite", default="all",
                          help="suite name (ch1..ch6, all) or "
                               "comma-separated check ids")
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--dims", default="2..8", metavar="LO..HI")
    p_verify.add_argument("--field", default="both",
                          choices=["real", "complex", "both"])
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--force", action="store_true",
                          help="evaluate chains even when the "
                               "hypothesis fails (still flagged)")
    p_verify.add_argument("--format", default="text",
                          choices=["json", "csv", "text"])
    p_verify.add_argument("--out", default=None,
                          help="write the report to this path")

    p_sharp = sub.add_parser("sharpness",
                             help="probe attained/stated ratio")
    p_sharp.add_argument("--check", required=True)
    p_sharp.add_argument("--budget", type=int, default=2048)
    p_sharp.add_argument("--dim", type=int, default=4)
    p_sharp.add_argument("--field", default=None,
                         choices=["real", "complex"])
    p_sharp.add_argument("--seed", type=int, default=2024)

    p_dist = sub.add_parser("distance",
                            help="subspace distances for query vectors")
    p_dist.add_argument("--vectors", required=True,
                        help="CSV of spanning vectors, one per row")
    p_dist.add_argument("--query", required=True,
                        help="CSV of query vectors, one per row")
    p_dist.add_argument("--out", default=None)

    p_list = sub.add_parser("list", help="enumerate registered checks")
    p_list.add_argument("--suite", default=None)
    return parser


def _suite_config(args) -> harness.SuiteConfig:
    lo, hi = _parse_dims(args.dims)
    name = args.suite
    ids: tuple[str, ...] = ()
    if "," in name or (name not in catalog.SUITES and name != "all"):
        candidate = tuple(s.strip() for s in name.split(",") if s.strip())
        if all(_known_check(c) for c in candidate) and candidate:
            name, ids = "all", candidate
    return harness.SuiteConfig(
        suite=name, check_ids=ids, trials=args.trials, dim_lo=lo,
        dim_hi=hi, fields=args.field, seed=args.seed, force=args.force)


def _known_check(check_id: str) -> bool:
    try:
        catalog.get_check(check_id)
        return True
    except KeyError:
        return False


def cmd_verify(args) -> int:
    cfg = _suite_config(args)
    report = harness.run_suite(cfg)
    payload = harness.emit_report(report, args.format, args.out)
    if args.out is None:
        sys.stdout.write(payload)
    else:
        print(f"report written to {args.out}")
        summary = report.to_dict()["summary"]
        print("checks {checks} trials {trials} violations {violations} "
              "rejections {rejections}".format(**summary))
    return EXIT_VIOLATIONS if report.total_violations else EXIT_OK


def cmd_sharpness(args) -> int:
    ratio = harness.probe_sharpness(
        args.check, budget=args.budget, dim=args.dim,
        field_tag=args.field, seed=args.seed)
    print(f"{args.check} sharpness ratio {ratio:.9f}")
    return EXIT_OK


def cmd_distance(args) -> int:
    from . import subspace
    return subspace.distance_cli(args.vectors, args.query, args.out)


def cmd_list(args) -> int:
    checks = (catalog.checks_in_suite(args.suite) if args.suite
              else catalog.all_checks())
    if args.suite and not checks:
        raise IneqError(f"no checks in suite {args.suite!r}")
    for chk in checks:
        fields = "/".join(chk.fields)
        print(f"{chk.id:<24s} {chk.suite:4s} [{fields}] {chk.title}")
    print(f"{len(checks)} checks")
    return EXIT_OK


_COMMANDS = {"verify": cmd_verify, "sharpness": cmd_sharpness,
             "distance": cmd_distance, "list": cmd_list}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        harness.load_catalogs()
        return _COMMANDS[args.command](args)
    except GeneratorExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (IneqError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())

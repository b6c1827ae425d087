"""``certify`` command line.

    certify run-all [--seed N] [--trials K] [--json PATH] [--check ID]... [--det3 PATH]
    certify list-checks
    certify show-form {det3,p1,p2}

Exit status: 0 when every check passes, 1 when any fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import certify
from .forms import canonical_forms, from_string, to_string

MAX_SEED = 2**64 - 1


def _seed(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 0 <= v <= MAX_SEED:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _trials(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("trials must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="certify",
                                     description="Exact checks on the boundary of the det3 orbit.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run-all", help="run the registered checks")
    run.add_argument("--seed", type=_seed, default=certify.DEFAULT_SEED)
    run.add_argument("--trials", type=_trials, default=certify.DEFAULT_TRIALS,
                     help="random trials per sampling-based check (default %(default)s)")
    run.add_argument("--json", type=Path, metavar="PATH", help="write the JSON report here")
    run.add_argument("--check", action="append", metavar="ID",
                     help="restrict to this check (repeatable)")
    run.add_argument("--det3", type=Path, metavar="PATH",
                     help="read the det3 fixture from a form file instead of the built-in one")

    sub.add_parser("list-checks", help="print registered check ids")

    show = sub.add_parser("show-form", help="print a built-in form in text serialization")
    show.add_argument("name", choices=["det3", "p1", "p2"])
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "list-checks":
        for cid in certify.check_ids():
            print(f"{cid}\t{certify.REGISTRY[cid][0]}")
        return 0

    if args.command == "show-form":
        det3, p1, p2 = canonical_forms()
        sys.stdout.write(to_string({"det3": det3, "p1": p1, "p2": p2}[args.name]))
        return 0

    det3 = None
    if args.det3 is not None:
        try:
            det3 = from_string(args.det3.read_text(), degree=3)
        except (OSError, ValueError) as exc:
            print(f"certify: cannot read det3 fixture: {exc}", file=sys.stderr)
            return 2
    try:
        results, summary = certify.run_all(args.seed, args.trials, det3, args.check)
    except certify.UnknownCheck as exc:
        print(f"certify: unknown check id: {exc.args[0]}", file=sys.stderr)
        return 2

    width = max(len(r.check_id) for r in results)
    for r in results:
        print(f"{r.status.upper():<12} {r.check_id:<{width}}  observed={r.observed}"
              f"  expected={r.expected}")
    print(f"{summary['passed']} passed, {summary['failed']} failed, "
          f"{summary['inconclusive']} inconclusive of {summary['total']}")
    if args.json is not None:
        args.json.write_text(certify.report_json(results, summary, args.seed))
    return 1 if summary["failed"] else 0


if __name__ == "__main__":
    sys.exit(main())

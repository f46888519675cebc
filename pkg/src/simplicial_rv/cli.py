"""Command-line entry point.

Exit codes: 0 success, 1 property violation, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .counterexample import counterexample
from .demos import geodesic_demo, lift_report, phi_demo
from .errors import DomainError
from .fibration import PmfPath
from .properties import SUITES
from .stepfn import StepFn
from .verify import verify


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simplicial-rv",
                                     description="Exact simplicial random variables: checks and demos.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run seeded property suites")
    p.add_argument("--suite", required=True, choices=[*SUITES, "all"])
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=10_000)

    p = sub.add_parser("counterexample", help="non-continuity witness for the weak topology")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("demo", help="figures and lift reports")
    demo = p.add_subparsers(dest="demo", required=True)
    for name in ("geodesic", "phi"):
        d = demo.add_parser(name)
        d.add_argument("--out", required=True)
        d.add_argument("--samples", type=int, default=6)
    d = demo.add_parser("lift")
    d.add_argument("--path", required=True, help="PmfPath JSON")
    d.add_argument("--start", required=True, help="StepFn JSON")
    d.add_argument("--grid", type=int, default=100)
    d.add_argument("--out", required=True)
    return parser


def _run(args) -> int:
    if args.command == "verify":
        if args.trials < 1:
            raise DomainError("--trials must be positive")
        report = verify(args.suite, args.seed, args.trials)
        print(report.render())
        return 0 if report.violations == 0 else 1

    if args.command == "counterexample":
        rep = counterexample(args.n)
        if args.json:
            print(json.dumps(rep.to_json(), indent=2))
        else:
            print(f"n = {rep.n}")
            print(f"d(f, f0)            = {rep.distance_to_f0}")
            print(f"|supp law(f)|       = {rep.support_size}")
            print(f"law(f)(n^2 + 1)     = {rep.mass_at_top}")
            print(f"law(f) leaves U     = {rep.violates_U}")
        return 0

    if args.demo in ("geodesic", "phi"):
        if args.samples < 2:
            raise DomainError("--samples must be >= 2")
        fn = geodesic_demo if args.demo == "geodesic" else phi_demo
        print(fn(args.out, args.samples))
        return 0

    H = PmfPath.from_json(json.loads(Path(args.path).read_text()))
    h0 = StepFn.from_json(json.loads(Path(args.start).read_text()))
    if args.grid < 1:
        raise DomainError("--grid must be >= 1")
    report = lift_report(H, h0, args.grid)
    Path(args.out).write_text(json.dumps(report, indent=2) + "\n")
    print(f"{'ok' if report['ok'] else 'FAILED'}: {args.grid + 1} samples written to {args.out}")
    return 0 if report["ok"] else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (DomainError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

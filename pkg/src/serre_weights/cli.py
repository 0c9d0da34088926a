"""Command line front end.

Exit status: 0 on success, 1 when a verification or consistency check
fails, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import sys

from .characters import FieldParams, is_prime
from .engine import ConsistencyFault, verify_theorems
from .report import (
    derive_report,
    lifts_report,
    predict_report,
    rank_one_report,
    reduce_mj_report,
    verify_report,
)


def _field_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=int, required=True, help="odd prime")
    sub.add_argument("--e", type=int, required=True, help="ramification index")
    sub.add_argument("--format", choices=("json", "table"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="serre-weights", description="Serre weights for totally ramified p")
    cmds = parser.add_subparsers(dest="command", required=True)

    sub = cmds.add_parser("predict", help="predicted weight set W?")
    _field_args(sub)
    sub.add_argument("--inertia", required=True, help="red:a,b or irr:c")

    sub = cmds.add_parser("lifts", help="constructed lifts of the type of a weight")
    _field_args(sub)
    sub.add_argument("--inertia", required=True)
    sub.add_argument("--weight", required=True, help="m,n")

    sub = cmds.add_parser("derive", help="weights derived by the deduction rules")
    _field_args(sub)
    sub.add_argument("--inertia", required=True)
    sub.add_argument("--ordinary-lift", action="store_true", help="assume an ordinary modular lift")

    breuil = cmds.add_parser("breuil", help="Breuil module computations")
    bcmds = breuil.add_subparsers(dest="breuil_command", required=True)
    sub = bcmds.add_parser("reduce-mj", help="generic fibre of Mbar_j")
    _field_args(sub)
    sub.add_argument("--j", type=int, required=True)
    sub = bcmds.add_parser("rank-one", help="generic fibre of a rank one module")
    _field_args(sub)
    sub.add_argument("--kappa", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)

    sub = cmds.add_parser("verify", help="sweep the main theorems and the Mbar_j suite")
    sub.add_argument("--p-max", type=int, required=True)
    sub.add_argument("--e-max", type=int, required=True)
    sub.add_argument("--workers", type=int, default=1)
    sub.add_argument("--format", choices=("json", "table"), default="json")
    return parser


def _run(args) -> tuple:
    if args.command == "verify":
        if args.p_max < 3 or args.e_max < 1 or args.workers < 1:
            raise ValueError("need --p-max >= 3, --e-max >= 1 and --workers >= 1")
        primes = [p for p in range(3, args.p_max + 1) if is_prime(p)]
        rng = [(p, e) for p in primes for e in range(1, args.e_max + 1)]
        result = verify_theorems(rng, rng, workers=args.workers)
        return verify_report(primes, args.e_max, result), result.first_failure()
    params = FieldParams(args.p, args.e)
    if args.command == "predict":
        return predict_report(params, args.inertia), None
    if args.command == "lifts":
        return lifts_report(params, args.inertia, args.weight), None
    if args.command == "derive":
        return derive_report(params, args.inertia, args.ordinary_lift), None
    if args.breuil_command == "reduce-mj":
        return reduce_mj_report(params, args.j), None
    return rank_one_report(params, args.kappa, args.r), None


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, failure = _run(args)
    except ConsistencyFault as exc:
        print(f"consistency fault: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(report.to_table() if args.format == "table" else report.to_json())
    if failure is not None:
        print(f"check ({failure.check}) failed for p={failure.p}, e={failure.e}, {failure.rho}: "
              f"{failure.detail}", file=sys.stderr)
        return 1
    return 0

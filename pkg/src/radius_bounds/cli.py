"""Command-line entry point.

Subcommands: ``bounds`` (evaluate every bound for a matrix file), ``verify``
(random-trial suite over a matrix family), ``example`` (reproduce the built-in
worked 3x3 case), ``witness`` (non-comparability search).

Exit codes: 0 success, 1 usage/input error, 2 mathematical-chain violation or
failed search.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import bounds, harness, matio
from .errors import ParseError, RadiusBoundsError, WitnessNotFound
from .radius import numerical_radius

ENV_SEED = "RADIUS_BOUNDS_SEED"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise SystemExit(1)
    return dims


def _resolve_seed(args) -> int:
    env = os.environ.get(ENV_SEED)
    if env is not None:
        return int(env)
    return args.seed


def _render_table(rows: list[tuple[str, float]]) -> str:
    width = max(len(name) for name, _ in rows)
    return "\n".join(f"{name:<{width}}  {value:.6f}" for name, value in rows)


def cmd_bounds(args) -> int:
    a = matio.load_matrix(args.input)
    result = numerical_radius(a, theta_grid=args.theta_grid)
    values = bounds.evaluate_catalog(a, omega=result.omega,
                                     theta_grid=args.theta_grid, v_grid=args.v_grid)
    _, argmin_v = bounds.min_over_v_29(a, v_grid=args.v_grid)
    verdicts = [
        bounds.chain_26(a, omega=result.omega),
        bounds.reverse_power_bound(a, omega=result.omega, theta_grid=args.theta_grid),
        bounds.lower_refinement_final(a, omega=result.omega),
    ]
    chains = {v.chain_name: v.holds for v in verdicts}

    if args.format == "json":
        payload = {
            "omega": result.omega,
            "argmax_theta": result.argmax_theta,
            "argmin_v": argmin_v,
            "bounds": {name: bv.value for name, bv in sorted(values.items())},
            "chains": chains,
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif args.format == "csv":
        print("name,value")
        print(f"omega,{result.omega!r}")
        for name, bv in sorted(values.items()):
            print(f"{name},{bv.value!r}")
    else:
        rows = [("omega", result.omega), ("argmin_v", argmin_v)]
        rows += [(name, bv.value) for name, bv in sorted(values.items())]
        print(_render_table(rows))
        for name, ok in chains.items():
            print(f"chain {name}: {'holds' if ok else 'VIOLATED'}")
    return 0 if all(chains.values()) else 2


def cmd_example(args) -> int:
    a = harness.EXAMPLE_MATRIX
    k07 = bounds.kittaneh_07(a).value
    min29, argmin_v = bounds.min_over_v_29(a, v_grid=args.v_grid)
    print("matrix A =")
    for row in a.real.astype(int):
        print("  " + "  ".join(str(x) for x in row))
    print(f"half-norm-sum bound  : {k07:.6f}  (expected 1.5)")
    print(f"min-over-v bound     : {min29.value:.6f}  (expected 1.280776, argmin v = {argmin_v:.6f})")
    print(f"difference           : {k07 - min29.value:.6f}")
    ok = abs(k07 - 1.5) <= 1e-12 and abs(min29.value - 1.280776) <= 1e-4
    print("PASS" if ok else "FAIL")
    return 0 if ok else 2


def cmd_verify(args) -> int:
    cfg = harness.TrialConfig(family=args.family, dims=_parse_dims(args.dims),
                              trials=args.trials, seed=_resolve_seed(args),
                              tol_rel=args.tol, v_grid=args.v_grid,
                              theta_grid=args.theta_grid)
    records, summary = harness.run_suite(cfg)
    if args.out:
        out = Path(args.out)
        if args.format == "csv" or out.suffix == ".csv":
            out.write_text(harness.report_csv(records))
        else:
            out.write_text(harness.report_json(records, summary))
    print(f"{summary['n_records']} matrices, {len(summary['violations'])} violations, "
          f"{len(summary['errors'])} errors")
    return 0 if summary["all_hold"] else 2


def cmd_witness(args) -> int:
    try:
        w02, w04 = harness.find_noncomparability_witnesses(budget=args.budget,
                                                           seed=_resolve_seed(args))
    except WitnessNotFound as exc:
        print(f"witness search failed: {exc}", file=sys.stderr)
        return 2
    payload = {"witness_02_better": w02, "witness_04_better": w04}
    if args.out:
        Path(args.out).write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    print(json.dumps(payload, sort_keys=True))
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="radius-bounds",
                     description="numerical radius bounds: evaluate, verify, reproduce")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--v-grid", type=int, default=65)
        p.add_argument("--theta-grid", type=int, default=1024)

    p = sub.add_parser("bounds", help="evaluate every bound for a matrix file")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("example", help="reproduce the built-in worked example")
    common(p)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("verify", help="random-trial verification suite")
    p.add_argument("--family", choices=harness.FAMILIES, default="ginibre")
    p.add_argument("--dims", default="2,3,4,5,6,7,8")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="non-comparability witness search")
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_witness)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except (RadiusBoundsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()

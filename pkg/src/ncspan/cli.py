"""Command-line front end.

Exit codes: 0 ok, 2 parse/usage error, 3 infeasible, 4 general position
violated, 5 swap cap exceeded, 6 verification failed, 7 oracle size cap.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .generate import GenerationError, generate
from .instance import GeneralPositionViolation, InfeasibleInstance, Instance
from .io import (ParseError, instance_to_json, load_instance, load_solution, render_svg,
                 solution_to_json, total_length_scaled, trace_to_json)
from .uncross import IterationCapExceeded, solve
from .verify import ORACLE_MAX_N, enumerate_feasible_trees, verify

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_POSITION = 4
EXIT_ITER_CAP = 5
EXIT_VERIFY = 6
EXIT_SIZE = 7


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _load(path, **kw):
    """Return (instance, scale) or an exit code."""
    try:
        return load_instance(path, **kw)
    except GeneralPositionViolation as exc:
        _err(str(exc))
        return EXIT_POSITION
    except (ParseError, ValueError, TypeError) as exc:
        _err(str(exc))
        return EXIT_PARSE


def cmd_solve(args) -> int:
    loaded = _load(args.input, allow_missing_f=args.uniform_degree is not None)
    if isinstance(loaded, int):
        return loaded
    inst, scale = loaded
    try:
        sol = solve(inst, k=args.uniform_degree, max_iters=args.max_iters)
    except InfeasibleInstance as exc:
        _err(str(exc))
        return EXIT_INFEASIBLE
    except IterationCapExceeded as exc:
        _err(str(exc))
        return EXIT_ITER_CAP
    except ValueError as exc:
        _err(str(exc))
        return EXIT_PARSE
    checked = inst
    if args.uniform_degree is not None:
        checked = Instance(inst.red, inst.blue, [args.uniform_degree] * inst.n_red,
                           check_position=False)
    report = verify(checked, sol.tree)
    if not report.passed:
        _err("solver output failed verification: " + "; ".join(report.failures()))
        return EXIT_VERIFY
    edges = sol.tree.edge_list()
    out = solution_to_json(sol.tree, total_length_scaled(inst, edges, scale),
                           sol.trace.swap_count, sol.reduced_budget)
    Path(args.output).write_text(json.dumps(out) + "\n")
    if args.svg:
        Path(args.svg).write_text(render_svg(inst, edges))
    if args.trace:
        Path(args.trace).write_text(json.dumps(trace_to_json(sol.trace, scale), indent=1) + "\n")
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        inst = generate(args.n_red, args.n_blue, args.f_mode, args.bbox, args.seed)
    except (GenerationError, ValueError) as exc:
        _err(str(exc))
        return EXIT_PARSE
    sys.stdout.write(json.dumps(instance_to_json(inst)) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    loaded = _load(args.input)
    if isinstance(loaded, int):
        return loaded
    inst, _ = loaded
    try:
        data = load_solution(args.tree)
    except ParseError as exc:
        _err(str(exc))
        return EXIT_PARSE
    report = verify(inst, [tuple(e) for e in data["edges"]])
    if report.passed:
        print("PASS")
        return EXIT_OK
    print("FAIL: " + "; ".join(report.failures()))
    return EXIT_VERIFY


def cmd_oracle(args) -> int:
    loaded = _load(args.input)
    if isinstance(loaded, int):
        return loaded
    inst, _ = loaded
    if inst.n > ORACLE_MAX_N:
        _err(f"oracle is limited to n <= {ORACLE_MAX_N}, instance has n = {inst.n}")
        return EXIT_SIZE
    try:
        result = enumerate_feasible_trees(inst)
        sol = solve(inst)
    except InfeasibleInstance as exc:
        _err(str(exc))
        return EXIT_INFEASIBLE
    member = "yes" if result.contains(sol.tree.edges) else "no"
    print(f"{len(result.feasible)} feasible / {len(result.non_crossing)} non-crossing / "
          f"solver output member: {member}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ncspan",
        description="Non-crossing spanning trees on red/blue point sets with blue leaves.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="build and verify a tree for an instance file")
    s.add_argument("--input", required=True)
    s.add_argument("--output", required=True)
    s.add_argument("--svg")
    s.add_argument("--max-iters", type=int, default=None,
                   help="swap cap (default 10*n^3)")
    s.add_argument("--uniform-degree", type=int, default=None, metavar="K",
                   help="use degree bound K for every red point")
    s.add_argument("--trace", help="write the swap trace as JSON")
    s.set_defaults(func=cmd_solve)

    g = sub.add_parser("gen", help="print a random instance file")
    g.add_argument("--n-red", type=int, required=True)
    g.add_argument("--n-blue", type=int, required=True)
    g.add_argument("--f-mode", default="equality",
                   help="uniform:K, random:MIN..MAX or equality")
    g.add_argument("--bbox", type=int, default=10000)
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check a solution file against an instance")
    v.add_argument("--input", required=True)
    v.add_argument("--tree", required=True)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive check for n <= 9")
    o.add_argument("--input", required=True)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

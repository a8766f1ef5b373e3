"""Command-line interface: ``python -m oscschubert <verb> ...``.

Exit codes: 0 success, 1 usage error, 2 resource/budget error,
3 structural-law violation (``check``) or a failed self test.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from ..combinat import SchubertProblemSpec, SkewShape, complement, complex_count, predicted_real_counts, sign_imbalance
from ..errors import DegeneracyError, ResourceError
from ..groebner import STRATEGIES, Budgets, check_wronskian_orders, solve_instance
from ..hookfam import is_hook_problem, verify_det_identity
from ..schubert import OsculatingInstance, OsculationType, instance_system, osculation_type
from .runner import ExperimentConfig, read_records, run_experiment
from .structures import check_structures, lower_bound_shape
from .tables import FORMATS, render, tabulate

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_VIOLATION = 0, 1, 2, 3

log = logging.getLogger("oscschubert")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _problem(text: str) -> SchubertProblemSpec:
    try:
        return SchubertProblemSpec.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad problem {text!r}: {exc}") from exc


def _budgets(args) -> Budgets:
    kw = {}
    if getattr(args, "max_seconds", None) is not None:
        kw["max_seconds"] = args.max_seconds
    if getattr(args, "max_pairs", None) is not None:
        kw["max_pairs"] = args.max_pairs
    return Budgets(**kw)


def cmd_predict(args) -> int:
    problem = _problem(args.problem)
    N = complex_count(problem)
    print(f"problem: {problem.to_text()}")
    print(f"complex solutions: {N}")
    types = OsculationType.all_for(problem)
    print(f"osculation types ({len(types)}): " + "  ".join(t.to_text() for t in types))
    shape = lower_bound_shape(problem)
    if shape is not None:
        lam, mu = shape
        sk = SkewShape(complement(lam, problem.k, problem.n), mu)
        try:
            print(f"sign-imbalance lower bound sigma({sk}) = {sign_imbalance(sk)}")
        except ResourceError as exc:
            print(f"sign-imbalance lower bound: skipped ({exc})")
    if is_hook_problem(problem):
        print("hook family: predicted real counts by r_box")
        k, n = problem.k, problem.n
        for r_box in range(n - 1, -1, -2):
            print(f"  r_box={r_box}: {predicted_real_counts(k, n, r_box)}")
    return EXIT_OK


def _parse_points(problem: SchubertProblemSpec, text: str) -> OsculatingInstance:
    pts = [p for p in text.replace(";", ",").split(",") if p.strip()]
    conds = problem.expanded()
    if len(pts) != len(conds):
        raise UsageError(f"need {len(conds)} points (one per condition, in order {[str(c) for c in conds]}), got {len(pts)}")
    try:
        return OsculatingInstance(problem, tuple(zip(conds, pts)))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_solve(args) -> int:
    problem = _problem(args.problem)
    inst = _parse_points(problem, args.points)
    if args.dump_system:
        system = instance_system(inst)
        print(f"# chart {system.chart.descriptor()}")
        print(system.chart.to_ascii())
        for eq in system.equations:
            print(eq.to_text())
    start = time.perf_counter()
    report = solve_instance(inst, seed=args.seed, budgets=_budgets(args), strategy=args.strategy)
    elapsed = time.perf_counter() - start
    out = {
        "problem": problem.to_text(),
        "points": [t.to_text() for _, t in inst.assignment],
        "osculation_type": list(osculation_type(inst).as_tuple()),
        "num_complex": report.num_complex,
        "num_real": report.num_real,
        "expected": report.expected,
        "transversal": report.transversal,
        "reason": report.reason,
        "chart": report.chart_used,
        "randomization": [list(x) for x in report.randomization],
        "eliminant": report.eliminant.to_text(report.variables[-1] if report.variables else "z"),
        "elapsed_s": round(elapsed, 3),
    }
    if args.wronskian:
        chk = check_wronskian_orders(inst, seed=args.seed, budgets=_budgets(args))
        out["wronskian_orders_ok"] = chk.ok
        out["wronskian_orders"] = [list(x) for x in chk.orders]
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        for key, val in out.items():
            print(f"{key}: {val}")
    return EXIT_OK


def _run_config(args) -> ExperimentConfig:
    if args.config:
        cfg = ExperimentConfig.from_file(args.config)
        for name in ("output", "workers", "timing"):
            val = getattr(args, name)
            if val is not None:
                setattr(cfg, "output_path" if name == "output" else name, val)
        return cfg
    if not args.problem or not args.per_type:
        raise UsageError("run needs --config, or --problem and --per-type")
    types = None
    if args.types:
        types = [tuple(int(x) for x in t.split(",")) for t in args.types.split(";")]
    return ExperimentConfig(
        problem=_problem(args.problem),
        instances_per_type=args.per_type,
        master_seed=args.seed,
        point_range=args.range,
        output_path=args.output or "records.jsonl",
        budgets=_budgets(args),
        workers=args.workers or 1,
        timing=args.timing or "off",
        types=types,
    )


def cmd_run(args) -> int:
    try:
        cfg = _run_config(args)
    except (ValueError, TypeError, OSError) as exc:
        raise UsageError(str(exc)) from exc

    def progress(rec):
        if args.verbose:
            print(f"{rec.osculation_type} #{rec.instance_index}: {rec.num_real}/{rec.num_complex} real", file=sys.stderr)

    records = run_experiment(cfg, progress=progress)
    print(render(tabulate(records), "text"), end="")
    return EXIT_OK


def _load(path):
    if not os.path.exists(path):
        raise UsageError(f"no such record log: {path}")
    try:
        return read_records(path)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def cmd_table(args) -> int:
    print(render(tabulate(_load(args.log)), args.format), end="")
    return EXIT_OK


def cmd_check(args) -> int:
    table = tabulate(_load(args.log))
    if table.is_empty:
        raise UsageError(f"{args.log} has no transversal records")
    report = check_structures(table, table.problem)
    print(report.to_text(), end="")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_verify_identity(args) -> int:
    if args.k < 2 or args.n - args.k < 2:
        raise UsageError("need 2 <= k <= n-2")
    start = time.perf_counter()
    ok = verify_det_identity(args.k, args.n, mode=args.mode)
    print(f"det identity ({args.k},{args.n}) [{args.mode}]: {'holds' if ok else 'FAILS'} ({time.perf_counter() - start:.2f}s)")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    return EXIT_OK if run_selftest(full=args.full) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="oscschubert", description="Real solutions to osculating Schubert problems.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("predict", help="complex count, sign-imbalance bound, hook-family predictions")
    s.add_argument("problem", help='e.g. "GR(4,8): 3.3.3, 1^7"')
    s.set_defaults(func=cmd_predict)

    s = sub.add_parser("solve", help="solve one instance from explicit osculation points")
    s.add_argument("problem")
    s.add_argument("--points", required=True, help="comma-separated points, one per condition in order (inf, a/b, a/b+c/d*i)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--strategy", choices=STRATEGIES, default="fglm")
    s.add_argument("--max-seconds", type=float)
    s.add_argument("--max-pairs", type=int)
    s.add_argument("--dump-system", action="store_true", help="print the chart and equations first")
    s.add_argument("--wronskian", action="store_true", help="also verify the Wronskian root orders")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("run", help="run or resume a seeded experiment")
    s.add_argument("--config", help="JSON file with ExperimentConfig fields")
    s.add_argument("--problem")
    s.add_argument("--per-type", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--range", type=int, default=10)
    s.add_argument("--output")
    s.add_argument("--workers", type=int)
    s.add_argument("--timing", choices=("off", "wall"))
    s.add_argument("--types", help='subset of osculation types, e.g. "4;2"')
    s.add_argument("--max-seconds", type=float)
    s.add_argument("--max-pairs", type=int)
    s.set_defaults(func=cmd_run)

    s = sub.add_parser("table", help="render the frequency table of a record log")
    s.add_argument("log")
    s.add_argument("--format", choices=FORMATS, default="text")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("check", help="structure report for a record log")
    s.add_argument("log")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("verify-identity", help="check the hook-family determinant identity")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mode", choices=("auto", "symbolic", "random"), default="auto")
    s.set_defaults(func=cmd_verify_identity)

    s = sub.add_parser("selftest", help="run the built-in invariant suites")
    s.add_argument("--full", action="store_true", help="include the slower solver suites")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors (1) and --help (0)
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"oscschubert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"oscschubert: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except DegeneracyError as exc:
        print(f"oscschubert: degenerate instance: {exc}", file=sys.stderr)
        return EXIT_USAGE

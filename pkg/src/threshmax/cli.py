"""Command-line front end: ``threshmax <command> ...``.

Exit status is 0 on success, 1 for bad arguments or input, 2 when a request
exceeds a capacity limit (oracle size, dense eigensolver size).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from threshmax import harness
from threshmax.graph_core import (
    CapacityError,
    InvalidSequenceError,
    ProblemInstance,
    edge_count,
    parse_sequence,
    to_adjacency,
    to_composition,
)
from threshmax.reference import family_report_csv, oracle_optimum, verify_known_families
from threshmax.spectral import full_spectrum

EXIT_OK, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _solver(text: str) -> str:
    key = text.lower()
    if key in ("bco", "bcoi"):
        return harness.BCO
    if key == "gvns":
        return harness.GVNS
    raise argparse.ArgumentTypeError(f"unknown solver {text!r} (choose gvns or bcoi)")


def _add_run_flags(p: argparse.ArgumentParser, solver_default: str | None = harness.GVNS) -> None:
    p.add_argument("--solver", type=_solver, default=solver_default)
    p.add_argument("--variant", choices=harness.VARIANTS, default=harness.BASELINE)
    p.add_argument("--budget", type=int, default=None, help="evaluations per run (default 1000 baseline, 2000 tuned)")
    p.add_argument("--reps", type=int, default=30)
    p.add_argument("--seed-formula", default=harness.DEFAULT_SEED_FORMULA)
    p.add_argument("--csv", metavar="PATH", help="write per-run records as CSV ('-' for stdout)")
    p.add_argument("--timing", action="store_true", help="fill the wall_ms column (breaks byte-identical output)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="threshmax", description="Spectral radius maximisation over connected threshold graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="repeated seeded runs on one (n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_run_flags(p)

    p = sub.add_parser("sweep", help="solve every m from n-1 to n(n-1)/2")
    p.add_argument("--n", type=int, required=True)
    _add_run_flags(p)

    p = sub.add_parser("enumerate", help="exhaustive optimum for small n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("eval", help="report on one creation sequence")
    p.add_argument("sequence", nargs="+", help='bits, e.g. "1 0 0 1 0 1 0 1" or 10010101')

    p = sub.add_parser("verify-families", help="check known extremal families against the oracle")
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--csv", metavar="PATH", help="write the report here instead of stdout")

    p = sub.add_parser("table", help="result table for a preset instance list or saved CSV")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=sorted(harness.PRESETS))
    src.add_argument("--from-csv", metavar="PATH")
    p.add_argument("--solver", type=_solver, default=None, help="restrict to one solver (default both)")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--reps", type=int, default=30)
    p.add_argument("--seed-formula", default=harness.DEFAULT_SEED_FORMULA)
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--timing", action="store_true")
    return parser


def _instance(n: int, m: int) -> ProblemInstance:
    try:
        return ProblemInstance(n, m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _check_run_flags(args: argparse.Namespace) -> None:
    if args.reps < 1:
        raise UsageError("--reps must be >= 1")
    if args.budget is not None and args.budget < 1:
        raise UsageError("--budget must be >= 1")
    try:
        harness.seed_for(args.seed_formula, 2, 1, 1)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit_csv(path: str | None, text: str, out) -> None:
    if path is None:
        return
    if path == "-":
        out.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _fmt(values: np.ndarray) -> str:
    # avoid printing "-0.000000" for round-off zeros
    return " ".join(f"{v if abs(v) >= 5e-7 else 0.0:.6f}" for v in values)


def _cmd_solve(args, out) -> None:
    _check_run_flags(args)
    spec = harness.ExperimentSpec(
        _instance(args.n, args.m), args.solver, args.variant, args.reps, args.budget, args.seed_formula
    )
    row, records = harness.run_experiment(spec, timing=args.timing)
    _emit_csv(args.csv, harness.records_to_csv(records), out)
    if args.csv == "-":
        return
    out.write(harness.render_table([row]))
    out.write(f"best sequence: {row.best_sequence}\n")
    out.write(f"composition:   {to_composition(row.best_sequence)}\n")
    if row.spectrum is not None:
        out.write(f"spectrum:      {_fmt(row.spectrum)}\n")


def _cmd_sweep(args, out) -> None:
    _check_run_flags(args)
    if args.n < 2:
        raise UsageError("--n must be >= 2")
    rows, records = harness.sweep(
        args.n, args.solver, args.variant, args.reps, args.budget, args.seed_formula, timing=args.timing
    )
    _emit_csv(args.csv, harness.records_to_csv(records), out)
    if args.csv != "-":
        out.write(harness.render_table(rows))


def _cmd_enumerate(args, out) -> None:
    res = oracle_optimum(_instance(args.n, args.m))
    out.write(f"n={args.n} m={args.m} feasible={res.feasible_count}\n")
    out.write(f"optimum: {res.optimum_value:.6f}\n")
    for s in res.argmax_sequences:
        out.write(f"argmax:  {s}  {to_composition(s)}\n")


def _cmd_eval(args, out) -> None:
    try:
        seq = parse_sequence(" ".join(args.sequence))
    except InvalidSequenceError as exc:
        raise UsageError(str(exc)) from exc
    adj = to_adjacency(seq)
    spec = full_spectrum(adj)
    out.write(f"n = {seq.n}\nm = {edge_count(seq)}\n")
    out.write("adjacency matrix:\n")
    for row in adj.astype(int):
        out.write(" ".join(str(v) for v in row) + "\n")
    out.write(f"lambda_1 = {spec.lambda_1:.6f}\n")
    out.write(f"spectrum = {_fmt(spec.spectrum)}\n")
    out.write(f"composition = {to_composition(seq)}\n")


def _cmd_verify_families(args, out) -> None:
    if args.n_min < 2 or args.n_max < args.n_min:
        raise UsageError("need 2 <= --n-min <= --n-max")
    rows = verify_known_families(range(args.n_min, args.n_max + 1))
    text = family_report_csv(rows)
    if args.csv:
        Path(args.csv).write_text(text, encoding="utf-8")
        bad = sum(not r.match for r in rows)
        out.write(f"{len(rows)} predictions checked, {bad} mismatches\n")
    else:
        out.write(text)


def _cmd_table(args, out) -> None:
    if args.from_csv:
        try:
            text = Path(args.from_csv).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(str(exc)) from exc
        records = harness.records_from_csv(text)
        if args.solver:
            records = [r for r in records if r.solver == args.solver]
        out.write(harness.render_table(harness.group_records(records)))
        return
    _check_run_flags(args)
    instances, variant = harness.PRESETS[args.preset]
    solvers = [args.solver] if args.solver else list(harness.SOLVERS)
    rows, records = [], []
    for inst in instances:
        for solver in solvers:
            spec = harness.ExperimentSpec(inst, solver, variant, args.reps, args.budget, args.seed_formula)
            row, recs = harness.run_experiment(spec, timing=args.timing)
            rows.append(row)
            records.extend(recs)
    _emit_csv(args.csv, harness.records_to_csv(records), out)
    if args.csv != "-":
        out.write(harness.render_table(rows))


_COMMANDS = {
    "solve": _cmd_solve,
    "sweep": _cmd_sweep,
    "enumerate": _cmd_enumerate,
    "eval": _cmd_eval,
    "verify-families": _cmd_verify_families,
    "table": _cmd_table,
}


def _capacity_cause(exc: BaseException) -> bool:
    while exc is not None:
        if isinstance(exc, CapacityError):
            return True
        exc = exc.__cause__
    return False


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        _COMMANDS[args.command](args, out)
    except (CapacityError, harness.ExperimentError) as exc:
        if not _capacity_cause(exc):
            raise
        print(f"threshmax: capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except UsageError as exc:
        print(f"threshmax: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

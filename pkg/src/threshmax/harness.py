"""Seeded repetition protocol, per-run CSV records and result tables."""

from __future__ import annotations

import ast
import csv
import io
import operator
import time
from collections.abc import Iterable
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from math import ceil

import numpy as np

from threshmax.construct import init2_sol
from threshmax.graph_core import CreationSequence, ProblemInstance, parse_sequence, to_adjacency
from threshmax.objective import TIE_TOL, RunResult
from threshmax.solver_bco import BcoConfig, bco_run
from threshmax.solver_gvns import GvnsConfig, gvns_run
from threshmax.spectral import full_spectrum, objective

GVNS = "gvns"
BCO = "bcoi"
SOLVERS = (GVNS, BCO)
BASELINE = "baseline"
TUNED = "tuned"
VARIANTS = (BASELINE, TUNED)
DEFAULT_BUDGET = {BASELINE: 1000, TUNED: 2000}
DEFAULT_SEED_FORMULA = "n*i+m"

SMALL_INSTANCES = [ProblemInstance(8, m) for m in (12, 15, 19, 21, 23)]
LARGE_INSTANCES = [
    ProblemInstance(n, m)
    for n, m in ((30, 100), (30, 220), (30, 300), (30, 400), (50, 100), (50, 300), (50, 500), (50, 1000))
]
PRESETS = {"small": (SMALL_INSTANCES, BASELINE), "large": (LARGE_INSTANCES, TUNED)}

CSV_FIELDS = ["instance", "solver", "variant", "seed", "best_value", "evaluations_used", "best_sequence", "wall_ms"]


class ExperimentError(RuntimeError):
    pass


_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul}


def seed_for(formula: str, n: int, m: int, i: int) -> int:
    """Evaluate an integer expression in ``n``, ``m`` and ``i`` using + - * only."""
    names = {"n": n, "m": m, "i": i}

    def ev(node: ast.AST) -> int:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name) and node.id in names:
            return names[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        raise ValueError(f"unsupported seed formula {formula!r}")

    try:
        tree = ast.parse(formula, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"unsupported seed formula {formula!r}") from exc
    return ev(tree)


def round2(x: float) -> str:
    """Two decimals, halves rounded up, for presentation only."""
    return str(Decimal(repr(float(x))).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class ExperimentSpec:
    instance: ProblemInstance
    solver: str = GVNS
    variant: str = BASELINE
    repetitions: int = 30
    budget: int | None = None
    seed_formula: str = DEFAULT_SEED_FORMULA

    def __post_init__(self) -> None:
        if self.solver not in SOLVERS:
            raise ValueError(f"unknown solver {self.solver!r}")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")

    @property
    def effective_budget(self) -> int:
        return self.budget if self.budget is not None else DEFAULT_BUDGET[self.variant]

    def seed(self, i: int) -> int:
        return seed_for(self.seed_formula, self.instance.n, self.instance.m, i)


@dataclass(frozen=True)
class RunRecord:
    instance: ProblemInstance
    solver: str
    variant: str
    seed: int
    best_value: float
    evaluations_used: int
    best_sequence: CreationSequence
    wall_ms: float | None = None


@dataclass(frozen=True)
class ExperimentRow:
    instance: ProblemInstance
    solver: str
    variant: str
    initial_value: float
    n_bests: int
    best_value: float
    avg_value: float
    best_sequence: CreationSequence
    spectrum: np.ndarray | None
    repetitions: int


def single_run(inst: ProblemInstance, solver: str, variant: str, seed: int, budget: int) -> RunResult:
    if solver == GVNS:
        make = GvnsConfig.tuned if variant == TUNED else GvnsConfig.baseline
        return gvns_run(inst, make(inst.n, seed, budget=budget))
    make = BcoConfig.tuned if variant == TUNED else BcoConfig.baseline
    return bco_run(inst, make(inst.n, seed, budget=budget))


def aggregate(records: list[RunRecord], with_spectrum: bool = True) -> ExperimentRow:
    first = records[0]
    values = [r.best_value for r in records]
    best = max(values)
    best_seq = next(r.best_sequence for r in records if r.best_value == best)
    spectrum = None
    if with_spectrum:
        spectrum = full_spectrum(to_adjacency(best_seq)).spectrum
    return ExperimentRow(
        instance=first.instance,
        solver=first.solver,
        variant=first.variant,
        initial_value=objective(init2_sol(first.instance)),
        n_bests=sum(v >= best - TIE_TOL for v in values),
        best_value=best,
        avg_value=float(np.mean(values)),
        best_sequence=best_seq,
        spectrum=spectrum,
        repetitions=len(records),
    )


def run_experiment(spec: ExperimentSpec, timing: bool = False) -> tuple[ExperimentRow, list[RunRecord]]:
    """All repetitions of one (instance, solver, variant); repetition i uses seed formula(n, m, i)."""
    inst = spec.instance
    records = []
    for i in range(1, spec.repetitions + 1):
        seed = spec.seed(i)
        start = time.perf_counter()
        try:
            res = single_run(inst, spec.solver, spec.variant, seed, spec.effective_budget)
        except Exception as exc:
            raise ExperimentError(
                f"{spec.solver} failed on n={inst.n}, m={inst.m}, repetition {i}: {exc}"
            ) from exc
        wall = (time.perf_counter() - start) * 1000.0 if timing else None
        records.append(
            RunRecord(inst, spec.solver, spec.variant, seed, res.best_value, res.evaluations_used, res.best_sequence, wall)
        )
    return aggregate(records, with_spectrum=inst.n <= 512), records


def sweep(
    n: int,
    solver: str,
    variant: str,
    repetitions: int = 30,
    budget: int | None = None,
    seed_formula: str = DEFAULT_SEED_FORMULA,
    timing: bool = False,
) -> tuple[list[ExperimentRow], list[RunRecord]]:
    """One experiment per edge count m = n-1 .. n(n-1)/2."""
    rows, records = [], []
    for m in range(n - 1, n * (n - 1) // 2 + 1):
        spec = ExperimentSpec(ProblemInstance(n, m), solver, variant, repetitions, budget, seed_formula)
        row, recs = run_experiment(spec, timing=timing)
        rows.append(row)
        records.extend(recs)
    return rows, records


def records_to_csv(records: Iterable[RunRecord]) -> str:
    records = sorted(records, key=lambda r: (r.instance.n, r.instance.m, r.solver, r.variant, r.seed))
    buf = io.StringIO()
    # text fields are quoted, numbers are not; floats use repr so values round-trip exactly
    w = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_NONNUMERIC)
    w.writerow(CSV_FIELDS)
    for r in records:
        w.writerow([
            f"G_{r.instance.n}_{r.instance.m}",
            r.solver,
            r.variant,
            r.seed,
            float(r.best_value),
            r.evaluations_used,
            str(r.best_sequence),
            "" if r.wall_ms is None else round(r.wall_ms, 1),
        ])
    return buf.getvalue()


def records_from_csv(text: str) -> list[RunRecord]:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        _, n, m = row["instance"].split("_")
        out.append(
            RunRecord(
                instance=ProblemInstance(int(n), int(m)),
                solver=row["solver"],
                variant=row["variant"],
                seed=int(row["seed"]),
                best_value=float(row["best_value"]),
                evaluations_used=int(row["evaluations_used"]),
                best_sequence=parse_sequence(row["best_sequence"]),
                wall_ms=float(row["wall_ms"]) if row.get("wall_ms") else None,
            )
        )
    return out


def group_records(records: Iterable[RunRecord]) -> list[ExperimentRow]:
    groups: dict[tuple, list[RunRecord]] = {}
    for r in records:
        groups.setdefault((r.instance.n, r.instance.m, r.solver, r.variant), []).append(r)
    return [aggregate(groups[k], with_spectrum=False) for k in sorted(groups)]


def render_table(rows: list[ExperimentRow]) -> str:
    """Instances down, and for each solver present: #bests, best, average."""
    solvers = [s for s in SOLVERS if any(r.solver == s for r in rows)]
    by_key = {(r.instance, r.solver): r for r in rows}
    instances = sorted({r.instance for r in rows}, key=lambda i: (i.n, i.m))
    header = ["Graph", "Init.sol"]
    for s in solvers:
        label = "BCOi" if s == BCO else "GVNS"
        header += [f"{label} #bests", f"{label} best", f"{label} avg"]
    lines = [header]
    for inst in instances:
        present = [by_key[(inst, s)] for s in solvers if (inst, s) in by_key]
        line = [str(inst), round2(present[0].initial_value)]
        for s in solvers:
            r = by_key.get((inst, s))
            line += ["-", "-", "-"] if r is None else [str(r.n_bests), round2(r.best_value), round2(r.avg_value)]
        lines.append(line)
    widths = [max(len(row[c]) for row in lines) for c in range(len(header))]
    text = []
    for k, row in enumerate(lines):
        text.append("  ".join(cell.rjust(w) if c else cell.ljust(w) for c, (cell, w) in enumerate(zip(row, widths))))
        if k == 0:
            text.append("  ".join("-" * w for w in widths))
    return "\n".join(text) + "\n"


def front_loaded(seq: CreationSequence, slack: float = 1.2, allowed_outside: int = 2) -> bool:
    """True if the 1s among positions 2..n sit near the front.

    With ``k`` such 1s, all but ``allowed_outside`` of them must fall within
    the first ``ceil(slack * k)`` of those positions.
    """
    tail = seq.bits[1:]
    ones = sum(tail)
    window = ceil(ones * slack)
    return ones - sum(tail[:window]) <= allowed_outside

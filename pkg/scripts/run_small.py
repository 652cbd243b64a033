"""Small-instance experiment: both solvers, baseline settings, n = 8.

Writes per-run records to results/small.csv and prints the aggregated table.
"""

import argparse
from pathlib import Path

from threshmax import harness


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--reps", type=int, default=30)
    ap.add_argument("--out", type=Path, default=Path("results/small.csv"))
    args = ap.parse_args()

    instances, variant = harness.PRESETS["small"]
    rows, records = [], []
    for inst in instances:
        for solver in harness.SOLVERS:
            row, recs = harness.run_experiment(harness.ExperimentSpec(inst, solver, variant, args.reps))
            rows.append(row)
            records.extend(recs)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(harness.records_to_csv(records), encoding="utf-8")
    print(harness.render_table(rows))
    for row in rows:
        if row.solver == harness.GVNS:
            print(f"{row.instance}: {row.best_sequence}")


if __name__ == "__main__":
    main()

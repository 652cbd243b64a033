import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from threshmax import harness
from threshmax.cli import main
from threshmax.graph_core import CreationSequence, ProblemInstance
from threshmax.reference import oracle_optimum


def run_cli(*args):
    out = io.StringIO()
    code = main(list(args), out=out)
    return code, out.getvalue()


@given(st.integers(2, 100), st.integers(1, 5000), st.integers(1, 30))
def test_default_seed_formula(n, m, i):
    assert harness.seed_for("n*i+m", n, m, i) == n * i + m


@pytest.mark.parametrize("bad", ["__import__('os')", "n/i", "n**2", "x+1", "1 +"])
def test_seed_formula_rejects_anything_else(bad):
    with pytest.raises(ValueError):
        harness.seed_for(bad, 2, 1, 1)


@pytest.mark.parametrize("x, shown", [(5.325, "5.33"), (4.3723, "4.37"), (0.125, "0.13"), (41.865, "41.87")])
def test_round_half_up(x, shown):
    assert harness.round2(x) == shown


def test_experiment_row_aggregates():
    spec = harness.ExperimentSpec(ProblemInstance(8, 19), harness.GVNS, harness.BASELINE, repetitions=4)
    row, records = harness.run_experiment(spec)
    assert [r.seed for r in records] == [8 * i + 19 for i in range(1, 5)]
    assert row.n_bests == 4 and row.best_value == pytest.approx(5.3296653559)
    assert min(r.best_value for r in records) <= row.avg_value <= row.best_value
    assert row.spectrum is not None and len(row.spectrum) == 8


def test_csv_round_trip():
    spec = harness.ExperimentSpec(ProblemInstance(8, 12), harness.BCO, harness.TUNED, repetitions=3, budget=200)
    _, records = harness.run_experiment(spec)
    text = harness.records_to_csv(records)
    assert text.splitlines()[0] == ",".join(f'"{f}"' for f in harness.CSV_FIELDS)
    assert '"1 0 1 1 0 0 0 1"' in text
    back = harness.records_from_csv(text)
    assert back == records


def test_sweep_n5_matches_oracle():
    rows, _ = harness.sweep(5, harness.GVNS, harness.BASELINE, repetitions=2)
    assert [r.instance.m for r in rows] == list(range(4, 11))
    for r in rows:
        assert r.best_value == pytest.approx(oracle_optimum(r.instance).optimum_value, abs=1e-9)


def test_sweep_k2():
    rows, _ = harness.sweep(2, harness.BCO, harness.BASELINE, repetitions=1, budget=5)
    assert len(rows) == 1 and rows[0].best_value == pytest.approx(1.0)


def test_errors_name_the_failing_run(monkeypatch):
    def boom(*args):
        raise RuntimeError("solver exploded")

    monkeypatch.setattr(harness, "single_run", boom)
    with pytest.raises(harness.ExperimentError, match=r"n=8, m=15, repetition 1"):
        harness.run_experiment(harness.ExperimentSpec(ProblemInstance(8, 15)))


def test_front_loaded():
    assert harness.front_loaded(CreationSequence((1, 1, 1, 1, 0, 0, 0, 1)))
    assert not harness.front_loaded(CreationSequence((1, 0, 0, 0, 0, 0, 1, 1, 1, 1)))


def test_table_layout():
    spec = harness.ExperimentSpec(ProblemInstance(8, 15), repetitions=2)
    row, _ = harness.run_experiment(spec)
    lines = harness.render_table([row]).splitlines()
    assert lines[0].split()[:2] == ["Graph", "Init.sol"]
    assert lines[2].split() == ["G_8,15", "4.37", "2", "4.52", "4.52"]


def test_cli_eval_report():
    code, out = run_cli("eval", "1 0 0 1 0 1 0 1")
    assert code == 0
    assert "n = 8" in out and "m = 15" in out
    assert "lambda_1 = 4.425522" in out
    assert "composition = G_(3,1,1,1,1,1)" in out
    assert "0 0 0 1 0 1 0 1" in out


def test_cli_eval_k2():
    code, out = run_cli("eval", "1 1")
    assert code == 0 and "spectrum = 1.000000 -1.000000" in out


@pytest.mark.parametrize(
    "args",
    [
        ("eval", "1 0 0 0 0 0 0 0"),
        ("eval", "1 2 1"),
        ("solve", "--n", "8", "--m", "99"),
        ("solve", "--n", "8", "--m", "15", "--reps", "0"),
        ("solve", "--n", "8", "--m", "15", "--seed-formula", "n/i"),
        ("table", "--from-csv", "/nonexistent/file.csv"),
    ],
)
def test_cli_input_errors_exit_1(args):
    assert run_cli(*args)[0] == 1


@pytest.mark.parametrize("args", [("solve",), ("solve", "--n", "8", "--m", "15", "--solver", "ga"), ("bogus",)])
def test_cli_argument_errors_exit_1(args):
    with pytest.raises(SystemExit) as exc:
        main(list(args))
    assert exc.value.code == 1


def test_cli_capacity_error_exit_2():
    assert run_cli("enumerate", "--n", "30", "--m", "100")[0] == 2


def test_cli_enumerate():
    code, out = run_cli("enumerate", "--n", "8", "--m", "19")
    assert code == 0 and "1 1 1 0 1 1 0 1" in out and "feasible=5" in out


def test_cli_solve_csv_and_table_from_csv(tmp_path):
    path = tmp_path / "runs.csv"
    code, out = run_cli("solve", "--n", "8", "--m", "21", "--solver", "bcoi", "--reps", "3", "--csv", str(path))
    assert code == 0 and "G_8,21" in out
    code, out = run_cli("table", "--from-csv", str(path))
    assert code == 0 and out.splitlines()[2].split()[2:5] == ["3", "5.77", "5.77"]


def test_cli_verify_families(tmp_path):
    code, out = run_cli("verify-families", "--n-min", "6", "--n-max", "7")
    assert code == 0 and out.startswith("n,m,family")

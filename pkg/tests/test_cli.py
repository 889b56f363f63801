import json

import pytest

from heatnorm import cli
from heatnorm.curve import exact_m
from heatnorm.extremizer import floor_lambda
from heatnorm.specfun import exp_integral_e1


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def strip_duration(text):
    return "\n".join(
        line for line in text.splitlines() if "duration_s" not in line
    )


def test_sweep_csv(capsys):
    code, out = run_cli(capsys, "sweep", "--points", "50")
    assert code == 0
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert lines[0] == "t,exact_m,envelope_ub,floor_lb,dyadic_ub,n_star,normalized_exact"
    assert len(lines) == 51
    first = lines[1].split(",")
    assert float(first[0]) == pytest.approx(1e-9)
    # numeric columns round-trip and agree with the library
    assert float(first[1]) == exact_m(float(first[0]))
    # large-t rows have an empty floor column
    last = lines[-1].split(",")
    assert last[3] == ""


def test_sweep_rejects_bad_domain(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["sweep", "--t-min", "-1"])
    assert excinfo.value.code == 2


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["does-not-exist"])
    assert excinfo.value.code == 2


def test_e1_json(capsys):
    code, out = run_cli(capsys, "e1", "--x", "1.0")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["x"] == 1.0
    assert doc["result"]["e1"] == exp_integral_e1(1.0)
    assert doc["manifest"]["subcommand"] == "e1"


def test_e1_rejects_nonpositive(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["e1", "--x", "0.0"])
    assert excinfo.value.code == 2


def test_extremizer_default_lambda(capsys):
    code, out = run_cli(capsys, "extremizer", "--t", "0.01")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["lambda"] == pytest.approx(floor_lambda(0.01), rel=1e-15)
    assert doc["result"]["is_optimized"] is False


def test_extremizer_optimize_beats_default(capsys):
    _, out_default = run_cli(capsys, "extremizer", "--t", "0.01")
    _, out_opt = run_cli(capsys, "extremizer", "--t", "0.01", "--optimize")
    base = json.loads(out_default)["result"]["ratio"]
    best = json.loads(out_opt)["result"]["ratio"]
    assert best >= base


def test_extremizer_needs_lambda_for_large_t(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["extremizer", "--t", "2.0"])
    assert excinfo.value.code == 2
    code, _ = run_cli(capsys, "extremizer", "--t", "2.0", "--lambda", "3.0")
    assert code == 0


def test_bound_critical(capsys):
    code, out = run_cli(capsys, "bound", "--critical", "--n", "2", "--q", "2", "--t", "0.5")
    assert code == 0
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert lines[0] == "n,q,s,t,kernel_norm,critical_log_bound"
    row = lines[1].split(",")
    assert float(row[4]) == pytest.approx(exact_m(0.5), rel=1e-10)
    assert float(row[4]) <= float(row[5])


def test_bound_flag_conflicts(capsys):
    with pytest.raises(SystemExit):
        cli.main(["bound", "--critical", "--s", "1.0", "--t", "0.5"])
    with pytest.raises(SystemExit):
        cli.main(["bound", "--critical", "--t", "0.5", "--t-grid", "0.1", "1.0", "5"])
    with pytest.raises(SystemExit):
        cli.main(["bound", "--t", "0.5"])  # missing --s/--critical


def test_bound_t_grid(capsys):
    code, out = run_cli(
        capsys, "bound", "--n", "1", "--q", "2", "--s", "0", "--t-grid", "0.1", "10", "4"
    )
    assert code == 0
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert len(lines) == 5


def test_grid_verify_saturating(capsys):
    code, out = run_cli(
        capsys, "grid-verify", "--profile", "saturating",
        "--n", "256", "--L", "40", "--t", "0.1",
    )
    assert code == 0
    doc = json.loads(out)
    result = doc["result"]
    assert result["margin"] >= 0.0
    assert result["plancherel_err"] <= 1e-12
    assert result["semigroup_err"] <= 1e-12
    assert result["ratio"] <= result["exact_m"] * 1.001


def test_grid_verify_violation_exits_1(capsys):
    # a deliberately coarse grid overshoots the continuum curve beyond the
    # default discretization allowance; the CLI must report it via exit 1
    code = cli.main(
        ["grid-verify", "--profile", "saturating", "--n", "32", "--L", "8", "--t", "0.25"]
    )
    captured = capsys.readouterr()
    assert code == 1
    assert "violation" in captured.err


def test_bg_reports(capsys):
    code, out = run_cli(capsys, "bg", "--trials", "3", "--seed", "5")
    assert code == 0
    doc = json.loads(out)
    reports = doc["result"]
    assert len(reports) == 3
    for r in reports:
        assert r["slack"] > 1.0
        assert r["sup"] <= r["rhs_two_term"]


def test_determinism(capsys):
    _, first = run_cli(capsys, "sweep", "--points", "25")
    _, second = run_cli(capsys, "sweep", "--points", "25")
    assert strip_duration(first) == strip_duration(second)

    _, j1 = run_cli(capsys, "grid-verify", "--profile", "random", "--seed", "3")
    _, j2 = run_cli(capsys, "grid-verify", "--profile", "random", "--seed", "3")
    assert strip_duration(j1) == strip_duration(j2)


def test_out_file(tmp_path, capsys):
    target = tmp_path / "sweep.csv"
    code = cli.main(["sweep", "--points", "10", "--out", str(target)])
    capsys.readouterr()
    assert code == 0
    text = target.read_text()
    assert "t,exact_m" in text


def test_format_override(capsys):
    code, out = run_cli(capsys, "sweep", "--points", "5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["result"]) == 5

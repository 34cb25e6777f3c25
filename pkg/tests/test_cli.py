import json
from pathlib import Path

from cqedkit.cli import main

CONFIG = str(Path(__file__).resolve().parent.parent / "designs" / "qubit_v1.json")


def test_derive_writes_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["derive", "--config", CONFIG, "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["provenance"]["tool"] == "cqedkit"
    assert capsys.readouterr().out == f"report: {out}\n"


def test_derive_missing_config_is_validation_error(tmp_path, capsys):
    code = main(["derive", "--config", str(tmp_path / "nope.json"), "--out", "x.json"])
    assert code == 1


def test_usage_error_maps_to_validation_exit(capsys):
    assert main(["derive", "--config"]) == 1
    assert main(["bogus-command"]) == 1


def test_s21_single_state(tmp_path):
    out = tmp_path / "curve.csv"
    code = main([
        "s21", "--config", CONFIG, "--state", "ground",
        "--span-hz", "2e7", "--points", "101", "--out", str(out),
    ])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "frequency_hz,re_s21,im_s21,abs_s21"
    assert len(lines) == 102


def test_s21_both_states(tmp_path):
    out = tmp_path / "curve.csv"
    code = main([
        "s21", "--config", CONFIG, "--state", "both",
        "--span-hz", "2e7", "--points", "51", "--out", str(out),
    ])
    assert code == 0
    assert (tmp_path / "curve.ground.csv").exists()
    assert (tmp_path / "curve.excited.csv").exists()


def test_sweep_csv(tmp_path):
    out = tmp_path / "sweep.csv"
    code = main([
        "sweep", "--config", CONFIG, "--param", "c_g_farad",
        "--from", "2e-15", "--to", "8e-15", "--steps", "4",
        "--emit", "g_01_hz,chi_total_hz", "--out", str(out),
    ])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "c_g_farad,g_01_hz,chi_total_hz,status,error"
    assert len(lines) == 5
    assert all(line.split(",")[3] == "ok" for line in lines[1:])


def test_sweep_rejects_unknown_quantity(tmp_path):
    code = main([
        "sweep", "--config", CONFIG, "--param", "c_g_farad",
        "--from", "2e-15", "--to", "8e-15", "--steps", "4",
        "--emit", "bogus", "--out", str(tmp_path / "s.csv"),
    ])
    assert code == 1


def test_tune_report(tmp_path):
    out = tmp_path / "tuned.json"
    code = main([
        "tune", "--config", CONFIG, "--vary", "l_j_henry",
        "--target", "f_01_hz=4.55e9", "--bracket", "8e-9,14e-9",
        "--out", str(out),
    ])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["tuned"]["parameter"] == "l_j_henry"
    assert abs(report["tuned"]["parameter_value"] - 11e-9) / 11e-9 < 0.01
    assert report["tuned"]["relative_error"] <= 1e-6


def test_tune_bad_bracket_is_numerical_failure(tmp_path, capsys):
    code = main([
        "tune", "--config", CONFIG, "--vary", "l_j_henry",
        "--target", "f_01_hz=9.9e9", "--bracket", "8e-9,14e-9",
        "--out", str(tmp_path / "t.json"),
    ])
    assert code == 2
    assert "numerical failure" in capsys.readouterr().err


def test_tune_malformed_target(tmp_path):
    code = main([
        "tune", "--config", CONFIG, "--vary", "l_j_henry",
        "--target", "f_01_hz:4.55e9", "--bracket", "8e-9,14e-9",
        "--out", str(tmp_path / "t.json"),
    ])
    assert code == 1


def test_compare_reports_gap_table(capsys):
    code = main(["compare", "--config", CONFIG])
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0].split()[:3] == ["quantity", "analytic", "reference"]
    assert len(lines) == 5
    # the chi gap of the analytic chain sits at 3.1%, not at the recorded
    # 4.9% expectation, so the gate reports failure
    assert "NO" in lines[4]
    assert code == 1

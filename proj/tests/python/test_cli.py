"""End-to-end checks of the command-line tool."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("TAILSPAN_CLI")

pytestmark = pytest.mark.skipif(
    CLI is None, reason="TAILSPAN_CLI not set (run through ctest)"
)


def run(*args, expect_failure=False):
    proc = subprocess.run(
        [CLI, *map(str, args)], capture_output=True, text=True
    )
    if expect_failure:
        assert proc.returncode != 0, proc.stdout
    else:
        assert proc.returncode == 0, proc.stderr
    return proc


@pytest.fixture()
def noise_csv(tmp_path):
    path = tmp_path / "noise.csv"
    run("synth", "--kind", "gaussian_noise", "--n", 200, "--seed", 12,
        "--out", path)
    return path


def test_synth_then_analyze(tmp_path):
    path = tmp_path / "char.csv"
    run("synth", "--kind", "character", "--n", 64, "--frequency", 5,
        "--out", path)
    proc = run("analyze", "--input", path, "--column", "re",
               "--imag-column", "im")
    fields = dict(
        line.split(": ", 1) for line in proc.stdout.strip().splitlines()
    )
    assert fields["n"] == "64"
    assert float(fields["fr"]) == pytest.approx(1.0, abs=1e-6)
    assert fields["regime"] == "strong"


def test_analyze_mean_center_changes_fr(noise_csv):
    plain = run("analyze", "--input", noise_csv, "--column", "re")
    centered = run("analyze", "--input", noise_csv, "--column", "re",
                   "--mean-center")
    assert "mean_centered: true" in centered.stdout
    assert plain.stdout != centered.stdout


def test_sweep_writes_deterministic_reports(noise_csv, tmp_path):
    out_a = tmp_path / "a"
    out_b = tmp_path / "b"
    for out in (out_a, out_b):
        run("sweep", "--input", noise_csv, "--column", "re",
            "--imag-column", "im", "--etas", "1.0,1.3,1.6", "--out", out)

    report = json.loads((out_a / "report.json").read_text())
    assert report["n"] == 200
    assert [row["eta"] for row in report["rows"]] == [1.0, 1.3, 1.6]
    for row in report["rows"]:
        assert row["spanned"] is True
        assert len(row["gamma"]) == row["gamma_size"]
        assert len(row["lambda"]) == row["lambda_size"]

    for name in sorted(p.name for p in out_a.iterdir()):
        assert (out_a / name).read_bytes() == (out_b / name).read_bytes()


def test_sweep_eta_range(noise_csv, tmp_path):
    out = tmp_path / "ranged"
    run("sweep", "--input", noise_csv, "--column", "re",
        "--eta-range", "1.0:1.2:0.1", "--out", out)
    report = json.loads((out / "report.json").read_text())
    assert [row["eta"] for row in report["rows"]] == pytest.approx(
        [1.0, 1.1, 1.2]
    )


def test_span_prints_verified_lambda(noise_csv):
    proc = run("span", "--input", noise_csv, "--column", "re",
               "--eta", "1.4", "--certificates")
    assert "spanned: true" in proc.stdout
    assert "lambda:" in proc.stdout
    assert "(mod 200)" in proc.stdout


def test_oracle_reports_minimal_set(tmp_path):
    path = tmp_path / "sparse.csv"
    run("synth", "--kind", "indicator", "--n", 40, "--subset", "1,2,3",
        "--out", path)
    proc = run("oracle", "--input", path, "--column", "re", "--eta", "1.0")
    fields = dict(
        line.split(": ", 1)
        for line in proc.stdout.strip().splitlines()
        if ": " in line
    )
    assert fields["gamma_size"] == "3"
    assert fields["minimal_lambda_size"] == "2"
    assert int(fields["greedy_lambda_size"]) >= 2


def test_oracle_refuses_oversized_gamma(noise_csv):
    proc = run("oracle", "--input", noise_csv, "--column", "re",
               "--eta", "0.1", "--max-gamma", "5", expect_failure=True)
    assert proc.stderr.startswith("error: ")
    assert len(proc.stderr.strip().splitlines()) == 1


def test_errors_are_single_line(tmp_path):
    missing = tmp_path / "does_not_exist.csv"
    proc = run("analyze", "--input", missing, "--column", "value",
               expect_failure=True)
    assert proc.stderr.startswith("error: ")
    assert len(proc.stderr.strip().splitlines()) == 1

    bad = tmp_path / "bad.csv"
    bad.write_text("value\n1\nnot_a_number\n")
    proc = run("analyze", "--input", bad, "--column", "value",
               expect_failure=True)
    assert ":3:" in proc.stderr

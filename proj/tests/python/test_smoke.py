"""Smoke tests for the python bindings."""

import math

import pytest

import tailspan as ts


def test_fourier_ratio_extremals():
    character = ts.synth_character(64, 5)
    assert ts.fourier_ratio(character) == pytest.approx(1.0, abs=1e-9)

    delta = ts.synth_delta(64, 11)
    assert ts.fourier_ratio(delta) == pytest.approx(8.0, abs=1e-9)


def test_dft_round_trip_and_parseval():
    f = ts.synth_noise(100, seed=7)
    fhat = ts.dft(f)
    assert fhat.norms.l2 == pytest.approx(f.norms.l2, rel=1e-9)
    back = ts.inverse_dft(fhat)
    err = sum(abs(a - b) ** 2 for a, b in zip(back.values, f.values))
    assert math.sqrt(err) <= 1e-10 * f.norms.l2


def test_signal_construction_and_norms():
    f = ts.Signal([3.0, 4.0])
    assert len(f) == 2
    assert f.norms.l1 == pytest.approx(7.0)
    assert f.norms.l2 == pytest.approx(5.0)
    assert ts.Signal([1.0]).norms.lp_log is None
    with pytest.raises(ValueError):
        ts.Signal([])


def test_spectrum_span_and_verify():
    f = ts.synth_indicator(32, [3, 4, 7])
    spectrum = ts.large_spectrum(f, 1.0)
    assert len(spectrum) == 3
    assert set(spectrum.indices) == {3, 4, 7}

    result = ts.greedy_span(spectrum, 32)
    assert result.all_spanned
    assert ts.verify_span(result, spectrum)
    assert set(result.lambda_) <= set(spectrum.indices)

    minimal = ts.minimal_lambda(spectrum, 32, max_size=3)
    assert minimal is not None
    assert len(minimal) <= len(result.lambda_)


def test_mean_center_and_regime():
    f = ts.Signal([float(v) for v in range(1, 527)])
    centered = ts.mean_center(f)
    mean = sum(z.real for z in centered.values) / len(centered)
    assert abs(mean) <= 1e-9

    report = ts.bound_report(f, 1.04)
    assert report.n == 526
    assert report.strong_regime == ts.regime_check(report.fr, 526)


def test_bound_values():
    assert ts.bound_simple_over_c(526, 1.4136, 1.04) == pytest.approx(
        10.30, abs=0.02
    )
    assert ts.regime_check(1.4136, 526)
    assert not ts.regime_check(10.7853, 526)
    assert ts.regime_check(12.6834, 1576)


def test_sweep_and_reports(tmp_path):
    f = ts.synth_sparse_fourier(128, [3, 17, 40], [3.0, 2.0, 1.0])
    report = ts.sweep_signal(f, "pybind", [1.0, 1.5], mean_centered=False)
    assert report.n == 128
    assert [row.eta for row in report.rows] == [1.0, 1.5]
    assert all(row.spanned for row in report.rows)
    assert report.rows[1].gamma_size <= report.rows[0].gamma_size

    out = tmp_path / "report"
    written = ts.write_reports(report, f, out)
    names = {p.name for p in written}
    assert {"report.json", "report.md", "series.svg", "series.csv"} <= names

    md = ts.report_markdown(report)
    assert "| eta |" in md


def test_load_series(tmp_path):
    path = tmp_path / "mini.csv"
    path.write_text("label,value\nx,1.5\ny,2.5\n")
    cfg = ts.SeriesFile(str(path), "value", label_column="label")
    signal, labels = ts.load_series(cfg)
    assert len(signal) == 2
    assert labels == ["x", "y"]
    assert signal[1].real == 2.5


def test_zero_signal_raises():
    zeros = ts.Signal([0.0, 0.0, 0.0])
    with pytest.raises(Exception):
        ts.fourier_ratio(zeros)

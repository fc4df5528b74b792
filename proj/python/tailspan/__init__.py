"""Additive structure of the large values of a time series.

Thin wrapper over the compiled extension: unitary DFT on Z_N, Fourier
ratio, large-spectrum extraction, greedy {-1,0,1} spanning sets with
certificates, an exhaustive minimal-set oracle, and Chang-type bound
reports.
"""

from tailspan._core import (  # noqa: F401
    BoundReport,
    NormSet,
    ReachSet,
    SeriesFile,
    Signal,
    SpanResult,
    Spectrum,
    SpectrumEntry,
    SweepReport,
    SweepRow,
    bound_general_over_cprime,
    bound_report,
    bound_simple_over_c,
    dft,
    fourier_ratio,
    greedy_span,
    inverse_dft,
    large_spectrum,
    load_series,
    lp_log_exponent,
    mean_center,
    minimal_lambda,
    norms,
    prepare_signal,
    regime_check,
    report_json,
    report_markdown,
    run_sweep,
    sweep_signal,
    synth_character,
    synth_delta,
    synth_indicator,
    synth_noise,
    synth_sparse_fourier,
    verify_span,
    write_reports,
)

__version__ = "0.1.0"

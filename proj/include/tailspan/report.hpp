#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tailspan/bounds.hpp"
#include "tailspan/ingest.hpp"
#include "tailspan/signal.hpp"

namespace tailspan {

struct AnalyzeResult {
    std::string dataset;
    std::size_t n = 0;
    bool mean_centered = false;
    double fr = 0.0;
    double sqrt_n_over_e = 0.0;
    bool strong_regime = false;
    NormSet signal_norms;
    NormSet spectrum_norms;  // norms of dft(f)
};

struct SweepRow {
    double eta = 0.0;
    std::size_t gamma_size = 0;
    std::size_t lambda_size = 0;
    bool spanned = false;  // independent verification result
    std::optional<double> bound_simple_over_c;
    double bound_general_over_cprime = 0.0;
    std::vector<std::size_t> lambda;  // greedy insertion order
    std::vector<std::size_t> gamma;   // decreasing-magnitude order
};

/// One row per eta, ascending; gamma_size is non-increasing down the
/// rows (nestedness of the large spectrum).
struct SweepReport {
    std::string dataset;
    std::size_t n = 0;
    double fr = 0.0;
    bool mean_centered = false;
    std::vector<SweepRow> rows;
};

struct FigureData {
    enum class Kind { series_plot, gamma_dots };
    Kind kind = Kind::series_plot;
    std::string title;
    double eta = 0.0;                        // gamma_dots only
    std::vector<double> x;                   // index axis
    std::vector<double> y;                   // plotted value per index
    std::vector<std::size_t> highlighted;    // indices in gamma
    std::vector<std::string> labels;         // optional row labels
};

/// The signal a flagged run actually analyzes: mean-centered when the
/// flag is set, the input unchanged otherwise.
Signal prepare_signal(const Signal& raw, bool mean_center_flag);

/// FR, regime and norms for a loaded (optionally mean-centered) signal.
AnalyzeResult run_analyze(const SeriesFile& input, bool mean_center_flag);

/// Signal-level variant. `f` is analyzed as given; `mean_centered` is
/// recorded as report metadata (apply prepare_signal first if needed).
AnalyzeResult analyze_signal(const Signal& f, const std::string& dataset,
                             bool mean_centered);

/// Full eta sweep: for each eta (sorted ascending, duplicates dropped)
/// run large_spectrum -> greedy_span -> verify_span -> bounds. Any
/// sub-operation failure aborts with the offending eta in the message.
SweepReport run_sweep(const SeriesFile& input, std::vector<double> etas,
                      bool mean_center_flag);

/// Signal-level variant; see analyze_signal for the flag convention.
SweepReport sweep_signal(const Signal& f, const std::string& dataset,
                         std::vector<double> etas, bool mean_centered);

/// The plotted value per index: real part for real signals, modulus
/// otherwise (thresholding acts on |f| either way).
std::vector<double> plot_values(const Signal& f);

/// Figure set for a sweep: one series plot plus one gamma-dot panel per
/// eta row, each with the raw plotted points.
std::vector<FigureData> build_figures(const SweepReport& report,
                                      const Signal& signal,
                                      const std::vector<std::string>& labels = {});

/// Structured report with the stable field names (eta, gamma_size,
/// lambda_size, spanned, bound_simple_over_c, bound_general_over_cprime,
/// lambda, gamma).
std::string report_json(const SweepReport& report);

/// Human-readable markdown table mirroring the report.
std::string report_markdown(const SweepReport& report);

/// Write report.json, report.md, one SVG per figure and a delimited
/// sidecar of every plotted point next to each SVG. Byte-deterministic
/// for identical inputs. Returns the written paths.
std::vector<std::filesystem::path> write_reports(
    const SweepReport& report, const Signal& signal,
    const std::filesystem::path& out_dir,
    const std::vector<std::string>& labels = {});

/// "1.04"-style canonical eta key used in file names and tables.
std::string format_eta(double eta);

/// Expand "lo:hi:step" into an explicit eta list (inclusive of hi up to
/// a half-step tolerance).
std::vector<double> expand_eta_range(const std::string& range);

}  // namespace tailspan

#include "tailspan/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "tailspan/spanner.hpp"
#include "tailspan/spectrum.hpp"
#include "tailspan/svg.hpp"

namespace tailspan {

namespace {

std::string dataset_label(const SeriesFile& input) {
    return std::filesystem::path(input.path).stem().string();
}

// Shortest round-trip decimal form, deterministic.
std::string full_precision(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
}

std::string join_sizes(const std::vector<std::size_t>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(values[i]);
    }
    out += "}";
    return out;
}

}  // namespace

Signal prepare_signal(const Signal& raw, bool mean_center_flag) {
    return mean_center_flag ? mean_center(raw) : raw;
}

AnalyzeResult analyze_signal(const Signal& f, const std::string& dataset,
                             bool mean_centered) {
    if (f.is_zero()) {
        throw std::domain_error(
            "analyze: signal is identically zero" +
            std::string(mean_centered ? " after mean-centering" : ""));
    }
    AnalyzeResult result;
    result.dataset = dataset;
    result.n = f.size();
    result.mean_centered = mean_centered;
    result.signal_norms = f.norms();
    result.spectrum_norms = dft(f).norms();
    result.fr = result.spectrum_norms.l1 / result.spectrum_norms.l2;
    result.sqrt_n_over_e =
        std::sqrt(static_cast<double>(f.size())) / std::numbers::e;
    result.strong_regime = regime_check(result.fr, f.size());
    return result;
}

AnalyzeResult run_analyze(const SeriesFile& input, bool mean_center_flag) {
    const LoadResult loaded = load_series(input);
    return analyze_signal(prepare_signal(loaded.signal, mean_center_flag),
                          dataset_label(input), mean_center_flag);
}

SweepReport sweep_signal(const Signal& f, const std::string& dataset,
                         std::vector<double> etas, bool mean_centered) {
    if (etas.empty()) {
        throw std::invalid_argument("sweep: eta list must be non-empty");
    }
    for (double eta : etas) {
        if (!(eta > 0.0)) {
            throw std::invalid_argument("sweep: eta " + format_eta(eta) +
                                        " is not positive");
        }
    }
    std::sort(etas.begin(), etas.end());
    etas.erase(std::unique(etas.begin(), etas.end()), etas.end());

    if (f.is_zero()) {
        throw std::domain_error(
            "sweep: signal is identically zero" +
            std::string(mean_centered ? " after mean-centering" : ""));
    }
    const NormSet fhat_norms = dft(f).norms();

    SweepReport report;
    report.dataset = dataset;
    report.n = f.size();
    report.fr = fhat_norms.l1 / fhat_norms.l2;
    report.mean_centered = mean_centered;
    report.rows.reserve(etas.size());
    for (double eta : etas) {
        try {
            const Spectrum spec = large_spectrum(f, eta);
            const SpanResult span = greedy_span(spec, f.size());
            const bool spanned = verify_span(span, spec);
            const BoundReport bounds =
                make_bound_report(f.size(), fhat_norms, eta);
            SweepRow row;
            row.eta = eta;
            row.gamma_size = spec.size();
            row.lambda_size = span.lambda.size();
            row.spanned = spanned;
            row.bound_simple_over_c = bounds.bound_simple_over_c;
            row.bound_general_over_cprime = bounds.bound_general_over_cprime;
            row.lambda = span.lambda;
            row.gamma = spec.indices();
            report.rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            throw std::runtime_error("sweep: eta " + format_eta(eta) + ": " +
                                     e.what());
        }
    }
    return report;
}

SweepReport run_sweep(const SeriesFile& input, std::vector<double> etas,
                      bool mean_center_flag) {
    const LoadResult loaded = load_series(input);
    return sweep_signal(prepare_signal(loaded.signal, mean_center_flag),
                        dataset_label(input), std::move(etas),
                        mean_center_flag);
}

std::vector<double> plot_values(const Signal& f) {
    bool real_valued = true;
    for (const Complex& z : f.values()) {
        if (z.imag() != 0.0) {
            real_valued = false;
            break;
        }
    }
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = real_valued ? f[i].real() : std::abs(f[i]);
    }
    return out;
}

std::vector<FigureData> build_figures(const SweepReport& report,
                                      const Signal& signal,
                                      const std::vector<std::string>& labels) {
    if (signal.size() != report.n) {
        throw std::invalid_argument(
            "build_figures: report and signal have different lengths");
    }
    std::vector<double> x(signal.size());
    for (std::size_t i = 0; i < signal.size(); ++i) {
        x[i] = static_cast<double>(i);
    }
    const std::vector<double> y = plot_values(signal);

    std::vector<FigureData> figures;
    FigureData series;
    series.kind = FigureData::Kind::series_plot;
    series.title = report.dataset + " (n=" + std::to_string(report.n) + ")";
    series.x = x;
    series.y = y;
    series.labels = labels;
    figures.push_back(std::move(series));

    for (const SweepRow& row : report.rows) {
        FigureData panel;
        panel.kind = FigureData::Kind::gamma_dots;
        panel.eta = row.eta;
        panel.title = report.dataset + ": large spectrum at eta=" +
                      format_eta(row.eta) + " (" +
                      std::to_string(row.gamma_size) + " points)";
        panel.x = x;
        panel.y = y;
        panel.highlighted = row.gamma;
        panel.labels = labels;
        for (std::size_t idx : panel.highlighted) {
            if (idx >= report.n) {
                throw std::invalid_argument(
                    "build_figures: highlighted index out of range");
            }
        }
        figures.push_back(std::move(panel));
    }
    return figures;
}

std::string report_json(const SweepReport& report) {
    nlohmann::json doc;
    doc["dataset"] = report.dataset;
    doc["n"] = report.n;
    doc["fr"] = report.fr;
    doc["mean_centered"] = report.mean_centered;
    doc["rows"] = nlohmann::json::array();
    for (const SweepRow& row : report.rows) {
        nlohmann::json r;
        r["eta"] = row.eta;
        r["gamma_size"] = row.gamma_size;
        r["lambda_size"] = row.lambda_size;
        r["spanned"] = row.spanned;
        if (row.bound_simple_over_c.has_value()) {
            r["bound_simple_over_c"] = *row.bound_simple_over_c;
        } else {
            r["bound_simple_over_c"] = nullptr;
        }
        r["bound_general_over_cprime"] = row.bound_general_over_cprime;
        r["lambda"] = row.lambda;
        r["gamma"] = row.gamma;
        doc["rows"].push_back(std::move(r));
    }
    return doc.dump(2) + "\n";
}

std::string report_markdown(const SweepReport& report) {
    std::string md;
    md += "# Sweep report: " + report.dataset + "\n\n";
    md += "- n: " + std::to_string(report.n) + "\n";
    md += "- fr: " + fixed4(report.fr) + "\n";
    md += "- mean_centered: " +
          std::string(report.mean_centered ? "true" : "false") + "\n";
    const double gate = std::sqrt(static_cast<double>(report.n)) /
                        std::numbers::e;
    md += "- regime: " +
          std::string(regime_check(report.fr, report.n) ? "strong" : "weak") +
          " (sqrt(n)/e = " + fixed4(gate) + ")\n\n";
    md += "| eta | gamma_size | lambda_size | spanned | bound_simple_over_c "
          "| bound_general_over_cprime | lambda |\n";
    md += "|----:|-----------:|------------:|:-------:|--------------------:"
          "|--------------------------:|:-------|\n";
    for (const SweepRow& row : report.rows) {
        md += "| " + format_eta(row.eta);
        md += " | " + std::to_string(row.gamma_size);
        md += " | " + std::to_string(row.lambda_size);
        md += " | " + std::string(row.spanned ? "yes" : "no");
        md += " | " + (row.bound_simple_over_c.has_value()
                           ? fixed4(*row.bound_simple_over_c)
                           : std::string("-"));
        md += " | " + fixed4(row.bound_general_over_cprime);
        md += " | " + join_sizes(row.lambda);
        md += " |\n";
    }
    return md;
}

std::vector<std::filesystem::path> write_reports(
    const SweepReport& report, const Signal& signal,
    const std::filesystem::path& out_dir,
    const std::vector<std::string>& labels) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;

    const auto emit = [&](const std::filesystem::path& name,
                          const std::string& content) {
        const std::filesystem::path path = out_dir / name;
        write_text_file(path, content);
        written.push_back(path);
    };

    emit("report.json", report_json(report));
    emit("report.md", report_markdown(report));

    const std::vector<FigureData> figures =
        build_figures(report, signal, labels);
    std::set<std::string> used_stems;
    for (const FigureData& fig : figures) {
        const bool is_series = fig.kind == FigureData::Kind::series_plot;
        std::string stem =
            is_series ? "series" : "gamma_" + format_eta(fig.eta);
        // distinct etas can collide under %g formatting; disambiguate
        for (int suffix = 2; !used_stems.insert(stem).second; ++suffix) {
            stem = "gamma_" + format_eta(fig.eta) + "_" +
                   std::to_string(suffix);
        }

        svg::ChartSpec chart;
        chart.title = fig.title;
        chart.x = fig.x;
        chart.y = fig.y;
        chart.highlighted = fig.highlighted;
        emit(stem + ".svg", svg::render_chart(chart));

        // Sidecar with every plotted point, so figures are checkable
        // without image diffing.
        std::string csv = fig.labels.empty() ? "index,value"
                                             : "index,label,value";
        csv += is_series ? "\n" : ",in_gamma\n";
        std::vector<char> highlighted(fig.x.size(), 0);
        for (std::size_t idx : fig.highlighted) highlighted[idx] = 1;
        for (std::size_t i = 0; i < fig.x.size(); ++i) {
            csv += std::to_string(i);
            if (!fig.labels.empty()) {
                csv += ",";
                csv += i < fig.labels.size() ? fig.labels[i] : "";
            }
            csv += "," + full_precision(fig.y[i]);
            if (!is_series) {
                csv += highlighted[i] ? ",1" : ",0";
            }
            csv += "\n";
        }
        emit(stem + ".csv", csv);
    }
    return written;
}

std::string format_eta(double eta) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", eta);
    return buf;
}

std::vector<double> expand_eta_range(const std::string& range) {
    const std::size_t colon1 = range.find(':');
    const std::size_t colon2 =
        colon1 == std::string::npos ? std::string::npos
                                    : range.find(':', colon1 + 1);
    if (colon1 == std::string::npos || colon2 == std::string::npos) {
        throw std::invalid_argument(
            "eta range must have the form lo:hi:step");
    }
    const auto parse_part = [&](std::size_t begin, std::size_t end) {
        const std::string part = range.substr(begin, end - begin);
        try {
            std::size_t used = 0;
            const double v = std::stod(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad eta range component '" + part +
                                        "'");
        }
    };
    const double lo = parse_part(0, colon1);
    const double hi = parse_part(colon1 + 1, colon2);
    const double step = parse_part(colon2 + 1, range.size());
    if (!(step > 0.0)) {
        throw std::invalid_argument("eta range step must be positive");
    }
    if (hi < lo) {
        throw std::invalid_argument("eta range needs hi >= lo");
    }
    std::vector<double> etas;
    const auto count =
        static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
        const double eta = lo + static_cast<double>(i) * step;
        if (eta > hi + 0.5 * step) break;
        etas.push_back(eta);
    }
    return etas;
}

}  // namespace tailspan

// tailspan: additive structure of the large values of a time series.
//
// Subcommands: analyze, sweep, span, synth, oracle. Exit code 0 on
// success; on failure a single machine-parseable "error: ..." line goes
// to stderr and the exit code is nonzero.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tailspan/bounds.hpp"
#include "tailspan/ingest.hpp"
#include "tailspan/report.hpp"
#include "tailspan/signal.hpp"
#include "tailspan/spanner.hpp"
#include "tailspan/spectrum.hpp"
#include "tailspan/synth.hpp"

namespace {

using namespace tailspan;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string full(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

struct InputOptions {
    std::string path;
    std::string column;
    std::string imag_column;
    std::string label_column;
    std::string delimiter = ",";
    bool no_header = false;
    bool interpolate_missing = false;
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
    cmd->add_option("--input", opts.path, "Delimited input file")
        ->required();
    cmd->add_option("--column", opts.column,
                    "Value column (header name or 0-based position)")
        ->required();
    cmd->add_option("--imag-column", opts.imag_column,
                    "Optional imaginary-part column for complex series");
    cmd->add_option("--label-column", opts.label_column,
                    "Optional label column carried into figure sidecars");
    cmd->add_option("--delimiter", opts.delimiter,
                    "Field delimiter (single character, default ',')");
    cmd->add_flag("--no-header", opts.no_header,
                  "Treat the first row as data, not a header");
    cmd->add_flag("--interpolate-missing", opts.interpolate_missing,
                  "Fill empty cells by linear interpolation");
}

SeriesFile to_series_file(const InputOptions& opts) {
    if (opts.delimiter.size() != 1) {
        throw std::invalid_argument("delimiter must be a single character");
    }
    SeriesFile cfg;
    cfg.path = opts.path;
    cfg.value_column = opts.column;
    if (!opts.imag_column.empty()) cfg.imag_column = opts.imag_column;
    if (!opts.label_column.empty()) cfg.label_column = opts.label_column;
    cfg.delimiter = opts.delimiter[0];
    cfg.has_header = !opts.no_header;
    cfg.interpolate_missing = opts.interpolate_missing;
    return cfg;
}

void print_norms(const char* prefix, const NormSet& norms) {
    std::cout << prefix << ".l1: " << fmt(norms.l1) << "\n"
              << prefix << ".l2: " << fmt(norms.l2) << "\n"
              << prefix << ".l2_mu: " << fmt(norms.l2_mu) << "\n"
              << prefix << ".lp_log: "
              << (norms.lp_log.has_value() ? fmt(*norms.lp_log)
                                           : std::string("undefined"))
              << "\n";
}

int cmd_analyze(const InputOptions& input, bool mean_center_flag) {
    const AnalyzeResult result =
        run_analyze(to_series_file(input), mean_center_flag);
    std::cout << "dataset: " << result.dataset << "\n"
              << "n: " << result.n << "\n"
              << "mean_centered: " << (result.mean_centered ? "true" : "false")
              << "\n"
              << "fr: " << fmt(result.fr) << "\n"
              << "sqrt_n_over_e: " << fmt(result.sqrt_n_over_e) << "\n"
              << "regime: " << (result.strong_regime ? "strong" : "weak")
              << "\n";
    print_norms("signal_norms", result.signal_norms);
    print_norms("spectrum_norms", result.spectrum_norms);
    return 0;
}

int cmd_sweep(const InputOptions& input, const std::string& etas_arg,
              const std::string& eta_range, bool mean_center_flag,
              const std::string& out_dir) {
    std::vector<double> etas;
    if (!etas_arg.empty() && !eta_range.empty()) {
        throw std::invalid_argument("give either --etas or --eta-range");
    }
    if (!eta_range.empty()) {
        etas = expand_eta_range(eta_range);
    } else if (!etas_arg.empty()) {
        std::size_t start = 0;
        while (start <= etas_arg.size()) {
            const std::size_t pos = etas_arg.find(',', start);
            const std::string part = etas_arg.substr(
                start, pos == std::string::npos ? std::string::npos
                                                : pos - start);
            try {
                std::size_t used = 0;
                etas.push_back(std::stod(part, &used));
                if (used != part.size()) throw std::invalid_argument(part);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad eta value '" + part + "'");
            }
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
    } else {
        throw std::invalid_argument("one of --etas or --eta-range is required");
    }

    const SeriesFile cfg = to_series_file(input);
    const LoadResult loaded = load_series(cfg);
    const Signal prepared = prepare_signal(loaded.signal, mean_center_flag);
    const SweepReport report =
        sweep_signal(prepared, std::filesystem::path(cfg.path).stem().string(),
                     etas, mean_center_flag);
    const auto written =
        write_reports(report, prepared, out_dir, loaded.labels);

    std::cout << report_markdown(report);
    std::cout << "\nwrote " << written.size() << " files to " << out_dir
              << "\n";
    return 0;
}

int cmd_span(const InputOptions& input, double eta, bool mean_center_flag,
             bool show_certificates) {
    const SeriesFile cfg = to_series_file(input);
    const LoadResult loaded = load_series(cfg);
    const Signal f = prepare_signal(loaded.signal, mean_center_flag);
    const Spectrum spec = large_spectrum(f, eta);
    const SpanResult span = greedy_span(spec, f.size());
    const bool verified = verify_span(span, spec);

    std::cout << "n: " << f.size() << "\n"
              << "eta: " << format_eta(eta) << "\n"
              << "threshold_value: " << fmt(spec.threshold_value()) << "\n"
              << "gamma_size: " << spec.size() << "\n"
              << "lambda_size: " << span.lambda.size() << "\n";
    std::cout << "lambda:";
    for (std::size_t v : span.lambda) std::cout << " " << v;
    std::cout << "\nspanned: " << (verified ? "true" : "false") << "\n";
    if (show_certificates) {
        for (std::size_t i = 0; i < spec.size(); ++i) {
            std::cout << "gamma " << spec.gamma()[i].index << " =";
            bool any = false;
            for (std::size_t j = 0; j < span.lambda.size(); ++j) {
                const int c = span.certificates[i][j];
                if (c == 0) continue;
                std::cout << (any ? (c > 0 ? " + " : " - ")
                                  : (c > 0 ? " " : " -"))
                          << span.lambda[j];
                any = true;
            }
            if (!any) std::cout << " 0";
            std::cout << " (mod " << f.size() << ")\n";
        }
    }
    return verified ? 0 : 1;
}

int cmd_synth(const std::string& kind_name, std::size_t n,
              std::uint64_t seed, const std::string& out_path,
              std::size_t frequency, std::size_t position,
              const std::vector<std::size_t>& frequencies,
              const std::vector<double>& magnitudes,
              const std::vector<std::size_t>& subset, double amplitude,
              const std::string& base_kind, bool real_noise) {
    SynthSpec spec;
    spec.kind = synth_kind_from_string(kind_name);
    spec.n = n;
    spec.seed = seed;
    spec.frequency = frequency;
    spec.position = position;
    spec.frequencies = frequencies;
    spec.magnitudes = magnitudes;
    spec.subset = subset;
    spec.real_noise = real_noise;
    if (spec.kind == SynthKind::mixture) {
        auto base = std::make_shared<SynthSpec>();
        base->kind = synth_kind_from_string(base_kind);
        base->n = n;
        base->seed = seed + 1;  // decouple base noise from mixture noise
        base->frequency = frequency;
        base->position = position;
        base->frequencies = frequencies;
        base->magnitudes = magnitudes;
        base->subset = subset;
        base->real_noise = real_noise;
        spec.base = std::move(base);
        spec.noise_amplitude = amplitude;
    }

    const Signal f = generate(spec);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << "index,re,im\n";
    for (std::size_t x = 0; x < f.size(); ++x) {
        out << x << "," << full(f[x].real()) << "," << full(f[x].imag())
            << "\n";
    }
    std::cout << "wrote " << to_string(spec.kind) << " signal of length "
              << f.size() << " to " << out_path << "\n";
    return 0;
}

int cmd_oracle(const InputOptions& input, double eta, bool mean_center_flag,
               std::size_t max_gamma) {
    const SeriesFile cfg = to_series_file(input);
    const LoadResult loaded = load_series(cfg);
    const Signal f = prepare_signal(loaded.signal, mean_center_flag);
    const Spectrum spec = large_spectrum(f, eta);
    if (spec.size() > max_gamma) {
        throw std::runtime_error(
            "large spectrum has " + std::to_string(spec.size()) +
            " elements; oracle capped at --max-gamma " +
            std::to_string(max_gamma));
    }
    const SpanResult greedy = greedy_span(spec, f.size());
    const auto minimal = minimal_lambda(spec, f.size(), spec.size());

    std::cout << "gamma_size: " << spec.size() << "\n"
              << "greedy_lambda_size: " << greedy.lambda.size() << "\n";
    std::cout << "greedy_lambda:";
    for (std::size_t v : greedy.lambda) std::cout << " " << v;
    std::cout << "\n";
    if (minimal.has_value()) {
        std::cout << "minimal_lambda_size: " << minimal->size() << "\n";
        std::cout << "minimal_lambda:";
        for (std::size_t v : *minimal) std::cout << " " << v;
        std::cout << "\n";
        std::cout << "greedy_is_minimal: "
                  << (minimal->size() == greedy.lambda.size() ? "true"
                                                              : "false")
                  << "\n";
    } else {
        std::cout << "minimal_lambda: none within size cap\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Additive structure of the large values of a time series"};
    app.require_subcommand(1);
    app.failure_message([](const CLI::App*, const CLI::Error& e) {
        return std::string("error: ") + e.what() + "\n";
    });

    // analyze
    InputOptions analyze_input;
    bool analyze_center = false;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Fourier ratio, regime and norms of a series");
    add_input_options(analyze, analyze_input);
    analyze->add_flag("--mean-center", analyze_center,
                      "Subtract the mean before analysis");

    // sweep
    InputOptions sweep_input;
    bool sweep_center = false;
    std::string etas_arg, eta_range, out_dir;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Large-spectrum/spanning-set sweep over a list of etas");
    add_input_options(sweep, sweep_input);
    sweep->add_option("--etas", etas_arg, "Comma-separated eta list");
    sweep->add_option("--eta-range", eta_range, "Eta range lo:hi:step");
    sweep->add_flag("--mean-center", sweep_center,
                    "Subtract the mean before analysis");
    sweep->add_option("--out", out_dir, "Output directory")->required();

    // span
    InputOptions span_input;
    bool span_center = false, span_certs = false;
    double span_eta = 0.0;
    CLI::App* span = app.add_subcommand(
        "span", "Greedy spanning set for a single eta");
    add_input_options(span, span_input);
    span->add_option("--eta", span_eta, "Threshold eta")->required();
    span->add_flag("--mean-center", span_center,
                   "Subtract the mean before analysis");
    span->add_flag("--certificates", span_certs,
                   "Print one combination per gamma element");

    // synth
    std::string synth_kind = "character", synth_out, synth_base = "character";
    std::size_t synth_n = 0, synth_freq = 0, synth_pos = 0;
    std::uint64_t synth_seed = 0;
    std::vector<std::size_t> synth_freqs, synth_subset;
    std::vector<double> synth_mags;
    double synth_amp = 0.0;
    bool synth_real = false;
    CLI::App* synth = app.add_subcommand(
        "synth", "Generate a synthetic signal as CSV (index,re,im)");
    synth->add_option("--kind", synth_kind,
                      "character|delta|sparse_fourier|indicator|"
                      "gaussian_noise|mixture")
        ->required();
    synth->add_option("--n", synth_n, "Signal length")->required();
    synth->add_option("--seed", synth_seed, "Seed for random kinds");
    synth->add_option("--out", synth_out, "Output CSV path")->required();
    synth->add_option("--frequency", synth_freq, "character frequency");
    synth->add_option("--position", synth_pos, "delta position");
    synth->add_option("--frequencies", synth_freqs,
                      "sparse_fourier frequencies")
        ->delimiter(',');
    synth->add_option("--magnitudes", synth_mags,
                      "sparse_fourier magnitudes (default all 1)")
        ->delimiter(',');
    synth->add_option("--subset", synth_subset, "indicator subset")
        ->delimiter(',');
    synth->add_option("--amplitude", synth_amp, "mixture noise amplitude");
    synth->add_option("--base-kind", synth_base, "mixture base kind");
    synth->add_flag("--real-noise", synth_real,
                    "Real-valued noise instead of complex");

    // oracle
    InputOptions oracle_input;
    bool oracle_center = false;
    double oracle_eta = 0.0;
    std::size_t oracle_max_gamma = 20;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "Exhaustive minimal spanning set vs the greedy one");
    add_input_options(oracle, oracle_input);
    oracle->add_option("--eta", oracle_eta, "Threshold eta")->required();
    oracle->add_option("--max-gamma", oracle_max_gamma,
                       "Refuse instances with a larger large spectrum");
    oracle->add_flag("--mean-center", oracle_center,
                     "Subtract the mean before analysis");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) {
            return cmd_analyze(analyze_input, analyze_center);
        }
        if (app.got_subcommand(sweep)) {
            return cmd_sweep(sweep_input, etas_arg, eta_range, sweep_center,
                             out_dir);
        }
        if (app.got_subcommand(span)) {
            return cmd_span(span_input, span_eta, span_center, span_certs);
        }
        if (app.got_subcommand(synth)) {
            return cmd_synth(synth_kind, synth_n, synth_seed, synth_out,
                             synth_freq, synth_pos, synth_freqs, synth_mags,
                             synth_subset, synth_amp, synth_base, synth_real);
        }
        if (app.got_subcommand(oracle)) {
            return cmd_oracle(oracle_input, oracle_eta, oracle_center,
                              oracle_max_gamma);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

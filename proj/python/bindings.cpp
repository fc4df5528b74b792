#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "tailspan/bounds.hpp"
#include "tailspan/ingest.hpp"
#include "tailspan/report.hpp"
#include "tailspan/signal.hpp"
#include "tailspan/spanner.hpp"
#include "tailspan/spectrum.hpp"
#include "tailspan/synth.hpp"

namespace py = pybind11;
using namespace tailspan;

namespace {

SynthSpec make_spec(SynthKind kind, std::size_t n, std::uint64_t seed) {
    SynthSpec spec;
    spec.kind = kind;
    spec.n = n;
    spec.seed = seed;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Additive structure of the large values of a time series: "
              "Fourier ratio, large spectrum, greedy {-1,0,1} spanning "
              "sets and Chang-type bounds on Z_N.";

    py::class_<NormSet>(m, "NormSet")
        .def_readonly("l1", &NormSet::l1)
        .def_readonly("l2", &NormSet::l2)
        .def_readonly("l2_mu", &NormSet::l2_mu)
        .def_property_readonly(
            "lp_log",
            [](const NormSet& n) -> py::object {
                if (!n.lp_log.has_value()) return py::none();
                return py::float_(*n.lp_log);
            })
        .def("__repr__", [](const NormSet& n) {
            return "NormSet(l1=" + std::to_string(n.l1) +
                   ", l2=" + std::to_string(n.l2) + ")";
        });

    py::class_<Signal>(m, "Signal")
        .def(py::init<std::vector<Complex>>(), py::arg("values"))
        .def(py::init<const std::vector<double>&>(), py::arg("values"))
        .def("__len__", &Signal::size)
        .def("__getitem__",
             [](const Signal& f, std::size_t i) {
                 if (i >= f.size()) throw py::index_error();
                 return f[i];
             })
        .def_property_readonly("values", &Signal::values)
        .def_property_readonly("norms", &Signal::norms)
        .def_property_readonly("is_zero", &Signal::is_zero);

    py::class_<SpectrumEntry>(m, "SpectrumEntry")
        .def_readonly("index", &SpectrumEntry::index)
        .def_readonly("magnitude", &SpectrumEntry::magnitude);

    py::class_<Spectrum>(m, "Spectrum")
        .def_property_readonly("n", &Spectrum::n)
        .def_property_readonly("eta", &Spectrum::eta)
        .def_property_readonly("threshold_value", &Spectrum::threshold_value)
        .def_property_readonly("gamma", &Spectrum::gamma)
        .def_property_readonly("indices", &Spectrum::indices)
        .def("__len__", &Spectrum::size);

    py::class_<ReachSet>(m, "ReachSet")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def_property_readonly("n", &ReachSet::n)
        .def("__len__", &ReachSet::size)
        .def("contains", &ReachSet::contains)
        .def("add", &ReachSet::add)
        .def_property_readonly("members", &ReachSet::members)
        .def_property_readonly("full", &ReachSet::full);

    py::class_<SpanResult>(m, "SpanResult")
        .def_readonly("lambda_", &SpanResult::lambda)
        .def_readonly("reach", &SpanResult::reach)
        .def_readonly("all_spanned", &SpanResult::all_spanned)
        .def_readonly("certificates", &SpanResult::certificates);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("n", &BoundReport::n)
        .def_readonly("fr", &BoundReport::fr)
        .def_readonly("eta", &BoundReport::eta)
        .def_readonly("strong_regime", &BoundReport::strong_regime)
        .def_property_readonly(
            "bound_simple_over_c",
            [](const BoundReport& r) -> py::object {
                if (!r.bound_simple_over_c.has_value()) return py::none();
                return py::float_(*r.bound_simple_over_c);
            })
        .def_readonly("bound_general_over_cprime",
                      &BoundReport::bound_general_over_cprime)
        .def_readonly("bound_lognorm_over_c",
                      &BoundReport::bound_lognorm_over_c);

    m.def("dft", &dft, py::arg("f"), "Unitary DFT on Z_N");
    m.def("inverse_dft", &inverse_dft, py::arg("g"));
    m.def("norms", &norms, py::arg("f"));
    m.def("fourier_ratio", &fourier_ratio, py::arg("f"),
          "||fhat||_1 / ||fhat||_2, in [1, sqrt(N)]");
    m.def("mean_center", &mean_center, py::arg("f"));
    m.def("lp_log_exponent", &lp_log_exponent, py::arg("n"));

    m.def("large_spectrum", &large_spectrum, py::arg("f"), py::arg("eta"),
          "Indices with |f(x)| >= eta * ||f||_2 / sqrt(N), by decreasing "
          "magnitude");
    m.def("greedy_span", &greedy_span, py::arg("spectrum"), py::arg("n"));
    m.def("verify_span", &verify_span, py::arg("result"), py::arg("spectrum"));
    m.def("minimal_lambda", &minimal_lambda, py::arg("spectrum"),
          py::arg("n"), py::arg("max_size"),
          py::arg("budget") = std::uint64_t{1} << 22);

    m.def("regime_check", &regime_check, py::arg("fr"), py::arg("n"));
    m.def("bound_simple_over_c", &bound_simple_over_c, py::arg("n"),
          py::arg("fr"), py::arg("eta"));
    m.def("bound_general_over_cprime", &bound_general_over_cprime,
          py::arg("n"), py::arg("fr"), py::arg("eta"));
    m.def("bound_report", &bound_report, py::arg("f"), py::arg("eta"));

    // synthetic signals
    m.def("synth_character", [](std::size_t n, std::size_t frequency) {
        SynthSpec spec = make_spec(SynthKind::character, n, 0);
        spec.frequency = frequency;
        return generate(spec);
    }, py::arg("n"), py::arg("frequency"));
    m.def("synth_delta", [](std::size_t n, std::size_t position) {
        SynthSpec spec = make_spec(SynthKind::delta, n, 0);
        spec.position = position;
        return generate(spec);
    }, py::arg("n"), py::arg("position"));
    m.def("synth_sparse_fourier",
          [](std::size_t n, const std::vector<std::size_t>& frequencies,
             const std::vector<double>& magnitudes) {
              SynthSpec spec = make_spec(SynthKind::sparse_fourier, n, 0);
              spec.frequencies = frequencies;
              spec.magnitudes = magnitudes;
              return generate(spec);
          },
          py::arg("n"), py::arg("frequencies"),
          py::arg("magnitudes") = std::vector<double>{});
    m.def("synth_indicator",
          [](std::size_t n, const std::vector<std::size_t>& subset) {
              SynthSpec spec = make_spec(SynthKind::indicator, n, 0);
              spec.subset = subset;
              return generate(spec);
          },
          py::arg("n"), py::arg("subset"));
    m.def("synth_noise",
          [](std::size_t n, std::uint64_t seed, bool real_noise) {
              SynthSpec spec = make_spec(SynthKind::gaussian_noise, n, seed);
              spec.real_noise = real_noise;
              return generate(spec);
          },
          py::arg("n"), py::arg("seed"), py::arg("real_noise") = false);

    // ingestion and reports
    py::class_<SeriesFile>(m, "SeriesFile")
        .def(py::init([](const std::string& path, const std::string& column,
                         py::object imag_column, py::object label_column,
                         const std::string& delimiter, bool has_header,
                         bool interpolate_missing) {
                 SeriesFile cfg;
                 cfg.path = path;
                 cfg.value_column = column;
                 if (!imag_column.is_none()) {
                     cfg.imag_column = imag_column.cast<std::string>();
                 }
                 if (!label_column.is_none()) {
                     cfg.label_column = label_column.cast<std::string>();
                 }
                 if (delimiter.size() != 1) {
                     throw std::invalid_argument(
                         "delimiter must be a single character");
                 }
                 cfg.delimiter = delimiter[0];
                 cfg.has_header = has_header;
                 cfg.interpolate_missing = interpolate_missing;
                 return cfg;
             }),
             py::arg("path"), py::arg("column"),
             py::arg("imag_column") = py::none(),
             py::arg("label_column") = py::none(),
             py::arg("delimiter") = ",", py::arg("has_header") = true,
             py::arg("interpolate_missing") = false);

    m.def("load_series", [](const SeriesFile& cfg) {
        LoadResult result = load_series(cfg);
        return py::make_tuple(std::move(result.signal),
                              std::move(result.labels));
    }, py::arg("cfg"));

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("eta", &SweepRow::eta)
        .def_readonly("gamma_size", &SweepRow::gamma_size)
        .def_readonly("lambda_size", &SweepRow::lambda_size)
        .def_readonly("spanned", &SweepRow::spanned)
        .def_property_readonly(
            "bound_simple_over_c",
            [](const SweepRow& r) -> py::object {
                if (!r.bound_simple_over_c.has_value()) return py::none();
                return py::float_(*r.bound_simple_over_c);
            })
        .def_readonly("bound_general_over_cprime",
                      &SweepRow::bound_general_over_cprime)
        .def_readonly("lambda_", &SweepRow::lambda)
        .def_readonly("gamma", &SweepRow::gamma);

    py::class_<SweepReport>(m, "SweepReport")
        .def_readonly("dataset", &SweepReport::dataset)
        .def_readonly("n", &SweepReport::n)
        .def_readonly("fr", &SweepReport::fr)
        .def_readonly("mean_centered", &SweepReport::mean_centered)
        .def_readonly("rows", &SweepReport::rows);

    m.def("prepare_signal", &prepare_signal, py::arg("raw"),
          py::arg("mean_center") = false);
    m.def("sweep_signal", &sweep_signal, py::arg("f"), py::arg("dataset"),
          py::arg("etas"), py::arg("mean_centered") = false);
    m.def("run_sweep", &run_sweep, py::arg("input"), py::arg("etas"),
          py::arg("mean_center") = false);
    m.def("report_json", &report_json, py::arg("report"));
    m.def("report_markdown", &report_markdown, py::arg("report"));
    m.def("write_reports", &write_reports, py::arg("report"),
          py::arg("signal"), py::arg("out_dir"),
          py::arg("labels") = std::vector<std::string>{});
}

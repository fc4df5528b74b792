#pragma once

#include <cstddef>
#include <vector>

#include "tailspan/signal.hpp"

namespace tailspan {

struct SpectrumEntry {
    std::size_t index = 0;
    double magnitude = 0.0;
};

/// The large spectrum of a signal at threshold eta: every index x with
/// |f(x)| >= eta * ||f||_2 / sqrt(N), sorted by decreasing magnitude
/// with ascending-index tie-break. Comparisons are exact; there is no
/// epsilon slack at the threshold.
class Spectrum {
  public:
    Spectrum(std::size_t n, double eta, double threshold_value,
             std::vector<SpectrumEntry> gamma);

    std::size_t n() const noexcept { return n_; }
    double eta() const noexcept { return eta_; }
    double threshold_value() const noexcept { return threshold_value_; }
    const std::vector<SpectrumEntry>& gamma() const noexcept { return gamma_; }
    std::size_t size() const noexcept { return gamma_.size(); }

    /// Gamma as a plain index list, in spectrum (magnitude) order.
    std::vector<std::size_t> indices() const;

  private:
    std::size_t n_;
    double eta_;
    double threshold_value_;
    std::vector<SpectrumEntry> gamma_;
};

/// Extract the large spectrum of f at threshold eta > 0.
/// Throws std::domain_error for the zero signal (the threshold would be
/// degenerate at 0) and std::invalid_argument for eta <= 0.
Spectrum large_spectrum(const Signal& f, double eta);

}  // namespace tailspan

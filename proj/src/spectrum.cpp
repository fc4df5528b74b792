#include "tailspan/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tailspan {

Spectrum::Spectrum(std::size_t n, double eta, double threshold_value,
                   std::vector<SpectrumEntry> gamma)
    : n_(n), eta_(eta), threshold_value_(threshold_value),
      gamma_(std::move(gamma)) {
    if (n_ == 0) throw std::invalid_argument("Spectrum: n must be positive");
    if (!(eta_ > 0.0)) {
        throw std::invalid_argument("Spectrum: eta must be positive");
    }
    for (std::size_t i = 0; i < gamma_.size(); ++i) {
        const SpectrumEntry& e = gamma_[i];
        if (e.index >= n_) {
            throw std::invalid_argument("Spectrum: index out of range");
        }
        if (e.magnitude < threshold_value_) {
            throw std::invalid_argument(
                "Spectrum: magnitude below threshold");
        }
        if (i > 0) {
            const SpectrumEntry& prev = gamma_[i - 1];
            const bool ordered =
                prev.magnitude > e.magnitude ||
                (prev.magnitude == e.magnitude && prev.index < e.index);
            if (!ordered) {
                throw std::invalid_argument(
                    "Spectrum: entries must be sorted by decreasing "
                    "magnitude with ascending-index tie-break");
            }
        }
    }
}

std::vector<std::size_t> Spectrum::indices() const {
    std::vector<std::size_t> out;
    out.reserve(gamma_.size());
    for (const SpectrumEntry& e : gamma_) out.push_back(e.index);
    return out;
}

Spectrum large_spectrum(const Signal& f, double eta) {
    if (!(eta > 0.0)) {
        throw std::invalid_argument("large_spectrum: eta must be positive");
    }
    if (f.is_zero()) {
        throw std::domain_error(
            "large_spectrum: zero signal has a degenerate threshold");
    }
    // Inclusive comparison, exact: values at the threshold are in.
    const double threshold = eta * f.norms().l2_mu;
    std::vector<SpectrumEntry> entries;
    for (std::size_t x = 0; x < f.size(); ++x) {
        const double mag = std::abs(f[x]);
        if (mag >= threshold) entries.push_back({x, mag});
    }
    std::sort(entries.begin(), entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) {
                  if (a.magnitude != b.magnitude) {
                      return a.magnitude > b.magnitude;
                  }
                  return a.index < b.index;
              });
    return Spectrum(f.size(), eta, threshold, std::move(entries));
}

}  // namespace tailspan

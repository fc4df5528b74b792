#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tailspan/signal.hpp"

namespace tailspan {

enum class SynthKind {
    character,      // f(x) = exp(2*pi*i*frequency*x/N), FR = 1
    delta,          // unit impulse at `position`, FR = sqrt(N)
    sparse_fourier, // prescribed spectral coefficients, FR = ||m||_1/||m||_2
    indicator,      // 1 on `subset`, 0 elsewhere
    gaussian_noise, // iid Gaussian entries from `seed`
    mixture,        // generate(*base) + noise_amplitude * noise(seed)
};

/// A deterministic recipe for a synthetic signal: identical specs
/// (including seeds) generate bit-identical signals.
struct SynthSpec {
    SynthKind kind = SynthKind::character;
    std::size_t n = 0;
    std::uint64_t seed = 0;

    std::size_t frequency = 0;             // character
    std::size_t position = 0;              // delta
    std::vector<std::size_t> frequencies;  // sparse_fourier
    std::vector<double> magnitudes;        // sparse_fourier; empty = all 1
    std::vector<std::size_t> subset;       // indicator
    std::shared_ptr<SynthSpec> base;       // mixture
    double noise_amplitude = 0.0;          // mixture
    bool real_noise = false;               // gaussian_noise / mixture
};

/// Generate the signal a spec describes. Validates parameters
/// (frequencies and subset members < n, distinct subset, magnitude list
/// matching the frequency list) and throws std::invalid_argument on
/// violations.
Signal generate(const SynthSpec& spec);

SynthKind synth_kind_from_string(const std::string& name);
std::string to_string(SynthKind kind);

}  // namespace tailspan

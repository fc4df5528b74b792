#include "tailspan/synth.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "tailspan/rng.hpp"

namespace tailspan {

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument("generate: " + message);
}

Signal make_character(std::size_t n, std::size_t frequency) {
    require(frequency < n, "character frequency must be < n");
    std::vector<Complex> values(n);
    const long double step = 2.0L * std::numbers::pi_v<long double> *
                             static_cast<long double>(frequency) /
                             static_cast<long double>(n);
    for (std::size_t x = 0; x < n; ++x) {
        const long double angle =
            step * static_cast<long double>(x % n);
        values[x] = Complex(static_cast<double>(std::cos(angle)),
                            static_cast<double>(std::sin(angle)));
    }
    return Signal(std::move(values));
}

Signal make_delta(std::size_t n, std::size_t position) {
    require(position < n, "delta position must be < n");
    std::vector<Complex> values(n, Complex(0.0, 0.0));
    values[position] = Complex(1.0, 0.0);
    return Signal(std::move(values));
}

Signal make_sparse_fourier(std::size_t n,
                           const std::vector<std::size_t>& frequencies,
                           const std::vector<double>& magnitudes) {
    require(!frequencies.empty(), "sparse_fourier needs >= 1 frequency");
    require(frequencies.size() <= n, "sparse_fourier: k must be <= n");
    require(magnitudes.empty() || magnitudes.size() == frequencies.size(),
            "sparse_fourier: magnitude list must match the frequency list");
    std::set<std::size_t> seen;
    std::vector<Complex> coeffs(n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < frequencies.size(); ++i) {
        const std::size_t freq = frequencies[i];
        require(freq < n, "sparse_fourier frequency must be < n");
        require(seen.insert(freq).second,
                "sparse_fourier frequencies must be distinct");
        const double mag = magnitudes.empty() ? 1.0 : magnitudes[i];
        require(mag >= 0.0, "sparse_fourier magnitudes must be >= 0");
        coeffs[freq] = Complex(mag, 0.0);
    }
    return inverse_dft(Signal(std::move(coeffs)));
}

Signal make_indicator(std::size_t n, const std::vector<std::size_t>& subset) {
    std::vector<Complex> values(n, Complex(0.0, 0.0));
    std::set<std::size_t> seen;
    for (std::size_t a : subset) {
        require(a < n, "indicator subset member must be < n");
        require(seen.insert(a).second,
                "indicator subset members must be distinct");
        values[a] = Complex(1.0, 0.0);
    }
    return Signal(std::move(values));
}

Signal make_noise(std::size_t n, std::uint64_t seed, bool real_only) {
    GaussianSampler sampler(seed);
    std::vector<Complex> values(n);
    for (std::size_t x = 0; x < n; ++x) {
        values[x] = real_only ? Complex(sampler.normal(), 0.0)
                              : sampler.complex_normal();
    }
    return Signal(std::move(values));
}

}  // namespace

Signal generate(const SynthSpec& spec) {
    require(spec.n >= 1, "n must be >= 1");
    switch (spec.kind) {
        case SynthKind::character:
            return make_character(spec.n, spec.frequency);
        case SynthKind::delta:
            return make_delta(spec.n, spec.position);
        case SynthKind::sparse_fourier:
            return make_sparse_fourier(spec.n, spec.frequencies,
                                       spec.magnitudes);
        case SynthKind::indicator:
            return make_indicator(spec.n, spec.subset);
        case SynthKind::gaussian_noise:
            return make_noise(spec.n, spec.seed, spec.real_noise);
        case SynthKind::mixture: {
            require(spec.base != nullptr, "mixture needs a base spec");
            require(spec.noise_amplitude >= 0.0,
                    "mixture noise amplitude must be >= 0");
            const Signal base = generate(*spec.base);
            require(base.size() == spec.n,
                    "mixture base length must equal n");
            const Signal noise = make_noise(spec.n, spec.seed,
                                            spec.real_noise);
            std::vector<Complex> values(spec.n);
            for (std::size_t x = 0; x < spec.n; ++x) {
                values[x] = base[x] + spec.noise_amplitude * noise[x];
            }
            return Signal(std::move(values));
        }
    }
    throw std::invalid_argument("generate: unknown kind");
}

SynthKind synth_kind_from_string(const std::string& name) {
    if (name == "character") return SynthKind::character;
    if (name == "delta") return SynthKind::delta;
    if (name == "sparse_fourier" || name == "sparse") {
        return SynthKind::sparse_fourier;
    }
    if (name == "indicator") return SynthKind::indicator;
    if (name == "gaussian_noise" || name == "noise") {
        return SynthKind::gaussian_noise;
    }
    if (name == "mixture") return SynthKind::mixture;
    throw std::invalid_argument("unknown synth kind: " + name);
}

std::string to_string(SynthKind kind) {
    switch (kind) {
        case SynthKind::character: return "character";
        case SynthKind::delta: return "delta";
        case SynthKind::sparse_fourier: return "sparse_fourier";
        case SynthKind::indicator: return "indicator";
        case SynthKind::gaussian_noise: return "gaussian_noise";
        case SynthKind::mixture: return "mixture";
    }
    return "unknown";
}

}  // namespace tailspan

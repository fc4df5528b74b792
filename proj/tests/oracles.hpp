// Test-only oracles, independent of the library's computation paths:
// the transform is evaluated as a literal double sum, norms as direct
// power sums, and spanning claims by enumerating all 3^k coefficient
// vectors.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "tailspan/rng.hpp"
#include "tailspan/signal.hpp"
#include "tailspan/spectrum.hpp"

namespace oracles {

using tailspan::Complex;
using tailspan::Signal;

// Literal double-loop evaluation of the defining sum
//   out(m) = (1/sqrt(N)) * sum_x exp(sign * 2*pi*i*x*m/N) * f(x),
// with the index x*m reduced mod N in exact integer arithmetic before
// the character is evaluated (the character is N-periodic, and keeping
// the angle in [0, 2*pi) avoids argument-reduction error).
inline Signal naive_transform(const Signal& f, int sign) {
    const std::size_t n = f.size();
    const long double two_pi_over_n =
        2.0L * std::numbers::pi_v<long double> / static_cast<long double>(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Complex> out(n);
    for (std::size_t m = 0; m < n; ++m) {
        Complex acc(0.0, 0.0);
        for (std::size_t x = 0; x < n; ++x) {
            const std::uint64_t k =
                (static_cast<std::uint64_t>(x) * m) % n;
            const long double angle =
                static_cast<long double>(sign) * two_pi_over_n *
                static_cast<long double>(k);
            const Complex character(static_cast<double>(std::cos(angle)),
                                    static_cast<double>(std::sin(angle)));
            acc += character * f[x];
        }
        out[m] = acc * scale;
    }
    return Signal(std::move(out));
}

inline Signal naive_dft(const Signal& f) { return naive_transform(f, -1); }
inline Signal naive_inverse_dft(const Signal& g) {
    return naive_transform(g, +1);
}

inline double rel_l2_error(const Signal& a, const Signal& b) {
    double diff_sq = 0.0;
    double ref_sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff_sq += std::norm(a[i] - b[i]);
        ref_sq += std::norm(b[i]);
    }
    if (ref_sq == 0.0) return std::sqrt(diff_sq);
    return std::sqrt(diff_sq / ref_sq);
}

inline double direct_p_norm(const Signal& f, double p) {
    double sum = 0.0;
    for (const Complex& z : f.values()) sum += std::pow(std::abs(z), p);
    return std::pow(sum, 1.0 / p);
}

// Every residue writable as sum e_i * elements[i] mod n over all 3^k
// coefficient vectors. Usable up to k ~ 15.
inline std::vector<std::size_t> brute_force_span(
    const std::vector<std::size_t>& elements, std::size_t n) {
    std::vector<bool> reachable(n, false);
    std::vector<int> coeffs(elements.size(), -1);
    while (true) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < elements.size(); ++i) {
            sum += static_cast<std::int64_t>(coeffs[i]) *
                   static_cast<std::int64_t>(elements[i]);
        }
        const auto m = static_cast<std::int64_t>(n);
        reachable[static_cast<std::size_t>(((sum % m) + m) % m)] = true;
        std::size_t i = 0;
        for (; i < coeffs.size(); ++i) {
            if (coeffs[i] < 1) {
                ++coeffs[i];
                break;
            }
            coeffs[i] = -1;
        }
        if (i == coeffs.size()) break;
    }
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < n; ++x) {
        if (reachable[x]) members.push_back(x);
    }
    return members;
}

inline bool brute_force_spans(const std::vector<std::size_t>& elements,
                              const std::vector<std::size_t>& targets,
                              std::size_t n) {
    const std::vector<std::size_t> members = brute_force_span(elements, n);
    return std::all_of(targets.begin(), targets.end(), [&](std::size_t t) {
        return std::binary_search(members.begin(), members.end(), t % n);
    });
}

inline Signal random_complex_signal(std::size_t n, std::uint64_t seed) {
    tailspan::GaussianSampler sampler(seed);
    std::vector<Complex> values(n);
    for (Complex& z : values) z = sampler.complex_normal();
    return Signal(std::move(values));
}

inline Signal random_real_signal(std::size_t n, std::uint64_t seed) {
    tailspan::GaussianSampler sampler(seed);
    std::vector<Complex> values(n);
    for (Complex& z : values) z = Complex(sampler.normal(), 0.0);
    return Signal(std::move(values));
}

// Hand-build a spectrum whose gamma list is `indices` in the given
// order, with strictly decreasing synthetic magnitudes.
inline tailspan::Spectrum make_spectrum(std::size_t n,
                                        std::vector<std::size_t> indices,
                                        double eta = 1.0) {
    std::vector<tailspan::SpectrumEntry> entries;
    entries.reserve(indices.size());
    double magnitude = static_cast<double>(indices.size()) + 1.0;
    for (std::size_t index : indices) {
        entries.push_back({index, magnitude});
        magnitude -= 1.0;
    }
    return tailspan::Spectrum(n, eta, 1.0, std::move(entries));
}

}  // namespace oracles

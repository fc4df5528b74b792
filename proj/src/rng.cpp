#include "tailspan/rng.hpp"

#include <cmath>
#include <numbers>

namespace tailspan {

double GaussianSampler::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianSampler::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller on two uniforms; 1 - u keeps the log argument in (0, 1].
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

std::complex<double> GaussianSampler::complex_normal() {
    const double re = normal();
    const double im = normal();
    return std::complex<double>(re, im) / std::numbers::sqrt2;
}

}  // namespace tailspan

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace tailspan {

/// Portable seeded Gaussian source: mt19937_64 (fully specified by the
/// standard, so reproducible across platforms and languages) feeding a
/// fixed Box-Muller transform. Standard-library distributions are
/// deliberately avoided; their output is implementation-defined.
class GaussianSampler {
  public:
    explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) from the top 53 bits of one draw.
    double uniform();

    /// Standard normal N(0, 1).
    double normal();

    /// Circular complex Gaussian with unit variance:
    /// (z0 + i*z1) / sqrt(2) for independent standard normals z0, z1.
    std::complex<double> complex_normal();

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace tailspan

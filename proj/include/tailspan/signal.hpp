#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace tailspan {

using Complex = std::complex<double>;

/// The four norms used throughout: l1, l2, the mean-square norm
/// l2/sqrt(N), and the l_p norm at the exponent p = ln N / (ln N - 1).
/// lp_log is absent for N = 1, where the exponent is undefined.
struct NormSet {
    double l1 = 0.0;
    double l2 = 0.0;
    double l2_mu = 0.0;
    std::optional<double> lp_log;
};

/// Exponent p = ln n / (ln n - 1), defined for n >= 2.
/// Note p is negative for n = 2, in (1, 2) for n >= 8.
double lp_log_exponent(std::size_t n);

/// A complex-valued signal on Z_N. Immutable after construction; all
/// entries must be finite. Norms are computed once and cached.
class Signal {
  public:
    explicit Signal(std::vector<Complex> values);
    explicit Signal(const std::vector<double>& real_values);

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<Complex>& values() const noexcept { return values_; }
    const Complex& operator[](std::size_t i) const { return values_[i]; }

    const NormSet& norms() const noexcept { return norms_; }
    double max_abs() const noexcept { return max_abs_; }
    bool is_zero() const noexcept { return norms_.l2 == 0.0; }

  private:
    std::vector<Complex> values_;
    NormSet norms_;
    double max_abs_ = 0.0;
};

/// Unitary discrete Fourier transform,
///   fhat(m) = (1/sqrt(N)) * sum_x exp(-2*pi*i*x*m/N) * f(x),
/// evaluated directly in O(N^2) with a precomputed twiddle table.
/// Preserves the l2 norm.
Signal dft(const Signal& f);

/// Inverse of dft (the same sum with the conjugate character).
Signal inverse_dft(const Signal& g);

/// All four norms of f; equals f.norms().
NormSet norms(const Signal& f);

/// Fourier ratio FR(f) = ||fhat||_1 / ||fhat||_2, in [1, sqrt(N)].
/// Throws std::domain_error for the zero signal.
double fourier_ratio(const Signal& f);

/// f minus its arithmetic mean. The result's mean is zero to within
/// 1e-12 * max|f| (a second correction pass enforces this).
Signal mean_center(const Signal& f);

}  // namespace tailspan

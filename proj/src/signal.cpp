#include "tailspan/signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tailspan {

namespace {

bool finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

NormSet compute_norms(const std::vector<Complex>& values) {
    const std::size_t n = values.size();
    NormSet out;
    double sum_abs = 0.0;
    double sum_sq = 0.0;
    for (const Complex& z : values) {
        const double a = std::abs(z);
        sum_abs += a;
        sum_sq += a * a;
    }
    out.l1 = sum_abs;
    out.l2 = std::sqrt(sum_sq);
    out.l2_mu = out.l2 / std::sqrt(static_cast<double>(n));
    if (n >= 2) {
        const double p = lp_log_exponent(n);
        double sum_p = 0.0;
        for (const Complex& z : values) sum_p += std::pow(std::abs(z), p);
        out.lp_log = std::pow(sum_p, 1.0 / p);
    }
    return out;
}

// Twiddle table exp(sign * 2*pi*i*k/N) for k in [0, N). Angles are kept
// in [0, 2*pi) and evaluated in extended precision so table entries are
// correct to double rounding.
std::vector<Complex> twiddle_table(std::size_t n, int sign) {
    std::vector<Complex> table(n);
    const long double step = 2.0L * std::numbers::pi_v<long double> /
                             static_cast<long double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const long double angle = static_cast<long double>(sign) * step *
                                  static_cast<long double>(k);
        table[k] = Complex(static_cast<double>(std::cos(angle)),
                           static_cast<double>(std::sin(angle)));
    }
    return table;
}

// Shared direct transform: out(m) = (1/sqrt(N)) sum_x w^(x*m) f(x) with
// w the first table entry's direction. The index x*m is reduced mod N in
// integer arithmetic, which is exact (the character is N-periodic).
Signal direct_transform(const Signal& f, int sign) {
    const std::size_t n = f.size();
    const std::vector<Complex> table = twiddle_table(n, sign);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Complex> out(n);
    for (std::size_t m = 0; m < n; ++m) {
        Complex acc(0.0, 0.0);
        std::size_t idx = 0;  // (x*m) mod n, advanced by m each step
        for (std::size_t x = 0; x < n; ++x) {
            acc += table[idx] * f[x];
            idx += m;
            if (idx >= n) idx -= n;
        }
        out[m] = acc * scale;
    }
    return Signal(std::move(out));
}

}  // namespace

double lp_log_exponent(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument(
            "lp_log_exponent: undefined for n < 2");
    }
    const double ln_n = std::log(static_cast<double>(n));
    return ln_n / (ln_n - 1.0);
}

Signal::Signal(std::vector<Complex> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("Signal: length must be at least 1");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!finite(values_[i])) {
            throw std::invalid_argument(
                "Signal: non-finite value at index " + std::to_string(i));
        }
        max_abs_ = std::max(max_abs_, std::abs(values_[i]));
    }
    norms_ = compute_norms(values_);
}

Signal::Signal(const std::vector<double>& real_values)
    : Signal(std::vector<Complex>(real_values.begin(), real_values.end())) {}

Signal dft(const Signal& f) { return direct_transform(f, -1); }

Signal inverse_dft(const Signal& g) { return direct_transform(g, +1); }

NormSet norms(const Signal& f) { return f.norms(); }

double fourier_ratio(const Signal& f) {
    if (f.is_zero()) {
        throw std::domain_error(
            "fourier_ratio: undefined for the zero signal");
    }
    const NormSet fhat = dft(f).norms();
    return fhat.l1 / fhat.l2;
}

Signal mean_center(const Signal& f) {
    const std::size_t n = f.size();
    std::vector<Complex> out(f.values());
    // Two passes: subtract the mean, then the residual mean left by
    // rounding, so |mean| <= 1e-12 * max|f| holds with a wide margin.
    for (int pass = 0; pass < 2; ++pass) {
        Complex sum(0.0, 0.0);
        for (const Complex& z : out) sum += z;
        const Complex mean = sum / static_cast<double>(n);
        for (Complex& z : out) z -= mean;
    }
    return Signal(std::move(out));
}

}  // namespace tailspan

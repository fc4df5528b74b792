#pragma once

#include <cstddef>
#include <optional>

#include "tailspan/signal.hpp"

namespace tailspan {

/// Theoretical ceilings on |Lambda|, reported divided by the unknown
/// absolute constant (C or C'). Natural logarithms throughout.
/// bound_simple_over_c is present only in the strong regime
/// FR <= sqrt(N)/e, where its log argument N/FR^2 >= e^2 is positive.
struct BoundReport {
    std::size_t n = 0;
    double fr = 0.0;
    double eta = 0.0;
    bool strong_regime = false;
    std::optional<double> bound_simple_over_c;
    double bound_general_over_cprime = 0.0;
    double bound_lognorm_over_c = 0.0;
};

/// Strong-regime test: fr <= sqrt(n) / e (exact floating comparison).
bool regime_check(double fr, std::size_t n);

/// eta^-2 * fr^2 * ln(n / fr^2). Nonpositive when fr^2 >= n; callers
/// wanting the regime gate should use bound_report or regime_check.
double bound_simple_over_c(std::size_t n, double fr, double eta);

/// eta^-2 * fr^2 * ln(n).
double bound_general_over_cprime(std::size_t n, double fr, double eta);

/// eta^-2 * (||fhat||_p / ||fhat||_2)^2 * ln(n) at p = ln n/(ln n - 1),
/// taking the spectrum's norms directly.
double bound_lognorm_over_c(std::size_t n, const NormSet& fhat_norms,
                            double eta);

/// Assemble a BoundReport from a spectrum's norm set (the norms of
/// dft(f)), without recomputing the transform.
BoundReport make_bound_report(std::size_t n, const NormSet& fhat_norms,
                              double eta);

/// Full report for a signal: computes dft(f) internally.
/// Requires a nonzero signal, eta > 0 and n >= 2.
BoundReport bound_report(const Signal& f, double eta);

}  // namespace tailspan

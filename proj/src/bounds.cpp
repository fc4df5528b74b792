#include "tailspan/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tailspan {

bool regime_check(double fr, std::size_t n) {
    return fr <= std::sqrt(static_cast<double>(n)) / std::numbers::e;
}

double bound_simple_over_c(std::size_t n, double fr, double eta) {
    const double nn = static_cast<double>(n);
    return (fr * fr) * std::log(nn / (fr * fr)) / (eta * eta);
}

double bound_general_over_cprime(std::size_t n, double fr, double eta) {
    return (fr * fr) * std::log(static_cast<double>(n)) / (eta * eta);
}

double bound_lognorm_over_c(std::size_t n, const NormSet& fhat_norms,
                            double eta) {
    if (!fhat_norms.lp_log.has_value()) {
        throw std::invalid_argument(
            "bound_lognorm_over_c: lp_log norm undefined (n < 2)");
    }
    const double ratio = *fhat_norms.lp_log / fhat_norms.l2;
    return ratio * ratio * std::log(static_cast<double>(n)) / (eta * eta);
}

BoundReport make_bound_report(std::size_t n, const NormSet& fhat_norms,
                              double eta) {
    if (n < 2) {
        throw std::invalid_argument("bound_report: requires n >= 2");
    }
    if (!(eta > 0.0)) {
        throw std::invalid_argument("bound_report: eta must be positive");
    }
    BoundReport report;
    report.n = n;
    report.fr = fhat_norms.l1 / fhat_norms.l2;
    report.eta = eta;
    report.strong_regime = regime_check(report.fr, n);
    if (report.strong_regime) {
        report.bound_simple_over_c = bound_simple_over_c(n, report.fr, eta);
    }
    report.bound_general_over_cprime =
        bound_general_over_cprime(n, report.fr, eta);
    report.bound_lognorm_over_c = bound_lognorm_over_c(n, fhat_norms, eta);
    return report;
}

BoundReport bound_report(const Signal& f, double eta) {
    if (f.is_zero()) {
        throw std::domain_error(
            "bound_report: fourier ratio undefined for the zero signal");
    }
    return make_bound_report(f.size(), dft(f).norms(), eta);
}

}  // namespace tailspan

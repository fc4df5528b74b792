#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "tailspan/signal.hpp"
#include "tailspan/synth.hpp"

using namespace tailspan;

namespace {

bool approx_complex(const Complex& a, const Complex& b, double tol) {
    return std::abs(a - b) <= tol;
}

Signal cyclic_shift(const Signal& f, std::size_t shift) {
    const std::size_t n = f.size();
    std::vector<Complex> out(n);
    for (std::size_t i = 0; i < n; ++i) out[(i + shift) % n] = f[i];
    return Signal(std::move(out));
}

}  // namespace

TEST_SUITE("signal") {

TEST_CASE("signal construction validates input") {
    CHECK_THROWS_AS(Signal(std::vector<Complex>{}), std::invalid_argument);
    CHECK_THROWS_AS(Signal(std::vector<double>{1.0, std::nan("")}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        Signal(std::vector<double>{std::numeric_limits<double>::infinity()}),
        std::invalid_argument);
    const Signal ok(std::vector<double>{1.0, -2.0});
    CHECK(ok.size() == 2);
    CHECK(ok[1] == Complex(-2.0, 0.0));
}

TEST_CASE("dft maps a delta at zero to the constant 1/sqrt(N)") {
    const Signal f(std::vector<double>{1.0, 0.0, 0.0, 0.0});
    const Signal fhat = dft(f);
    for (std::size_t m = 0; m < 4; ++m) {
        CHECK(approx_complex(fhat[m], Complex(0.5, 0.0), 1e-15));
    }
}

TEST_CASE("dft maps the constant signal to sqrt(N) times a delta") {
    const Signal f(std::vector<double>{1.0, 1.0, 1.0, 1.0});
    const Signal fhat = dft(f);
    CHECK(approx_complex(fhat[0], Complex(2.0, 0.0), 1e-14));
    for (std::size_t m = 1; m < 4; ++m) {
        CHECK(approx_complex(fhat[m], Complex(0.0, 0.0), 1e-14));
    }
}

TEST_CASE("dft matches the naive double sum on a random signal, N=7") {
    const Signal f = oracles::random_complex_signal(7, 20250701);
    CHECK(oracles::rel_l2_error(dft(f), oracles::naive_dft(f)) <= 1e-12);
}

TEST_CASE("inverse_dft undoes the constant-to-delta example") {
    const Signal g(std::vector<double>{2.0, 0.0, 0.0, 0.0});
    const Signal f = inverse_dft(g);
    for (std::size_t x = 0; x < 4; ++x) {
        CHECK(approx_complex(f[x], Complex(1.0, 0.0), 1e-15));
    }
}

TEST_CASE("inverse_dft round-trips a random signal, N=526") {
    const Signal f = oracles::random_complex_signal(526, 20250702);
    CHECK(oracles::rel_l2_error(inverse_dft(dft(f)), f) <= 1e-10);
}

TEST_CASE("inverse_dft of the zero signal is zero") {
    const Signal zeros(std::vector<double>(8, 0.0));
    const Signal f = inverse_dft(zeros);
    for (std::size_t x = 0; x < 8; ++x) {
        CHECK(f[x] == Complex(0.0, 0.0));
    }
}

TEST_CASE("norms of [3, 4]") {
    const Signal f(std::vector<double>{3.0, 4.0});
    const NormSet got = norms(f);
    CHECK(got.l1 == doctest::Approx(7.0).epsilon(1e-14));
    CHECK(got.l2 == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(got.l2_mu == doctest::Approx(5.0 / std::numbers::sqrt2)
                           .epsilon(1e-14));
    // The l2_mu/l2 relation is exact up to rounding.
    CHECK(got.l2_mu * std::sqrt(2.0) ==
          doctest::Approx(got.l2).epsilon(1e-12));
}

TEST_CASE("all norms of a delta equal one") {
    for (std::size_t n : {3u, 5u, 16u, 64u}) {
        std::vector<double> values(n, 0.0);
        values[0] = 1.0;
        const NormSet got = norms(Signal(values));
        CHECK(got.l1 == 1.0);
        CHECK(got.l2 == 1.0);
        REQUIRE(got.lp_log.has_value());
        CHECK(*got.lp_log == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("lp_log matches a direct power-sum evaluation, N=64") {
    const Signal f = oracles::random_complex_signal(64, 20250703);
    const double p = lp_log_exponent(64);
    const NormSet got = norms(f);
    REQUIRE(got.lp_log.has_value());
    CHECK(*got.lp_log ==
          doctest::Approx(oracles::direct_p_norm(f, p)).epsilon(1e-12));
}

TEST_CASE("lp_log is undefined for N=1") {
    const NormSet got = norms(Signal(std::vector<double>{2.5}));
    CHECK_FALSE(got.lp_log.has_value());
    CHECK(got.l1 == 2.5);
    CHECK_THROWS_AS(lp_log_exponent(1), std::invalid_argument);
}

TEST_CASE("lp_log exponent lies in (1, 2) from N=8 upward") {
    CHECK(lp_log_exponent(8) > 1.0);
    CHECK(lp_log_exponent(8) < 2.0);
    CHECK(lp_log_exponent(1576) ==
          doctest::Approx(std::log(1576.0) / (std::log(1576.0) - 1.0)));
    // Below e^2 the exponent exceeds 2; at N=2 it is negative.
    CHECK(lp_log_exponent(7) > 2.0);
    CHECK(lp_log_exponent(2) < 0.0);
}

TEST_CASE("fourier ratio of a pure character is 1") {
    SynthSpec spec;
    spec.kind = SynthKind::character;
    spec.n = 16;
    for (std::size_t k : {0u, 1u, 7u, 15u}) {
        spec.frequency = k;
        CHECK(fourier_ratio(generate(spec)) ==
              doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("fourier ratio of a delta is sqrt(N)") {
    std::vector<double> values(16, 0.0);
    values[5] = 1.0;
    CHECK(fourier_ratio(Signal(values)) ==
          doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("fourier ratio of the zero signal is an error") {
    CHECK_THROWS_AS(fourier_ratio(Signal(std::vector<double>(8, 0.0))),
                    std::domain_error);
}

TEST_CASE("mean_center subtracts the arithmetic mean") {
    const Signal f(std::vector<double>{1.0, 2.0, 3.0});
    const Signal centered = mean_center(f);
    CHECK(approx_complex(centered[0], Complex(-1.0, 0.0), 1e-15));
    CHECK(approx_complex(centered[1], Complex(0.0, 0.0), 1e-15));
    CHECK(approx_complex(centered[2], Complex(1.0, 0.0), 1e-15));
}

TEST_CASE("mean_center maps a constant to the zero signal") {
    const Signal f(std::vector<double>(10, 5.0));
    const Signal centered = mean_center(f);
    CHECK(centered.is_zero());
    CHECK_THROWS_AS(fourier_ratio(centered), std::domain_error);
}

TEST_CASE("mean_center leaves a mean below 1e-12 * max|f|") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        Signal f = oracles::random_complex_signal(257, seed);
        // bias the signal so the subtraction is nontrivial
        std::vector<Complex> biased(f.values());
        for (Complex& z : biased) z += Complex(1e6, -3e5);
        const Signal centered = mean_center(Signal(std::move(biased)));
        Complex mean(0.0, 0.0);
        for (const Complex& z : centered.values()) mean += z;
        mean /= static_cast<double>(centered.size());
        CHECK(std::abs(mean) <= 1e-12 * centered.max_abs());
    }
}

TEST_CASE("unitarity: dft preserves the l2 norm") {
    std::uint64_t seed = 500;
    for (std::size_t n : {2u, 3u, 5u, 16u, 64u, 128u, 263u, 526u}) {
        const Signal f = oracles::random_complex_signal(n, seed++);
        CHECK(std::abs(dft(f).norms().l2 - f.norms().l2) <=
              1e-9 * f.norms().l2);
    }
}

TEST_CASE("fourier ratio lies in [1, sqrt(N)] on random signals") {
    std::uint64_t seed = 900;
    for (std::size_t n : {2u, 4u, 9u, 33u, 100u, 128u}) {
        for (int rep = 0; rep < 5; ++rep) {
            const Signal f = oracles::random_complex_signal(n, seed++);
            const double fr = fourier_ratio(f);
            CHECK(fr >= 1.0 - 1e-9);
            CHECK(fr <= std::sqrt(static_cast<double>(n)) + 1e-9);
        }
    }
}

TEST_CASE("fourier ratio is scale invariant") {
    const Signal f = oracles::random_complex_signal(48, 20250704);
    const double fr = fourier_ratio(f);
    for (const Complex c : {Complex(3.0, 0.0), Complex(-1e-6, 0.0),
                            Complex(0.0, 2.0), Complex(1.5, -2.5)}) {
        std::vector<Complex> scaled(f.values());
        for (Complex& z : scaled) z *= c;
        CHECK(fourier_ratio(Signal(std::move(scaled))) ==
              doctest::Approx(fr).epsilon(1e-10));
    }
}

TEST_CASE("fourier ratio is invariant under cyclic time shifts") {
    const Signal f = oracles::random_complex_signal(60, 20250705);
    const double fr = fourier_ratio(f);
    for (std::size_t shift : {1u, 7u, 30u, 59u}) {
        CHECK(fourier_ratio(cyclic_shift(f, shift)) ==
              doctest::Approx(fr).epsilon(1e-10));
    }
}

TEST_CASE("l1 >= l2, and lp_log >= l2 once the exponent drops below 2") {
    std::uint64_t seed = 7000;
    for (std::size_t n : {8u, 16u, 64u, 128u, 526u}) {
        const Signal f = oracles::random_complex_signal(n, seed++);
        const NormSet ns = norms(f);
        CHECK(ns.l1 >= ns.l2);
        REQUIRE(ns.lp_log.has_value());
        CHECK(*ns.lp_log >= ns.l2 * (1.0 - 1e-12));
    }
}

}  // TEST_SUITE

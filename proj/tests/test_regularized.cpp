#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mordell/quad.hpp"
#include "mordell/regularized.hpp"
#include "oracles.hpp"

using namespace mordell;
using namespace mordell::regularized;
constexpr double pi = std::numbers::pi;

namespace {

const RegParams base{0.1, 0.05, std::nullopt};

double gauss(double x) { return std::exp(-x * x); }
const quad::GaussianDecay gauss_hint{1.0 / pi};

// Direct evaluation of the Lemma 1 line integrand on [-400, 400] by the midpoint rule.
double lemma1_oracle(double a, double b, const RegParams& reg) {
    const double c = std::cos(pi * reg.omega);
    const auto f = [=](double x) {
        const double num = std::cosh(x) - std::cosh(b) * c;
        const double den = (std::cosh(x + b) - c) * (std::cosh(x - b) - c);
        return num / den * std::exp((1.0 - reg.epsilon) * x) * std::cos(a * x);
    };
    return oracle::midpoint(f, -400.0, 400.0, 2e-3) / (2.0 * pi);
}

}  // namespace

TEST(RegParams, Validation) {
    EXPECT_NO_THROW(base.validate());
    EXPECT_THROW((RegParams{0.0, 0.5, std::nullopt}.validate()), std::domain_error);
    EXPECT_THROW((RegParams{0.5, 1.0, std::nullopt}.validate()), std::domain_error);
    EXPECT_NO_THROW((RegParams{0.3, 0.2, 3u}.validate()));
    EXPECT_THROW((RegParams{0.3, 0.25, 3u}.validate()), std::domain_error);
    EXPECT_THROW((RegParams{0.3, 0.2, 0u}.validate()), std::domain_error);
    EXPECT_THROW((void)lemma1_closed_form(1.0, 1.0, {1.5, 0.1, std::nullopt}), std::domain_error);
}

TEST(Lemma1, Examples) {
    const auto line = lemma1_line_integral(0.5, 0.7, base);
    EXPECT_NEAR(line.value, lemma1_closed_form(0.5, 0.7, base), 1e-9);
    EXPECT_FALSE(line.slow_decay);
    EXPECT_NEAR(line.value, lemma1_oracle(0.5, 0.7, base), 1e-6);
}

TEST(Lemma1, Parity) {
    const double v = lemma1_line_integral(0.5, 0.7, base).value;
    EXPECT_NEAR(lemma1_line_integral(0.5, -0.7, base).value, v, 1e-12);
    EXPECT_NEAR(lemma1_line_integral(-0.5, 0.7, base).value, v, 1e-12);
    const double c = lemma1_closed_form(0.5, 0.7, base);
    EXPECT_NEAR(lemma1_closed_form(-0.5, 0.7, base), c, 1e-12);
    EXPECT_NEAR(lemma1_closed_form(0.5, -0.7, base), c, 1e-12);
}

TEST(Lemma1, LimitAndExtrapolation) {
    const RegParams tiny{1e-4, 1e-4, std::nullopt};
    EXPECT_NEAR(lemma1_closed_form(1.0, 1.0, tiny), -std::sin(1.0) / (std::tanh(pi) * std::tanh(1.0)), 1e-3);
    const std::array<double, 3> eps{1e-2, 1e-3, 1e-4};
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 0.5}}) {
        EXPECT_NEAR(extrapolated_limit(Lemma::first, a, b, eps), lemma1_limit(a, b), 1e-6) << a << ' ' << b;
    }
}

TEST(Lemma1, SlowDecayFlag) {
    EXPECT_TRUE((lemma1_line_integral(1.0, 1.0, {5e-4, 0.1, std::nullopt})).slow_decay);
}

TEST(Lemma2, Examples) {
    EXPECT_NEAR(lemma2_line_integral(0.5, 0.7, base).value, lemma2_closed_form(0.5, 0.7, base), 1e-9);
    const RegParams tiny{1e-4, 1e-4, std::nullopt};
    EXPECT_NEAR(lemma2_closed_form(1.0, 1.0, tiny), -std::sin(0.5) / (2.0 * std::tanh(pi / 2) * std::tanh(0.5)),
                1e-3);
    const std::array<double, 3> eps{1e-2, 1e-3, 1e-4};
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 0.5}}) {
        EXPECT_NEAR(extrapolated_limit(Lemma::second, a, b, eps), lemma2_limit(a, b), 1e-6) << a << ' ' << b;
    }
}

TEST(Lemma2, Parity) {
    const double v = lemma2_line_integral(0.5, 0.7, base).value;
    EXPECT_NEAR(lemma2_line_integral(0.5, -0.7, base).value, v, 1e-12);
    EXPECT_NEAR(lemma2_line_integral(-0.5, 0.7, base).value, v, 1e-12);
}

TEST(Extrapolation, ExactForLowDegree) {
    const std::array<double, 3> x{0.1, 0.2, 0.4};
    const std::array<double, 3> y{1.0 + 2 * 0.1 + 3 * 0.01, 1.0 + 2 * 0.2 + 3 * 0.04, 1.0 + 2 * 0.4 + 3 * 0.16};
    EXPECT_NEAR(extrapolate_to_zero(x, y), 1.0, 1e-13);
    EXPECT_THROW((void)extrapolate_to_zero(std::span<const double>(x), std::span<const double>(y).first(2)),
                 std::invalid_argument);
}

TEST(RegularizedProperties, LineEqualsClosedFormGrid) {
    for (double a : {0.5, 1.0, 2.0}) {
        for (double b : {0.3, 0.7, 1.5}) {
            for (const RegParams reg : {RegParams{0.1, 0.05, std::nullopt}, RegParams{0.2, 0.3, std::nullopt}}) {
                EXPECT_LE(std::abs(lemma1_line_integral(a, b, reg).value - lemma1_closed_form(a, b, reg)), 1e-8)
                    << a << ' ' << b;
                EXPECT_LE(std::abs(lemma2_line_integral(a, b, reg).value - lemma2_closed_form(a, b, reg)), 1e-8)
                    << a << ' ' << b;
            }
        }
    }
}

TEST(RegularizedProperties, FirstOrderConvergence) {
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 0.5}, std::pair{0.7, 1.3}}) {
        const auto err = [&](double e) {
            return std::abs(lemma1_closed_form(a, b, {e, e, std::nullopt}) - lemma1_limit(a, b));
        };
        const double order = std::log2(err(2e-3) / err(1e-3));
        EXPECT_GE(order, 0.95) << a << ' ' << b;
    }
}

TEST(RegularizedProperties, HalfArgumentConsistency) {
    // The limits satisfy L2(2a, b) = L1(a, b) tanh(b) / (2 tanh(b/2)); the
    // closed forms reproduce it once the regularization is small.
    const RegParams tiny{1e-5, 1e-5, std::nullopt};
    for (double a : {0.5, 1.0}) {
        for (double b : {0.5, 1.5}) {
            const double scale = std::tanh(b) / (2.0 * std::tanh(b / 2.0));
            EXPECT_NEAR(lemma2_limit(2.0 * a, b), lemma1_limit(a, b) * scale, 1e-14);
            EXPECT_NEAR(lemma2_closed_form(2.0 * a, b, tiny), lemma1_closed_form(a, b, tiny) * scale, 1e-3)
                << a << ' ' << b;
        }
    }
}

TEST(SokhotskiPlemelj, Examples) {
    EXPECT_LE(sp_limit_residual(gauss, gauss_hint, 1e-2), 0.05);
    const double r1 = sp_limit_residual(gauss, gauss_hint, 0.1);
    const double r2 = sp_limit_residual(gauss, gauss_hint, 0.05);
    const double r3 = sp_limit_residual(gauss, gauss_hint, 0.025);
    EXPECT_GE(r1 / r2, 1.7);
    EXPECT_LE(r1 / r2, 2.3);
    EXPECT_GE(r2 / r3, 1.7);
    EXPECT_LE(r2 / r3, 2.3);
}

TEST(SokhotskiPlemelj, OddTestFunction) {
    const auto odd = [](double x) { return x * std::exp(-x * x); };
    const double r1 = sp_limit_residual(odd, gauss_hint, 0.05);
    const double r2 = sp_limit_residual(odd, gauss_hint, 0.025);
    EXPECT_GE(r1 / r2, 1.7);
    EXPECT_LE(r1 / r2, 2.3);
    EXPECT_THROW((void)sp_limit_residual(gauss, gauss_hint, 0.0), std::domain_error);
}

TEST(Gr39818, Examples) {
    EXPECT_LE(gr_39818_residual(pi / 2, 1.0), 1e-10);
    EXPECT_LE(gr_39818_residual(1.0, 2.0), 1e-10);
    EXPECT_LE(gr_39818_residual(0.5, 1e-6), 1e-15);
    EXPECT_THROW((void)gr_39818_residual(0.0, 1.0), std::domain_error);
    EXPECT_THROW((void)gr_39818_residual(pi, 1.0), std::domain_error);
    EXPECT_THROW((void)gr_39818_residual(1.0, 0.0), std::domain_error);
}

TEST(Gr39818, LeftSideAgainstOracle) {
    // With the residual small, the closed form doubles as the LHS; check it by midpoint.
    const double theta = 1.0;
    const double a = 2.0;
    const double ref = oracle::midpoint(
        [=](double y) { return std::cosh(theta * y) / std::sinh(pi * y) * std::sin(a * y); }, 0.0, 20.0, 1e-4);
    EXPECT_NEAR(ref, 0.5 * std::sinh(a) / (std::cosh(a) + std::cos(theta)), 1e-8);
}

TEST(Gr39818Properties, Grid) {
    for (double theta : {0.5, pi / 2, 2.5}) {
        for (double a : {0.5, 1.0, 2.0}) {
            EXPECT_LE(gr_39818_residual(theta, a, quad::QuadConfig{}.tightened(100)), 1e-10) << theta << ' ' << a;
        }
    }
}

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "mordell/mordell1d.hpp"
#include "oracles.hpp"

using namespace mordell::mordell1d;
constexpr double pi = std::numbers::pi;

namespace {

double phi_oracle(double alpha, double tau) {
    return oracle::midpoint(
        [=](double x) { return std::cosh(pi * tau * x) / std::cosh(pi * x) * std::exp(-pi * alpha * x * x); });
}

}  // namespace

TEST(MordellArg, TaggedRepresentation) {
    const auto r = MordellArg::real(0.5);
    const auto i = MordellArg::imaginary(0.5);
    EXPECT_TRUE(r.is_real());
    EXPECT_FALSE(i.is_real());
    EXPECT_EQ(i.value(), std::complex<double>(0.0, 0.5));
    EXPECT_EQ(r.times_i().kind(), MordellArg::Kind::imaginary);
    EXPECT_EQ(i.times_i().value(), std::complex<double>(-0.5, 0.0));
    EXPECT_EQ(r.negated().magnitude(), -0.5);
    EXPECT_THROW((void)MordellArg::real(std::nan("")), std::invalid_argument);
}

TEST(Phi, Examples) {
    EXPECT_NEAR(phi({1.0, MordellArg::imaginary(1.0)}), 0.5, 1e-13);
    const double j = phi({1.0, MordellArg::real(0.0)});
    EXPECT_NEAR(j, phi_oracle(1.0, 0.0), 1e-9);
    EXPECT_NEAR(phi({1.0, MordellArg::imaginary(0.5)}), phi_oracle(1.0, 0.5), 1e-9);
    EXPECT_NEAR(phi({1.0, MordellArg::imaginary(3.0)}), phi_oracle(1.0, 3.0), 1e-9);
}

TEST(Phi, RealArgumentMatchesOracle) {
    const auto f = [](double x) { return std::cos(pi * 0.7 * x) / std::cosh(pi * x) * std::exp(-pi * 0.4 * x * x); };
    EXPECT_NEAR(phi({0.4, MordellArg::real(0.7)}), oracle::midpoint(f), 1e-9);
}

TEST(Phi, RejectsNonPositiveAlpha) {
    EXPECT_THROW((void)phi({0.0, MordellArg::real(1.0)}), std::domain_error);
    EXPECT_THROW((void)psi({-1.0, MordellArg::real(1.0)}), std::domain_error);
    EXPECT_THROW((void)big_f({-1.0, MordellArg::real(1.0)}), std::domain_error);
}

TEST(Psi, Examples) {
    EXPECT_EQ(psi({2.0, MordellArg::real(0.0)}), std::complex<double>(0.0, 0.0));
    const auto unit = psi({1.0, MordellArg::imaginary(1.0)});
    EXPECT_EQ(unit.real(), 0.0);
    EXPECT_NEAR(unit.imag(), 0.5, 1e-13);
}

TEST(Psi, ThirdIdentity) {
    // sinh(pi t/3)/sinh(pi t) = 1/(2 cosh(2 pi t/3) + 1); with t = 3x:
    // psi_{a/3}(i/3) = 3 i int e^{-3 pi a x^2} / (2 cosh 2 pi x + 1) dx.
    for (double a : {1.0, 2.0}) {
        const auto v = psi({a / 3.0, MordellArg::imaginary(1.0 / 3.0)});
        const double ref = 3.0 * oracle::midpoint([a](double x) {
            return std::exp(-3.0 * pi * a * x * x) / (2.0 * std::cosh(2.0 * pi * x) + 1.0);
        });
        EXPECT_EQ(v.real(), 0.0);
        EXPECT_NEAR(v.imag(), ref, 1e-9) << a;
    }
    // With alpha = 3 and no factor 3 the relation does not hold.
    const double literal = oracle::midpoint(
        [](double x) { return std::exp(-3.0 * pi * x * x) / (2.0 * std::cosh(2.0 * pi * x) + 1.0); });
    EXPECT_GT(std::abs(psi({3.0, MordellArg::imaginary(1.0 / 3.0)}).imag() - literal), 1e-3);
}

TEST(Psi, RealArgumentMatchesOracle) {
    const auto f = [](double x) {
        return std::sin(pi * 0.6 * x) / std::sinh(pi * x) * std::exp(-pi * 1.5 * x * x);
    };
    const auto v = psi({1.5, MordellArg::real(0.6)});
    EXPECT_EQ(v.imag(), 0.0);
    EXPECT_NEAR(v.real(), oracle::midpoint(f), 1e-9);
}

TEST(BigF, Examples) {
    EXPECT_EQ(big_f({1.0, MordellArg::real(0.0)}), std::complex<double>(0.0, 0.0));
    const auto f = [](double x) { return std::sin(pi * x) / std::tanh(pi * x) * std::exp(-pi * x * x); };
    EXPECT_NEAR(big_f({1.0, MordellArg::real(1.0)}).real(), oracle::midpoint(f), 1e-9);
    const auto imag = big_f({2.0, MordellArg::imaginary(0.5)});
    EXPECT_LT(std::abs(imag.real()), 1e-15);
    EXPECT_GT(imag.imag(), 0.0);
}

TEST(BigFTransform, Examples) {
    EXPECT_LE(big_f_transform_residual(1.0, MordellArg::real(1.0)), 1e-9);
    EXPECT_EQ(big_f_transform_residual(0.5, MordellArg::real(0.0)), 0.0);
    EXPECT_LE(big_f_transform_residual(2.0, MordellArg::imaginary(0.5)), 1e-9);
}

// ---------------------------------------------------------------------------
// Invariants & properties
// ---------------------------------------------------------------------------

TEST(Mordell1dProperties, ExactParity) {
    for (double a : {0.5, 2.0}) {
        for (auto t : {MordellArg::real(0.3), MordellArg::real(1.7), MordellArg::imaginary(0.4),
                       MordellArg::imaginary(2.2)}) {
            EXPECT_EQ(phi({a, t.negated()}), phi({a, t}));
            EXPECT_EQ(psi({a, t.negated()}), -psi({a, t}));
        }
    }
}

TEST(Mordell1dProperties, PhiAtZeroDecreasingInAlpha) {
    double prev = phi({0.5, MordellArg::real(0.0)});
    for (double a : {1.0, 2.0, 4.0}) {
        const double v = phi({a, MordellArg::real(0.0)});
        EXPECT_LT(v, prev) << a;
        prev = v;
    }
}

TEST(Mordell1dProperties, PsiImaginaryPositiveIncreasing) {
    for (double a : {0.5, 1.0, 3.0}) {
        double prev = 0.0;
        for (double tau : {0.1, 0.25, 0.5, 0.75, 1.0}) {
            const auto v = psi({a, MordellArg::imaginary(tau)});
            const auto over_i = v / std::complex<double>(0.0, 1.0);
            EXPECT_EQ(over_i.imag(), 0.0);
            EXPECT_GT(over_i.real(), prev) << a << ' ' << tau;
            prev = over_i.real();
        }
    }
}

TEST(Mordell1dProperties, TransformationGrid) {
    for (double a : {0.5, 1.0, 2.0, 4.0}) {
        for (auto t : {MordellArg::real(0.25), MordellArg::real(0.5), MordellArg::real(1.0),
                       MordellArg::imaginary(0.25), MordellArg::imaginary(0.75)}) {
            EXPECT_LE(big_f_transform_residual(a, t), 1e-8) << a << ' ' << t.magnitude();
        }
    }
}

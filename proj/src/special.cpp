#include "mordell/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mordell::special {

namespace {
constexpr double kSeriesCutoff = 1e-2;
constexpr double kLargeArgument = 350.0;
}  // namespace

double coth_scaled(double x) {
    const double ax = std::abs(x);
    if (ax < kSeriesCutoff) {
        // 1 + x^2/3 - x^4/45 + 2x^6/945; next term is below 1e-19 here.
        const double x2 = x * x;
        return 1.0 + x2 * (1.0 / 3.0 + x2 * (-1.0 / 45.0 + x2 * (2.0 / 945.0)));
    }
    if (ax > 20.0) {
        return ax;  // tanh is 1 to working precision
    }
    return ax / std::tanh(ax);
}

double x_over_sinh(double x) {
    const double ax = std::abs(x);
    if (ax < kSeriesCutoff) {
        const double x2 = x * x;
        return 1.0 + x2 * (-1.0 / 6.0 + x2 * (7.0 / 360.0 + x2 * (-31.0 / 15120.0)));
    }
    if (ax > kLargeArgument) {
        return 2.0 * ax * std::exp(-ax);
    }
    return ax / std::sinh(ax);
}

double sinc(double x) {
    if (std::abs(x) < kSeriesCutoff) {
        const double x2 = x * x;
        return 1.0 + x2 * (-1.0 / 6.0 + x2 * (1.0 / 120.0 + x2 * (-1.0 / 5040.0)));
    }
    return std::sin(x) / x;
}

double sinhc(double x) {
    if (std::abs(x) < kSeriesCutoff) {
        const double x2 = x * x;
        return 1.0 + x2 * (1.0 / 6.0 + x2 * (1.0 / 120.0 + x2 * (1.0 / 5040.0)));
    }
    return std::sinh(x) / x;
}

double sech(double x) {
    const double ax = std::abs(x);
    if (ax > kLargeArgument) {
        return 2.0 * std::exp(-ax);
    }
    return 1.0 / std::cosh(ax);
}

double hyperbolic_ratio(double num_scale, double den_scale, double x) {
    if (den_scale == 0.0) {
        throw std::invalid_argument("hyperbolic_ratio: den_scale must be non-zero");
    }
    const double u = num_scale * x;
    const double v = den_scale * x;
    if (std::abs(u) <= kLargeArgument && std::abs(v) <= kLargeArgument) {
        return (num_scale / den_scale) * sinhc(u) / sinhc(v);
    }
    // sinh(u)/sinh(v) = sgn * e^{|u|-|v|} (1 - e^{-2|u|}) / (1 - e^{-2|v|})
    const double au = std::abs(u);
    const double av = std::abs(v);
    const double sign = ((u < 0) != (v < 0)) ? -1.0 : 1.0;
    const double expo = au - av;
    if (expo > std::log(std::numeric_limits<double>::max())) {
        throw std::range_error("hyperbolic_ratio: result overflows");
    }
    return sign * std::exp(expo) * (-std::expm1(-2.0 * au)) / (-std::expm1(-2.0 * av));
}

double cosh_ratio(double num_scale, double den_scale, double x) {
    const double au = std::abs(num_scale * x);
    const double av = std::abs(den_scale * x);
    if (au <= kLargeArgument && av <= kLargeArgument) {
        return std::cosh(au) / std::cosh(av);
    }
    const double expo = au - av;
    if (expo > std::log(std::numeric_limits<double>::max())) {
        throw std::range_error("cosh_ratio: result overflows");
    }
    return std::exp(expo) * (1.0 + std::exp(-2.0 * au)) / (1.0 + std::exp(-2.0 * av));
}

double fresnel_value(double alpha) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("fresnel_value: alpha must be positive");
    }
    return std::sqrt(std::numbers::pi / (8.0 * alpha));
}

double kernel_sin2d(double x, double y, double gamma, double a_scale, double b_scale) {
    // sin(pi g x y) / (x y) * [a x / tanh(a x)] * [b y / tanh(b y)] / (a b)
    const double u = std::numbers::pi * gamma * x * y;
    return std::numbers::pi * gamma * sinc(u) * coth_scaled(a_scale * x) *
           coth_scaled(b_scale * y) / (a_scale * b_scale);
}

SelfReciprocalFn gaussian_sech_eigenfunction() {
    return {[](double x) { return std::exp(-0.5 * x * x); }, 1.0,
            quad::GaussianDecay{0.5 / std::numbers::pi}};
}

SelfReciprocalFn sech_eigenfunction() {
    const double scale = std::sqrt(0.5 * std::numbers::pi);
    return {[scale](double x) { return sech(scale * x); }, 1.0, quad::ExponentialDecay{scale}};
}

double eigen_residual(const SelfReciprocalFn& f, double b, const quad::QuadConfig& cfg) {
    if (!(b >= 0.0)) {
        throw std::domain_error("eigen_residual: b must be non-negative");
    }
    const quad::Integrand<double> integrand = [&](double x) { return f.eval(x) * std::cos(b * x); };
    const auto r = quad::integrate_semi_infinite(integrand, f.decay, cfg);
    return std::abs(std::sqrt(2.0 / std::numbers::pi) * r.value - f.eval(b));
}

}  // namespace mordell::special

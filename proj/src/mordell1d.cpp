#include "mordell/mordell1d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mordell/special.hpp"

namespace mordell::mordell1d {

namespace {
constexpr double pi = std::numbers::pi;

// Gaussian hint for e^{-pi a x^2} times a hyperbolic factor growing at most
// like e^{growth x}.
quad::GaussianDecay weight(double alpha, double growth) {
    return {alpha, std::max(growth, 0.0)};
}
}  // namespace

MordellArg::MordellArg(Kind kind, double magnitude) : kind_(kind), magnitude_(magnitude) {
    if (!std::isfinite(magnitude)) {
        throw std::invalid_argument("MordellArg: magnitude must be finite");
    }
}

void MordellParams::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::domain_error("Mordell integral: alpha must be positive");
    }
}

double phi(const MordellParams& p, const quad::QuadConfig& cfg) {
    p.validate();
    const double a = p.alpha;
    // Even in theta: integrate with |theta|.
    const double t = std::abs(p.theta.magnitude());
    if (p.theta.is_real()) {
        const quad::Integrand<double> f = [=](double x) {
            return std::cos(pi * t * x) * special::sech(pi * x) * std::exp(-pi * a * x * x);
        };
        return quad::integrate_semi_infinite(f, weight(a, 0.0), cfg).value;
    }
    const quad::Integrand<double> f = [=](double x) {
        return special::cosh_ratio(pi * t, pi, x) * std::exp(-pi * a * x * x);
    };
    return quad::integrate_semi_infinite(f, weight(a, pi * (t - 1.0)), cfg).value;
}

cplx psi(const MordellParams& p, const quad::QuadConfig& cfg) {
    p.validate();
    const double a = p.alpha;
    const double t = std::abs(p.theta.magnitude());
    const double sign = p.theta.magnitude() < 0.0 ? -1.0 : 1.0;
    if (t == 0.0) {
        return {0.0, 0.0};
    }
    if (p.theta.is_real()) {
        // sin(pi t x)/sinh(pi x) = t sinc(pi t x) * (pi x / sinh(pi x))
        const quad::Integrand<double> f = [=](double x) {
            return t * special::sinc(pi * t * x) * special::x_over_sinh(pi * x) *
                   std::exp(-pi * a * x * x);
        };
        return {sign * quad::integrate_semi_infinite(f, weight(a, 0.0), cfg).value, 0.0};
    }
    const quad::Integrand<double> f = [=](double x) {
        return special::hyperbolic_ratio(pi * t, pi, x) * std::exp(-pi * a * x * x);
    };
    const double v = quad::integrate_semi_infinite(f, weight(a, pi * (t - 1.0)), cfg).value;
    return {0.0, sign * v};
}

cplx big_f(const MordellParams& p, const quad::QuadConfig& cfg) {
    p.validate();
    const double a = p.alpha;
    const double t = std::abs(p.theta.magnitude());
    const double sign = p.theta.magnitude() < 0.0 ? -1.0 : 1.0;
    if (t == 0.0) {
        return {0.0, 0.0};
    }
    // sin(pi t x)/tanh(pi x) = [sin(pi t x)/(pi x)] * coth_scaled(pi x)
    if (p.theta.is_real()) {
        const quad::Integrand<double> f = [=](double x) {
            return t * special::sinc(pi * t * x) * special::coth_scaled(pi * x) *
                   std::exp(-pi * a * x * x);
        };
        return {sign * quad::integrate_semi_infinite(f, weight(a, 0.0), cfg).value, 0.0};
    }
    // sin(i pi tau x) = i sinh(pi tau x); the Gaussian is folded in before
    // the hyperbolic growth so large tau cannot overflow.
    const quad::Integrand<double> f = [=](double x) {
        const double u = pi * t * x;
        const double growth = u > 350.0
                                  ? 0.5 * std::exp(u - pi * a * x * x) * -std::expm1(-2.0 * u) / (pi * x)
                                  : t * special::sinhc(u) * std::exp(-pi * a * x * x);
        return growth * special::coth_scaled(pi * x);
    };
    const double v = quad::integrate_semi_infinite(f, weight(a, pi * t), cfg).value;
    return {0.0, sign * v};
}

double big_f_transform_residual(double alpha, const MordellArg& theta, const quad::QuadConfig& cfg) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("big_f_transform_residual: alpha must be positive");
    }
    const cplx lhs = big_f({alpha, theta}, cfg);
    const cplx t = theta.value();
    const cplx prefactor = cplx(0.0, -1.0) / std::sqrt(alpha) * std::exp(-pi * t * t / (4.0 * alpha));
    const cplx rhs = prefactor * big_f({1.0 / alpha, theta.times_i().scaled(1.0 / alpha)}, cfg);
    return std::abs(lhs - rhs);
}

}  // namespace mordell::mordell1d

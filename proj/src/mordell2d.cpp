#include "mordell/mordell2d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mordell/mordell1d.hpp"

namespace mordell::mordell2d {

namespace {

constexpr double pi = std::numbers::pi;
const double sqrt_pi = std::sqrt(pi);

// e^{-x^2} in the pi-scaled Gaussian hint convention.
constexpr quad::GaussianDecay kUnitGaussian{1.0 / pi};

void require_product(double alpha, double beta, std::initializer_list<double> allowed,
                     const char* what) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::domain_error(std::string(what) + ": alpha and beta must be positive");
    }
    const double prod = alpha * beta;
    const bool ok = std::any_of(allowed.begin(), allowed.end(),
                                [prod](double target) { return std::abs(prod - target) <= 1e-12; });
    if (!ok) {
        throw std::domain_error(std::string(what) + ": alpha * beta outside the admissible family");
    }
}

double gauss2(double x, double y) { return std::exp(-x * x - y * y); }

}  // namespace

void DoubleMordellParams::validate() const {
    if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta) ||
        !std::isfinite(gamma)) {
        throw std::domain_error("double Mordell integral: alpha and beta must be positive");
    }
}

void ReductionInstance::validate() const {
    if (n < 1) {
        throw std::domain_error("reduction: n must be >= 1");
    }
    if (!(alpha > 0.0)) {
        throw std::domain_error("reduction: alpha must be positive");
    }
}

double phi2(const DoubleMordellParams& p, const quad::QuadConfig& cfg) {
    p.validate();
    const quad::Integrand2d<double> f = [a = p.alpha, b = p.beta, g = p.gamma](double x, double y) {
        return std::cos(pi * g * x * y) * special::sech(pi * x) * special::sech(pi * y) *
               std::exp(-0.5 * pi * (a * x * x + b * y * y));
    };
    return quad::integrate_2d(f, quad::GaussianDecay{0.5 * p.alpha}, quad::GaussianDecay{0.5 * p.beta},
                              cfg)
        .value;
}

double psi_double(const DoubleMordellParams& p, const quad::QuadConfig& cfg) {
    p.validate();
    if (p.gamma == 0.0) {
        return 0.0;
    }
    if (p.gamma < 0.0) {
        return -psi_double({p.alpha, p.beta, -p.gamma}, cfg);
    }
    const quad::Integrand2d<double> f = [a = p.alpha, b = p.beta, g = p.gamma](double x, double y) {
        return special::kernel_sin2d(x, y, g, pi, pi) * std::exp(-0.5 * pi * (a * x * x + b * y * y));
    };
    return quad::integrate_2d(f, quad::GaussianDecay{0.5 * p.alpha}, quad::GaussianDecay{0.5 * p.beta},
                              cfg)
        .value;
}

// ---------------------------------------------------------------------------
// Closed forms from self-reciprocal functions
// ---------------------------------------------------------------------------

double theorem_2d_lhs(double alpha, double beta, const quad::QuadConfig& cfg) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::domain_error("theorem_2d_lhs: alpha and beta must be positive");
    }
    const quad::Integrand2d<double> f = [=](double x, double y) {
        return special::kernel_sin2d(x, y, 2.0 / pi, alpha, beta) * gauss2(x, y);
    };
    return quad::integrate_2d(f, kUnitGaussian, kUnitGaussian, cfg).value;
}

double theorem_2d_rhs(double alpha, double beta) {
    return std::pow(pi, 1.5) * (1.0 / alpha + 1.0 / beta) / 8.0;
}

double theorem_2d_residual(double alpha, double beta, const quad::QuadConfig& cfg) {
    require_product(alpha, beta, {pi, 2.0 * pi}, "theorem_2d_residual");
    return std::abs(theorem_2d_lhs(alpha, beta, cfg) - theorem_2d_rhs(alpha, beta));
}

double cor_tanh_over_tanh_lhs(double alpha, const quad::QuadConfig& cfg) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("cor_tanh_over_tanh: alpha must be positive");
    }
    const double beta = pi / alpha;
    // sin(2xy)/tanh(b y) = 2x sinc(2xy) coth_scaled(b y) / b
    const quad::Integrand2d<double> f = [=](double x, double y) {
        return std::tanh(alpha * x) * 2.0 * x * special::sinc(2.0 * x * y) *
               special::coth_scaled(beta * y) / beta * gauss2(x, y);
    };
    return quad::integrate_2d(f, kUnitGaussian, kUnitGaussian, cfg).value;
}

double cor_tanh_over_tanh_residual(double alpha, const quad::QuadConfig& cfg) {
    return std::abs(cor_tanh_over_tanh_lhs(alpha, cfg) - sqrt_pi * alpha / 8.0);
}

double cor_sinh_lhs(double alpha, const quad::QuadConfig& cfg) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("cor_sinh: alpha must be positive");
    }
    const double beta = 2.0 * pi / alpha;
    const quad::Integrand2d<double> f = [=](double x, double y) {
        return 2.0 * special::sinc(2.0 * x * y) * special::coth_scaled(alpha * x) *
               special::x_over_sinh(beta * y) / (alpha * beta) * gauss2(x, y);
    };
    return quad::integrate_2d(f, kUnitGaussian, kUnitGaussian, cfg).value;
}

double cor_sinh_residual(double alpha, const quad::QuadConfig& cfg) {
    return std::abs(cor_sinh_lhs(alpha, cfg) - sqrt_pi * alpha / 16.0);
}

double eigen_lemma_residual(const special::SelfReciprocalFn& f, double alpha, double beta,
                            const quad::QuadConfig& cfg) {
    require_product(alpha, beta, {pi, 0.5 * pi}, "eigen_lemma_residual");
    for (double b : {0.0, 0.5, 1.0, 2.0}) {
        if (special::eigen_residual(f, b, cfg) > 1e-8) {
            throw std::domain_error("eigen_lemma_residual: f is not self-reciprocal");
        }
    }
    const quad::Integrand2d<double> g = [&](double x, double y) {
        return special::kernel_sin2d(x, y, 1.0 / pi, alpha, beta) * f.eval(x) * f.eval(y);
    };
    const double lhs = quad::integrate_2d(g, f.decay, f.decay, cfg).value;
    const double rhs = std::pow(pi, 1.5) / (4.0 * std::sqrt(2.0)) * (1.0 / alpha + 1.0 / beta) *
                       f.value_at_zero * f.value_at_zero;
    return std::abs(lhs - rhs);
}

// ---------------------------------------------------------------------------
// Transformation and reduction of Psi
// ---------------------------------------------------------------------------

double psi_transform_residual(const DoubleMordellParams& p, const quad::QuadConfig& cfg) {
    p.validate();
    if (!(p.gamma > 0.0)) {
        throw std::domain_error("psi_transform_residual: gamma must be positive");
    }
    const double d = p.alpha * p.beta + p.gamma * p.gamma;
    const double lhs = psi_double(p, cfg);
    const double rhs =
        2.0 / std::sqrt(d) * psi_double({4.0 * p.alpha / d, 4.0 * p.beta / d, 4.0 * p.gamma / d}, cfg);
    return std::abs(lhs - rhs);
}

double psi_square_sum(unsigned n, double alpha, const quad::QuadConfig& cfg) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("psi_square_sum: alpha must be positive");
    }
    double s = 0.0;
    const double nn = static_cast<double>(n);
    for (unsigned k = 1; k < n; ++k) {
        const double tau = (nn - 2.0 * k) / nn;
        const auto v = mordell1d::psi({alpha / nn, mordell1d::MordellArg::imaginary(tau)}, cfg);
        s += (v * v).real();
    }
    return s;
}

double reduction_rhs(const ReductionInstance& inst, const quad::QuadConfig& cfg) {
    inst.validate();
    const double sa = std::sqrt(inst.alpha);
    return sa + 1.0 / sa - (4.0 / inst.n) * sa * psi_square_sum(inst.n, inst.alpha, cfg);
}

ReductionSides reduction_sides(const ReductionInstance& inst, const quad::QuadConfig& cfg) {
    inst.validate();
    const double n = inst.n;
    const double a = inst.alpha;
    // Each Psi gets its own truncation radii from its own Gaussian rates.
    const double small = 8.0 / std::sqrt(n) * psi_double({2.0 * a / n, 2.0 / (a * n), 2.0 / n}, cfg);
    const double large = std::sqrt(32.0 * n) * psi_double({n / a, a * n, n}, cfg);
    return {small, large, reduction_rhs(inst, cfg)};
}

double reduction_residual(const ReductionInstance& inst, const quad::QuadConfig& cfg) {
    const auto s = reduction_sides(inst, cfg);
    return std::max({std::abs(s.scaled_small - s.scaled_large), std::abs(s.scaled_small - s.closed),
                     std::abs(s.scaled_large - s.closed)});
}

double quadratic_symmetry_residual(unsigned n, double alpha, const quad::QuadConfig& cfg) {
    if (n < 2) {
        throw std::domain_error("quadratic_symmetry_residual: n must be >= 2");
    }
    if (!(alpha > 0.0)) {
        throw std::domain_error("quadratic_symmetry_residual: alpha must be positive");
    }
    const double beta = 1.0 / alpha;
    if (alpha == beta) {
        return 0.0;
    }
    return std::abs(std::sqrt(alpha) * psi_square_sum(n, alpha, cfg) -
                    std::sqrt(beta) * psi_square_sum(n, beta, cfg));
}

// ---------------------------------------------------------------------------
// Reduction of Phi
// ---------------------------------------------------------------------------

PhiReductionSides phi_reduction_sides(unsigned n, double alpha, const quad::QuadConfig& cfg) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("phi_reduction: alpha must be positive");
    }
    const double m = 4.0 * n + 2.0;
    const double lhs = (2.0 * n + 1.0) * std::sqrt(2.0 / alpha) * phi2({1.0 / alpha, m * m * alpha, m}, cfg);

    const auto phi_i = [&](double tau) {
        return mordell1d::phi({alpha, mordell1d::MordellArg::imaginary(tau)}, cfg);
    };
    const double half = phi_i(0.5);
    double sum = half * half;
    for (unsigned k = 1; k <= n; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += 2.0 * sign * phi_i((2.0 * n + 2.0 * k + 1.0) / m) * phi_i((2.0 * n - 2.0 * k + 1.0) / m);
    }
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    return {lhs, parity * sum};
}

double phi_reduction_residual(unsigned n, double alpha, const quad::QuadConfig& cfg) {
    const auto s = phi_reduction_sides(n, alpha, cfg);
    return std::abs(s.lhs - s.rhs);
}

}  // namespace mordell::mordell2d

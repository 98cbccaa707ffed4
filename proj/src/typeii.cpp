#include "mordell/typeii.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mordell/special.hpp"

namespace mordell::typeii {

namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

void require_positive(double alpha, const char* what) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::domain_error(std::string(what) + ": alpha must be positive");
    }
}

// tanh(x) / x
double tanhc(double x) {
    return std::abs(x) < 1e-2 ? 1.0 / special::coth_scaled(x) : std::tanh(x) / x;
}

// Envelope corrections decay like e^{-2 min(pi, alpha) x}.
quad::ExponentialDecay envelope_decay(double alpha) { return {2.0 * std::min(pi, alpha)}; }

}  // namespace

double int_coth_coth(double alpha, const quad::QuadConfig& cfg) {
    require_positive(alpha, "int_coth_coth");
    // sin(a x^2) coth(pi x) coth(a x) = sinc(a x^2) [pi x coth pi x][a x coth a x] / pi
    const quad::Integrand<double> f = [=](double x) {
        return special::sinc(alpha * x * x) * special::coth_scaled(pi * x) *
               special::coth_scaled(alpha * x) / pi;
    };
    return quad::fresnel_subtracted(f, quad::FresnelKind::sin, alpha, envelope_decay(alpha), cfg)
        .value;
}

double int_coth_coth_double(double alpha, const quad::QuadConfig& cfg) {
    require_positive(alpha, "int_coth_coth_double");
    const quad::Integrand<double> f = [=](double x) {
        return 2.0 * special::sinc(2.0 * alpha * x * x) * special::coth_scaled(pi * x) *
               special::coth_scaled(alpha * x) / pi;
    };
    return quad::fresnel_subtracted(f, quad::FresnelKind::sin, 2.0 * alpha, envelope_decay(alpha),
                                    cfg)
        .value;
}

double int_tanh_coth(double alpha, const quad::QuadConfig& cfg) {
    require_positive(alpha, "int_tanh_coth");
    // tanh(a x) / tanh(pi x) = (a / pi) tanhc(a x) coth_scaled(pi x)
    const quad::Integrand<double> f = [=](double x) {
        return (alpha / pi) * tanhc(alpha * x) * special::coth_scaled(pi * x) *
               std::sin(2.0 * alpha * x * x);
    };
    return quad::fresnel_subtracted(f, quad::FresnelKind::sin, 2.0 * alpha, envelope_decay(alpha),
                                    cfg)
        .value;
}

double int_csch_coth(double alpha, const quad::QuadConfig& cfg) {
    require_positive(alpha, "int_csch_coth");
    const quad::Integrand<double> f = [=](double x) {
        return special::sinc(alpha * x * x) * special::x_over_sinh(pi * x) *
               special::coth_scaled(alpha * x) / pi;
    };
    // coth(a x) -> 1, so the envelope is 2 e^{-pi x}.
    return quad::integrate_semi_infinite(f, quad::ExponentialDecay{pi}, cfg).value;
}

double int_tanh_tanh_cos(double alpha, const quad::QuadConfig& cfg) {
    require_positive(alpha, "int_tanh_tanh_cos");
    const quad::Integrand<double> f = [=](double x) {
        return std::tanh(pi * x) * std::tanh(alpha * x) * std::cos(2.0 * alpha * x * x);
    };
    return quad::fresnel_subtracted(f, quad::FresnelKind::cos, 2.0 * alpha, envelope_decay(alpha),
                                    cfg)
        .value;
}

LhsRhs cosh_ratio_cos(double alpha, CoshRatioKind kind, double b, const quad::QuadConfig& cfg) {
    const double a = std::abs(alpha);
    if (!(a < pi)) {
        throw std::domain_error("cosh_ratio_cos: integrand is not integrable for |alpha| >= pi");
    }
    if (kind == CoshRatioKind::closed_form3) {
        const quad::Integrand<double> f = [=](double x) {
            return special::cosh_ratio(a, pi, x) * std::cos(alpha * x * x);
        };
        const double lhs = quad::integrate_semi_infinite(f, quad::ExponentialDecay{pi - a}, cfg).value;
        return {lhs, 0.5 * std::cos(alpha / 4.0)};
    }
    if (!(alpha > 0.0)) {
        throw std::domain_error("cosh_ratio_cos: glasser form needs alpha > 0");
    }
    const double c2b = std::cosh(2.0 * b);
    // cosh(pi x) cosh(a x) / (cosh 2 pi x + cosh 2b), rescaled by e^{-2 pi x}
    const quad::Integrand<double> f = [=](double x) {
        const double e2p = std::exp(-2.0 * pi * x);
        const double ratio = 0.5 * std::exp((alpha - pi) * x) * (1.0 + e2p) *
                             (1.0 + std::exp(-2.0 * alpha * x)) /
                             (1.0 + e2p * e2p + 2.0 * c2b * e2p);
        return ratio * std::cos(alpha * x * x);
    };
    const double lhs = quad::integrate_semi_infinite(f, quad::ExponentialDecay{pi - alpha}, cfg).value;
    // The phase is a/4 + a b^2 / pi^2. With a b^2 / (4 pi^2) the identity
    // already fails at b = 1 by about 4e-3.
    const double rhs = std::cos(alpha / 4.0 + alpha * b * b / (pi * pi)) / (4.0 * std::cosh(b));
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Series representation
// ---------------------------------------------------------------------------

SeriesParams SeriesParams::with_default_terms(double alpha, double b) {
    SeriesParams p{alpha, b, 1};
    p.validate();
    const double slow = std::min(b, pi * b / alpha);
    const double k = std::ceil(40.0 / slow);
    p.terms = static_cast<std::size_t>(std::min(k, 1e5));
    return p;
}

void SeriesParams::validate() const {
    require_positive(alpha, "SeriesParams");
    if (!(b > 0.0)) {
        throw std::domain_error("SeriesParams: b must be positive");
    }
    if (terms == 0) {
        throw std::invalid_argument("SeriesParams: terms must be positive");
    }
}

double SeriesParams::remainder_bound() const {
    const double k = static_cast<double>(terms) + 0.5;
    const double q2 = pi * b / alpha;
    return std::exp(-b * k) / -std::expm1(-b) +
           std::sqrt(pi / alpha) * std::exp(-q2 * k) / -std::expm1(-q2);
}

cplx series_lhs(const SeriesParams& p, const quad::QuadConfig& cfg) {
    require_positive(p.alpha, "series_lhs");
    if (!(p.b >= 0.0)) {
        throw std::domain_error("series_lhs: b must be non-negative");
    }
    const quad::Integrand<cplx> f = [a = p.alpha, b = p.b](double x) {
        return std::exp(I * (a * x * x)) * (special::sech(pi * x) * std::cos(b * x));
    };
    return quad::integrate_semi_infinite(f, quad::ExponentialDecay{pi}, cfg).value;
}

SeriesValue series_rhs(const SeriesParams& p) {
    p.validate();
    const double a = p.alpha;
    const double b = p.b;
    cplx first{};
    cplx second{};
    for (std::size_t k = 0; k < p.terms; ++k) {
        const double h = static_cast<double>(k) + 0.5;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        first += sign * std::exp(cplx(-b * h, -a * h * h));
        second += sign * std::exp(cplx(-(pi * b / a) * h, pi * pi * h * h / a));
    }
    const cplx phase = std::exp(I * (pi / 4.0 - b * b / (4.0 * a)));
    return {first + std::sqrt(pi / a) * phase * second, p.remainder_bound()};
}

cplx series_at_pi(double b) {
    return (std::exp(cplx(0.0, -pi / 4.0)) + I * std::exp(cplx(0.0, -b * b / (4.0 * pi)))) /
           (2.0 * std::cosh(b / 2.0));
}

double abs_square_identity_residual(double alpha, double b, const quad::QuadConfig& cfg) {
    require_positive(alpha, "abs_square_identity_residual");
    if (!(b > 0.0)) {
        throw std::domain_error("abs_square_identity_residual: b must be positive");
    }
    // sin(a x^2)/(sinh(pi x) sinh(a x)) = sinc(a x^2) x_over_sinh(pi x) x_over_sinh(a x) / pi
    const quad::Integrand<double> f = [=](double x) {
        return special::sinc(alpha * x * x) * special::x_over_sinh(pi * x) *
               special::x_over_sinh(alpha * x) * std::cos(b * x) / pi;
    };
    const double lhs = quad::integrate_semi_infinite(f, quad::ExponentialDecay{pi + alpha}, cfg).value;
    const double rhs = std::norm(series_lhs({alpha, b, 1}, cfg));
    return std::abs(lhs - rhs);
}

double cosh_half_product(double s, double t, const quad::QuadConfig& cfg) {
    const quad::Integrand<double> f = [=](double x) {
        return special::cosh_ratio(0.5 * s, s, x) * special::cosh_ratio(0.5 * t, t, x);
    };
    return quad::integrate_semi_infinite(f, quad::ExponentialDecay{0.5 * (s + t)}, cfg).value;
}

double r2_residual(double alpha, const quad::QuadConfig& cfg) {
    require_positive(alpha, "r2_residual");
    const quad::Integrand<double> f = [=](double x) {
        return std::cos(alpha * x * x) * special::sech(pi * x) * special::sech(alpha * x);
    };
    const double lhs =
        std::sqrt(2.0) * quad::integrate_semi_infinite(f, quad::ExponentialDecay{pi + alpha}, cfg).value;
    return std::abs(lhs - cosh_half_product(pi, alpha, cfg));
}

// ---------------------------------------------------------------------------
// Poisson summation and the I_k functions
// ---------------------------------------------------------------------------

double alternating_sum(const std::function<double(std::size_t)>& term, std::size_t n_terms) {
    const double n = static_cast<double>(n_terms);
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    double s = 0.0;
    for (std::size_t k = 0; k < n_terms; ++k) {
        const double kk = static_cast<double>(k);
        c = b - c;
        s += c * term(k);
        b = (kk + n) * (kk - n) * b / ((kk + 0.5) * (kk + 1.0));
    }
    return s / d;
}

double poisson_residual(const std::function<double(double)>& f, const quad::DecayHint& decay,
                        const quad::QuadConfig& cfg) {
    const double radius = quad::truncation_radius(decay, cfg);
    const double scale = std::max({1.0, std::abs(f(0.5)), std::abs(f(1.5))});
    if (std::abs(f(radius)) > 1e3 * std::max(cfg.abs_tol, 1e-300) * scale) {
        throw std::invalid_argument("poisson_residual: f does not decay as hinted");
    }

    constexpr std::size_t kTerms = 40;
    const auto sine_moment = [&](std::size_t k) {
        const double w = pi * (2.0 * static_cast<double>(k) + 1.0);
        const quad::Integrand<double> g = [&](double y) { return f(y) * std::sin(w * y); };
        return quad::integrate_semi_infinite(g, decay, cfg).value;
    };
    const double lhs = alternating_sum(sine_moment, kTerms);

    // Symmetric truncation over k in [-K-1, K]; negative abscissae contribute zero.
    const long kmax = static_cast<long>(std::ceil(radius));
    double rhs = 0.0;
    for (long k = -kmax - 1; k <= kmax; ++k) {
        const double y = static_cast<double>(k) + 0.5;
        if (y > 0.0) {
            rhs += ((k % 2 == 0) ? 1.0 : -1.0) * f(y);
        }
    }
    return std::abs(lhs - 0.5 * rhs);
}

cplx ik_initial_value(unsigned k, double b) {
    const double h = k + 0.5;
    return 2.0 * pi / (2.0 * k + 1.0) * std::exp(-b * h);
}

cplx ik_solution(unsigned k, double alpha, double b, const quad::QuadConfig& cfg) {
    require_positive(alpha, "ik_solution");
    if (!(b > 0.0)) {
        throw std::domain_error("ik_solution: b must be positive");
    }
    const double h = k + 0.5;
    const double odd = 2.0 * k + 1.0;
    const double sa = std::sqrt(alpha);
    const cplx first = 2.0 * pi / odd * std::exp(cplx(-b * h, -alpha * h * h));
    const quad::Integrand<cplx> g = [=](double y) {
        return std::exp(cplx(-y * b / sa, y * y)) * std::sin(y * sa * odd);
    };
    const cplx y_integral = quad::integrate_semi_infinite(g, quad::ExponentialDecay{b / sa}, cfg).value;
    const cplx phase = std::exp(I * (pi / 4.0 - b * b / (4.0 * alpha)));
    return first + 4.0 * std::sqrt(pi) / odd * phase * y_integral;
}

double ik_solution_residual(unsigned k, double alpha, double b, const quad::QuadConfig& cfg) {
    constexpr double step = 1e-4;
    require_positive(alpha - step, "ik_solution_residual");
    // The central difference divides quadrature noise by the step.
    const quad::QuadConfig fine = cfg.tightened(100.0);
    const double h = k + 0.5;
    const cplx derivative =
        (ik_solution(k, alpha + step, b, fine) - ik_solution(k, alpha - step, b, fine)) / (2.0 * step);
    const cplx source = std::sqrt(pi / alpha) * std::exp(I * (3.0 * pi / 4.0 - b * b / (4.0 * alpha)));
    return std::abs(derivative + I * (h * h) * ik_solution(k, alpha, b, fine) - source);
}

double sech_partial_fraction(double x, std::size_t max_k) {
    double s = 0.0;
    for (std::size_t k = 0; k <= max_k; ++k) {
        const double h = static_cast<double>(k) + 0.5;
        s += ((k % 2 == 0) ? 1.0 : -1.0) * (2.0 * h) / (x * x + h * h);
    }
    return s / pi;
}

}  // namespace mordell::typeii

#include "mordell/regularized.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mordell/special.hpp"

namespace mordell::regularized {

namespace {

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

// (cosh u - cosh b cos(pi w)) / ((cosh(u+b) - cos(pi w)) (cosh(u-b) - cos(pi w)))
// written as 2 e^{-|u|} * ratio(s = e^{-|u|}) so that no cosh ever overflows.
double scaled_pole_ratio(double s, double b, double c) {
    const double eb = std::exp(b);
    const double emb = 1.0 / eb;
    const double num = 1.0 + s * s - 2.0 * s * c * std::cosh(b);
    const double den = (eb + s * s * emb - 2.0 * s * c) * (emb + s * s * eb - 2.0 * s * c);
    return 2.0 * num / den;
}

LineIntegral finish(const quad::QuadResult<double>& r, double scale, const RegParams& reg) {
    return {scale * r.value, scale * r.error_estimate, reg.epsilon < 1e-3};
}

}  // namespace

void RegParams::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0) || !(omega > 0.0 && omega < 1.0)) {
        throw std::domain_error("RegParams: epsilon and omega must lie in (0, 1)");
    }
    if (coupled_n) {
        if (*coupled_n == 0) {
            throw std::domain_error("RegParams: coupled_n must be positive");
        }
        if (std::abs(2.0 * epsilon - omega * *coupled_n) > 1e-15) {
            throw std::domain_error("RegParams: coupling 2 epsilon = omega n violated");
        }
    }
}

LineIntegral lemma1_line_integral(double a, double b, const RegParams& reg,
                                  const quad::QuadConfig& cfg) {
    reg.validate();
    const double c = std::cos(pi * reg.omega);
    const double eps = reg.epsilon;
    // Fold x and -x: the real part keeps cos(ax) against e^{(1-eps)x}.
    const quad::Integrand<double> f = [=](double x) {
        const double s = std::exp(-x);
        const double ratio = scaled_pole_ratio(s, b, c);
        return ratio * (std::exp(-eps * x) + std::exp(-(2.0 - eps) * x)) * std::cos(a * x);
    };
    const auto r = quad::integrate_semi_infinite(f, quad::ExponentialDecay{eps}, cfg);
    return finish(r, 1.0 / (2.0 * pi), reg);
}

double lemma1_closed_form(double a, double b, const RegParams& reg) {
    reg.validate();
    const double e = reg.epsilon;
    const double w = reg.omega;
    const cplx pa = pi * a + I * (pi * e);
    const cplx k = I * a - e + 1.0;
    const cplx bm = b - I * (pi * w);
    const cplx bp = b + I * (pi * w);
    const cplx t1 = std::sinh(pa - k * bm) / (2.0 * std::sinh(pa) * std::sinh(bm));
    const cplx t2 = std::sinh(pa + k * bp) / (2.0 * std::sinh(pa) * std::sinh(bp));
    return (t1 - t2).imag();
}

double lemma1_limit(double a, double b) {
    return -std::sin(a * b) / (std::tanh(pi * a) * std::tanh(b));
}

LineIntegral lemma2_line_integral(double a, double b, const RegParams& reg,
                                  const quad::QuadConfig& cfg) {
    reg.validate();
    const double c = std::cos(pi * reg.omega);
    const double eps = reg.epsilon;
    // ratio(2x) * cosh(x) * e^{(1-eps)x} = e^{-|x| + (1-eps)x} ratio(e^{-2|x|}) (1 + e^{-2|x|}) / 2 * 2
    const quad::Integrand<double> f = [=](double x) {
        const double s2 = std::exp(-2.0 * x);
        const double ratio = 0.5 * scaled_pole_ratio(s2, b, c) * (1.0 + s2);
        return ratio * (std::exp(-eps * x) + std::exp(-(2.0 - eps) * x)) * std::cos(a * x);
    };
    const auto r = quad::integrate_semi_infinite(f, quad::ExponentialDecay{eps}, cfg);
    return finish(r, 1.0 / pi, reg);
}

double lemma2_closed_form(double a, double b, const RegParams& reg) {
    reg.validate();
    const double e = reg.epsilon;
    const double w = reg.omega;
    const cplx pa = pi * a + I * (pi * e);
    const cplx k = I * a - e + 1.0;
    const cplx bm = b - I * (pi * w);
    const cplx bp = b + I * (pi * w);
    const cplx t1 = std::sinh(0.5 * (pa - k * bm)) / (4.0 * std::sinh(0.5 * pa) * std::sinh(0.5 * bm));
    const cplx t2 = std::sinh(0.5 * (pa + k * bp)) / (4.0 * std::sinh(0.5 * pa) * std::sinh(0.5 * bp));
    return (t1 - t2).imag();
}

double lemma2_limit(double a, double b) {
    return -std::sin(0.5 * a * b) / (2.0 * std::tanh(0.5 * pi * a) * std::tanh(0.5 * b));
}

double extrapolate_to_zero(std::span<const double> eps, std::span<const double> values) {
    if (eps.size() != values.size() || eps.empty()) {
        throw std::invalid_argument("extrapolate_to_zero: need matching, non-empty samples");
    }
    std::vector<double> p(values.begin(), values.end());
    const std::size_t n = p.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const double x0 = eps[i];
            const double x1 = eps[i + level];
            p[i] = (x1 * p[i] - x0 * p[i + 1]) / (x1 - x0);
        }
    }
    return p[0];
}

double extrapolated_limit(Lemma which, double a, double b, std::span<const double> eps) {
    std::vector<double> values;
    values.reserve(eps.size());
    for (double e : eps) {
        const RegParams reg{e, e, std::nullopt};
        values.push_back(which == Lemma::first ? lemma1_closed_form(a, b, reg)
                                               : lemma2_closed_form(a, b, reg));
    }
    return extrapolate_to_zero(eps, values);
}

double sp_limit_residual(const std::function<double(double)>& g, const quad::DecayHint& decay,
                         double epsilon, const quad::QuadConfig& cfg) {
    if (!(epsilon > 0.0)) {
        throw std::domain_error("sp_limit_residual: epsilon must be positive");
    }
    const quad::Integrand<cplx> shifted = [&](double x) {
        const auto k = [epsilon](double t) { return 1.0 / std::sinh(cplx(t, epsilon)); };
        return g(x) * k(x) + g(-x) * k(-x);
    };
    const cplx lhs = quad::integrate_semi_infinite(shifted, decay, cfg).value;

    const double radius = quad::truncation_radius(decay, cfg);
    const quad::Integrand<double> over_sinh = [&](double x) { return g(x) / std::sinh(x); };
    const double pv = quad::principal_value(over_sinh, -radius, radius, 0.0, 1.0, cfg).value;
    const cplx rhs = cplx(pv, -pi * g(0.0));
    return std::abs(lhs - rhs);
}

double gr_39818_residual(double theta, double a, const quad::QuadConfig& cfg) {
    if (!(theta > 0.0 && theta < pi)) {
        throw std::domain_error("gr_39818_residual: theta must lie in (0, pi)");
    }
    if (!(a > 0.0)) {
        throw std::domain_error("gr_39818_residual: a must be positive");
    }
    const quad::Integrand<double> f = [=](double y) {
        double hyper;
        if (pi * y > 1.0) {
            // cosh(theta y)/sinh(pi y) = e^{(theta-pi)y} (1 + e^{-2 theta y}) / (1 - e^{-2 pi y})
            hyper = std::exp((theta - pi) * y) * (1.0 + std::exp(-2.0 * theta * y)) /
                    -std::expm1(-2.0 * pi * y);
            return hyper * std::sin(a * y);
        }
        hyper = std::cosh(theta * y) * special::x_over_sinh(pi * y) / pi;
        return hyper * a * special::sinc(a * y);
    };
    const double lhs = quad::integrate_semi_infinite(f, quad::ExponentialDecay{pi - theta}, cfg).value;
    const double rhs = 0.5 * std::sinh(a) / (std::cosh(a) + std::cos(theta));
    return std::abs(lhs - rhs);
}

}  // namespace mordell::regularized

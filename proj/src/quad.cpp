#include "mordell/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mordell::quad {

// ---------------------------------------------------------------------------
// Config and truncation
// ---------------------------------------------------------------------------

void QuadConfig::validate() const {
    if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0)) {
        throw std::invalid_argument("QuadConfig: tolerances must be non-negative");
    }
    if (abs_tol == 0.0 && rel_tol == 0.0) {
        throw std::invalid_argument("QuadConfig: one of abs_tol, rel_tol must be positive");
    }
    if (max_refinement < 1) {
        throw std::invalid_argument("QuadConfig: max_refinement must be >= 1");
    }
    if (!(truncation_margin > 0.0)) {
        throw std::invalid_argument("QuadConfig: truncation_margin must be positive");
    }
}

QuadConfig QuadConfig::tightened(double factor) const {
    QuadConfig out = *this;
    out.abs_tol /= factor;
    out.rel_tol /= factor;
    return out;
}

namespace {

constexpr double kTailConstant = 10.0;
constexpr double kMinRadius = 8.0;
constexpr std::size_t kMaxPanels = 1 << 15;
constexpr int kInitialSemiInfinitePanels = 8;

double tail_log(const QuadConfig& cfg) {
    // abs_tol may be zero in a pure-relative config; fall back to a floor.
    const double tol = cfg.abs_tol > 0.0 ? cfg.abs_tol : 1e-16;
    return std::log(kTailConstant / tol);
}

}  // namespace

double truncation_radius(const DecayHint& decay, const QuadConfig& cfg) {
    const double log_ratio = tail_log(cfg);
    const double base = std::visit(
        [&](const auto& hint) -> double {
            using T = std::decay_t<decltype(hint)>;
            if (!(hint.rate > 0.0) || !std::isfinite(hint.rate)) {
                throw std::invalid_argument("decay hint: rate must be positive and finite");
            }
            if constexpr (std::is_same_v<T, GaussianDecay>) {
                const double g = std::max(hint.growth, 0.0);
                const double pa = std::numbers::pi * hint.rate;
                return (g + std::sqrt(g * g + 4.0 * pa * log_ratio)) / (2.0 * pa);
            } else {
                const double c = hint.rate;
                return (log_ratio - std::log(std::min(c, 1.0))) / c;
            }
        },
        decay);
    return std::max(kMinRadius, base) * cfg.truncation_margin;
}

// ---------------------------------------------------------------------------
// Evaluation tally
// ---------------------------------------------------------------------------

namespace {
thread_local EvaluationTally* tally_top = nullptr;
}

EvaluationTally::EvaluationTally() : parent_(tally_top) { tally_top = this; }

EvaluationTally::~EvaluationTally() { tally_top = parent_; }

void EvaluationTally::record(std::size_t n) {
    for (EvaluationTally* t = tally_top; t != nullptr; t = t->parent_) {
        t->count_ += n;
    }
}

// ---------------------------------------------------------------------------
// Gauss-Kronrod 10/21 rule
// ---------------------------------------------------------------------------

namespace {

// Abscissae and weights on (-1, 1); xgk[1], xgk[3], ... are the Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr std::size_t kRulePoints = 21;

// Values ordered as: centre, then (c - h x_j, c + h x_j) for j = 0..9.
using RuleValues = std::array<double, kRulePoints>;

struct ComponentEstimate {
    double integral;
    double error;
};

ComponentEstimate estimate_component(const RuleValues& v, double half_length) {
    const double fc = v[0];
    double resk = fc * kWgk[10];
    double resg = 0.0;
    double resabs = std::abs(fc) * kWgk[10];
    for (std::size_t j = 0; j < 10; ++j) {
        const double f1 = v[1 + 2 * j];
        const double f2 = v[2 + 2 * j];
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) {
            resg += kWg[j / 2] * (f1 + f2);
        }
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fc - reskh);
    for (std::size_t j = 0; j < 10; ++j) {
        resasc += kWgk[j] * (std::abs(v[1 + 2 * j] - reskh) + std::abs(v[2 + 2 * j] - reskh));
    }
    const double h = std::abs(half_length);
    resabs *= h;
    resasc *= h;
    double err = std::abs((resk - resg) * half_length);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) {
        err = std::max(50.0 * eps * resabs, err);
    }
    return {resk * half_length, err};
}

bool is_nan(double v) { return std::isnan(v); }
bool is_nan(const std::complex<double>& v) { return std::isnan(v.real()) || std::isnan(v.imag()); }

double magnitude(double v) { return std::abs(v); }
double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <typename Scalar>
Scalar checked_eval(const Integrand<Scalar>& f, double x) {
    Scalar v = f(x);
    if (is_nan(v)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "integrand returned NaN at x = " << x;
        throw std::domain_error(msg.str());
    }
    return v;
}

template <typename Scalar>
struct Panel {
    double a;
    double b;
    Scalar value;
    double error;
    int depth;
};

template <typename Scalar>
Panel<Scalar> apply_rule(const Integrand<Scalar>& f, double a, double b, int depth) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::array<Scalar, kRulePoints> vals;
    vals[0] = checked_eval(f, centre);
    for (std::size_t j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        vals[1 + 2 * j] = checked_eval(f, centre - dx);
        vals[2 + 2 * j] = checked_eval(f, centre + dx);
    }
    EvaluationTally::record(kRulePoints);

    if constexpr (std::is_same_v<Scalar, double>) {
        const auto est = estimate_component(vals, half);
        return {a, b, est.integral, est.error, depth};
    } else {
        RuleValues re{};
        RuleValues im{};
        for (std::size_t i = 0; i < kRulePoints; ++i) {
            re[i] = vals[i].real();
            im[i] = vals[i].imag();
        }
        const auto er = estimate_component(re, half);
        const auto ei = estimate_component(im, half);
        return {a, b, Scalar(er.integral, ei.integral), er.error + ei.error, depth};
    }
}

template <typename Scalar>
struct ByError {
    bool operator()(const Panel<Scalar>& lhs, const Panel<Scalar>& rhs) const {
        return lhs.error < rhs.error;
    }
};

template <typename Scalar>
QuadResult<Scalar> adaptive(const Integrand<Scalar>& f, double a, double b, int initial_panels,
                            const QuadConfig& cfg) {
    std::vector<Panel<Scalar>> heap;
    heap.reserve(256);
    std::size_t evaluations = 0;
    Scalar value{};
    double error = 0.0;

    const double step = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        const double lo = a + step * i;
        const double hi = (i + 1 == initial_panels) ? b : a + step * (i + 1);
        heap.push_back(apply_rule(f, lo, hi, 0));
        evaluations += kRulePoints;
        value += heap.back().value;
        error += heap.back().error;
    }
    std::make_heap(heap.begin(), heap.end(), ByError<Scalar>{});

    // Panels that hit the depth limit stay in the totals but are never split.
    std::size_t frozen = 0;
    std::size_t iterations = 0;
    bool converged = false;
    while (true) {
        if (++iterations % 64 == 0) {
            // Refresh the running sums to stop drift from repeated add/subtract.
            value = Scalar{};
            error = 0.0;
            for (const auto& p : heap) {
                value += p.value;
                error += p.error;
            }
        }
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * magnitude(value));
        if (error <= tol) {
            converged = true;
            break;
        }
        if (heap.size() - frozen == 0 || heap.size() >= kMaxPanels) {
            break;
        }
        std::pop_heap(heap.begin(), heap.end() - static_cast<std::ptrdiff_t>(frozen),
                      ByError<Scalar>{});
        Panel<Scalar> worst = heap[heap.size() - frozen - 1];
        const double mid = 0.5 * (worst.a + worst.b);
        if (worst.depth >= cfg.max_refinement || mid <= worst.a || mid >= worst.b) {
            // Move to the frozen tail (already in place after pop_heap).
            ++frozen;
            continue;
        }
        heap.erase(heap.begin() + static_cast<std::ptrdiff_t>(heap.size() - frozen - 1));
        auto left = apply_rule(f, worst.a, mid, worst.depth + 1);
        auto right = apply_rule(f, mid, worst.b, worst.depth + 1);
        evaluations += 2 * kRulePoints;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.insert(heap.end() - static_cast<std::ptrdiff_t>(frozen), left);
        std::push_heap(heap.begin(), heap.end() - static_cast<std::ptrdiff_t>(frozen),
                       ByError<Scalar>{});
        heap.insert(heap.end() - static_cast<std::ptrdiff_t>(frozen), right);
        std::push_heap(heap.begin(), heap.end() - static_cast<std::ptrdiff_t>(frozen),
                       ByError<Scalar>{});
    }

    value = Scalar{};
    error = 0.0;
    for (const auto& p : heap) {
        value += p.value;
        error += p.error;
    }
    return {value, error, evaluations, converged};
}

template <typename Scalar>
void check_interval(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("integrate_finite: limits must be finite");
    }
    if (a > b) {
        throw std::invalid_argument("integrate_finite: requires a <= b");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Public integrators
// ---------------------------------------------------------------------------

template <typename Scalar>
QuadResult<Scalar> integrate_finite(const Integrand<Scalar>& f, double a, double b,
                                    const QuadConfig& cfg) {
    cfg.validate();
    check_interval<Scalar>(a, b);
    if (a == b) {
        return {Scalar{}, 0.0, 0, true};
    }
    return adaptive(f, a, b, 1, cfg);
}

template <typename Scalar>
QuadResult<Scalar> integrate_semi_infinite(const Integrand<Scalar>& f, const DecayHint& decay,
                                           const QuadConfig& cfg) {
    cfg.validate();
    const double radius = truncation_radius(decay, cfg);
    return adaptive(f, 0.0, radius, kInitialSemiInfinitePanels, cfg);
}

template <typename Scalar>
QuadResult<Scalar> integrate_2d(const Integrand2d<Scalar>& f, const DecayHint& decay_x,
                                const DecayHint& decay_y, const QuadConfig& cfg) {
    cfg.validate();
    const double rx = truncation_radius(decay_x, cfg);
    const double ry = truncation_radius(decay_y, cfg);

    QuadConfig outer_cfg = cfg;
    outer_cfg.abs_tol = 0.5 * cfg.abs_tol;
    outer_cfg.rel_tol = 0.5 * cfg.rel_tol;
    QuadConfig inner_cfg = cfg;
    inner_cfg.abs_tol = 0.5 * cfg.abs_tol / rx;
    inner_cfg.rel_tol = 0.5 * cfg.rel_tol;

    double worst_inner = 0.0;
    bool inner_converged = true;
    std::size_t inner_evaluations = 0;
    const Integrand<Scalar> outer = [&](double x) {
        const Integrand<Scalar> row = [&](double y) { return f(x, y); };
        auto r = adaptive(row, 0.0, ry, kInitialSemiInfinitePanels, inner_cfg);
        worst_inner = std::max(worst_inner, r.error_estimate);
        inner_converged = inner_converged && r.converged;
        inner_evaluations += r.evaluations;
        return r.value;
    };
    auto res = adaptive(outer, 0.0, rx, kInitialSemiInfinitePanels, outer_cfg);
    res.error_estimate += rx * worst_inner;
    res.evaluations += inner_evaluations;
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * magnitude(res.value));
    res.converged = res.converged && inner_converged && res.error_estimate <= tol;
    return res;
}

template <typename Scalar>
QuadResult<Scalar> principal_value(const Integrand<Scalar>& f, double a, double b, double pole,
                                   double halfwidth, const QuadConfig& cfg) {
    cfg.validate();
    check_interval<Scalar>(a, b);
    if (!(pole > a && pole < b)) {
        throw std::invalid_argument("principal_value: pole must lie strictly inside (a, b)");
    }
    if (!(halfwidth > 0.0)) {
        throw std::invalid_argument("principal_value: halfwidth must be positive");
    }
    const double h = std::min({halfwidth, pole - a, b - pole});
    const Integrand<Scalar> folded = [&](double t) { return f(pole + t) + f(pole - t); };

    // A simple pole leaves the folded sum bounded; an even-order pole makes
    // it blow up like t^-2k.
    const std::array<double, 3> probes = {1e-3 * h, 1e-5 * h, 1e-7 * h};
    std::array<double, 3> mags{};
    for (std::size_t i = 0; i < probes.size(); ++i) {
        mags[i] = magnitude(checked_eval(folded, probes[i]));
    }
    EvaluationTally::record(2 * probes.size());
    if (mags[1] > 20.0 * mags[0] && mags[2] > 20.0 * mags[1]) {
        throw std::domain_error("principal_value: folded integrand diverges (even-order pole)");
    }

    QuadResult<Scalar> out{};
    const auto add = [&](const QuadResult<Scalar>& r) {
        out.value += r.value;
        out.error_estimate += r.error_estimate;
        out.evaluations += r.evaluations;
        out.converged = out.converged && r.converged;
    };
    QuadConfig part = cfg.tightened(3.0);
    add(adaptive(folded, 0.0, h, 1, part));
    if (pole - h > a) add(adaptive(f, a, pole - h, 1, part));
    if (pole + h < b) add(adaptive(f, pole + h, b, 1, part));
    return out;
}

QuadResult<double> fresnel_subtracted(const Integrand<double>& f, FresnelKind kind, double alpha,
                                      const ExponentialDecay& decay, const QuadConfig& cfg) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("fresnel_subtracted: alpha must be positive");
    }
    cfg.validate();
    const auto trig = [kind, alpha](double x) {
        const double arg = alpha * x * x;
        return kind == FresnelKind::sin ? std::sin(arg) : std::cos(arg);
    };
    const Integrand<double> reduced = [&](double x) { return f(x) - trig(x); };

    const double radius = truncation_radius(decay, cfg);
    double worst = 0.0;
    constexpr int kProbes = 16;
    for (int i = 0; i < kProbes; ++i) {
        const double x = radius * (0.95 + 0.05 * i / (kProbes - 1));
        worst = std::max(worst, std::abs(checked_eval(reduced, x)));
    }
    EvaluationTally::record(kProbes);
    if (worst > 10.0 * std::max(cfg.abs_tol, 1e-16)) {
        std::ostringstream msg;
        msg << "fresnel_subtracted: |f - trig(alpha x^2)| = " << worst
            << " near the truncation radius; integrand does not approach the Fresnel envelope";
        throw std::domain_error(msg.str());
    }

    auto res = adaptive(reduced, 0.0, radius, kInitialSemiInfinitePanels, cfg);
    res.value += std::sqrt(std::numbers::pi / (8.0 * alpha));
    return res;
}

template QuadResult<double> integrate_finite(const Integrand<double>&, double, double,
                                             const QuadConfig&);
template QuadResult<std::complex<double>> integrate_finite(const Integrand<std::complex<double>>&,
                                                           double, double, const QuadConfig&);
template QuadResult<double> integrate_semi_infinite(const Integrand<double>&, const DecayHint&,
                                                    const QuadConfig&);
template QuadResult<std::complex<double>> integrate_semi_infinite(
    const Integrand<std::complex<double>>&, const DecayHint&, const QuadConfig&);
template QuadResult<double> integrate_2d(const Integrand2d<double>&, const DecayHint&,
                                         const DecayHint&, const QuadConfig&);
template QuadResult<std::complex<double>> integrate_2d(const Integrand2d<std::complex<double>>&,
                                                       const DecayHint&, const DecayHint&,
                                                       const QuadConfig&);
template QuadResult<double> principal_value(const Integrand<double>&, double, double, double,
                                            double, const QuadConfig&);
template QuadResult<std::complex<double>> principal_value(const Integrand<std::complex<double>>&,
                                                          double, double, double, double,
                                                          const QuadConfig&);

}  // namespace mordell::quad

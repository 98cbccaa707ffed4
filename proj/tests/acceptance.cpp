// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "mordell/lab/config.hpp"
#include "mordell/lab/suite.hpp"
#include "mordell/mordell2d.hpp"
#include "mordell/quad.hpp"
#include "mordell/regularized.hpp"
#include "mordell/special.hpp"
#include "mordell/typeii.hpp"

namespace {

using namespace mordell;
using Clock = std::chrono::steady_clock;
constexpr double pi = std::numbers::pi;

struct Criterion {
    Criterion(int n, std::string t) : id(n), title(std::move(t)) {}

    int id;
    std::string title;
    bool ok = true;
    double worst = 0.0;       // largest residual-to-tolerance ratio seen
    double slowest_s = 0.0;   // slowest single timed evaluation
    std::vector<std::string> failures;

    void check(double residual, double tolerance, const std::string& what) {
        worst = std::max(worst, residual / tolerance);
        if (!(residual <= tolerance)) {
            ok = false;
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s: %.3g > %.3g", what.c_str(), residual, tolerance);
            failures.emplace_back(buf);
        }
    }

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }

    /// Runs f, records its wall time and fails the criterion past `limit_s`.
    template <typename F>
    auto timed(double limit_s, const std::string& what, F&& f) {
        const auto t0 = Clock::now();
        auto v = f();
        const double s = std::chrono::duration<double>(Clock::now() - t0).count();
        slowest_s = std::max(slowest_s, s);
        if (s > limit_s) {
            ok = false;
            failures.push_back(what + ": took " + std::to_string(s) + " s");
        }
        return v;
    }

    bool report() const {
        std::printf("%s criterion %d: %s (worst residual/tol %.3g, slowest %.3f s)\n", ok ? "PASS" : "FAIL", id,
                    title.c_str(), worst, slowest_s);
        for (const auto& f : failures) {
            std::printf("    %s\n", f.c_str());
        }
        std::fflush(stdout);
        return ok;
    }
};

std::string label(const char* name, double a) { return std::string(name) + "(" + std::to_string(a) + ")"; }
std::string label(const char* name, double a, double b) {
    return std::string(name) + "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

bool criterion1() {
    Criterion c{1, "type II closed forms"};
    for (double a : {0.3, 1.0, pi, 5.0}) {
        const double closed = 0.25 + pi / (4.0 * a);
        c.check(std::abs(c.timed(1.0, label("coth_coth", a), [&] { return typeii::int_coth_coth(a); }) - closed),
                1e-8, label("int_coth_coth", a));
        c.check(std::abs(c.timed(1.0, label("coth_coth_double", a), [&] { return typeii::int_coth_coth_double(a); }) -
                         closed),
                1e-8, label("int_coth_coth_double", a));
        c.check(std::abs(c.timed(1.0, label("tanh_coth", a), [&] { return typeii::int_tanh_coth(a); }) - 0.25), 1e-8,
                label("int_tanh_coth", a));
        c.check(std::abs(c.timed(1.0, label("csch_coth", a), [&] { return typeii::int_csch_coth(a); }) - 0.25), 1e-8,
                label("int_csch_coth", a));
    }
    return c.report();
}

bool criterion2() {
    Criterion c{2, "tanh tanh cos integral vanishes"};
    for (double a : {0.4, 1.0, pi, 4.0}) {
        c.check(std::abs(c.timed(1.0, label("tanh_tanh_cos", a), [&] { return typeii::int_tanh_tanh_cos(a); })), 1e-8,
                label("int_tanh_tanh_cos", a));
    }
    return c.report();
}

bool criterion3() {
    Criterion c{3, "cosh-ratio cosine closed forms"};
    const auto tight = quad::QuadConfig{}.tightened(100);
    for (double a : {-2.0, 0.0, 1.0, 2.0}) {
        const auto r = typeii::cosh_ratio_cos(a, typeii::CoshRatioKind::closed_form3, 0.0, tight);
        c.check(std::abs(r.lhs - r.rhs), 1e-10, label("closed_form3", a));
    }
    for (double a : {1.0, 2.0}) {
        for (double b : {0.0, 1.0, 2.0}) {
            const auto r = typeii::cosh_ratio_cos(a, typeii::CoshRatioKind::glasser, b, tight);
            c.check(std::abs(r.lhs - r.rhs), 1e-10, label("glasser", a, b));
        }
    }
    return c.report();
}

bool criterion4() {
    Criterion c{4, "series representation"};
    for (double a : {0.5, 1.0, 2.0, pi}) {
        for (double b : {0.5, 1.0, 2.0}) {
            const auto p = typeii::SeriesParams::with_default_terms(a, b);
            c.check(std::abs(typeii::series_lhs(p) - typeii::series_rhs(p).value), 1e-8, label("series", a, b));
        }
    }
    const auto tight = quad::QuadConfig{}.tightened(100);
    for (double b : {0.5, 1.0, 2.0}) {
        const auto p = typeii::SeriesParams::with_default_terms(pi, b);
        c.check(std::abs(typeii::series_lhs(p, tight) - typeii::series_at_pi(b)), 1e-10, label("series_at_pi", b));
    }
    return c.report();
}

bool criterion5() {
    Criterion c{5, "r2 and absolute-square identities"};
    for (double a : {1.0, 2.0, pi, 2.0 * pi}) {
        c.check(typeii::r2_residual(a), 1e-9, label("r2", a));
    }
    for (double a : {1.0, 2.0, pi}) {
        for (double b : {0.3, 1.0, 2.0}) {
            c.check(typeii::abs_square_identity_residual(a, b), 1e-8, label("abs_square", a, b));
        }
    }
    return c.report();
}

bool criterion6(std::array<double, 2>& theorem_values) {
    Criterion c{6, "double Mordell theorem, corollaries and eigenfunction lemma"};
    constexpr double limit = 30.0;
    for (double a : {0.5, 1.0, std::sqrt(pi), 2.0, pi}) {
        c.check(c.timed(limit, label("theorem pi", a), [&] { return mordell2d::theorem_2d_residual(a, pi / a); }),
                1e-7, label("theorem ab=pi", a));
        c.check(c.timed(limit, label("theorem 2pi", a),
                        [&] { return mordell2d::theorem_2d_residual(a, 2.0 * pi / a); }),
                1e-7, label("theorem ab=2pi", a));
    }
    for (double a : {1.0, std::sqrt(pi), 2.0}) {
        c.check(c.timed(limit, label("cor tanh", a), [&] { return mordell2d::cor_tanh_over_tanh_residual(a); }), 1e-7,
                label("cor_tanh_over_tanh", a));
    }
    for (double a : {1.0, 2.0, std::sqrt(2.0 * pi)}) {
        c.check(c.timed(limit, label("cor sinh", a), [&] { return mordell2d::cor_sinh_residual(a); }), 1e-7,
                label("cor_sinh", a));
    }
    const auto sech = special::sech_eigenfunction();
    c.check(c.timed(limit, "eigen sech",
                    [&] { return mordell2d::eigen_lemma_residual(sech, std::sqrt(pi), std::sqrt(pi)); }),
            1e-6, "eigen_lemma sech");
    theorem_values[0] = mordell2d::theorem_2d_lhs(std::sqrt(pi), std::sqrt(pi));
    theorem_values[1] = mordell2d::theorem_2d_lhs(std::sqrt(2.0 * pi), std::sqrt(2.0 * pi));
    return c.report();
}

bool criterion7(const std::array<double, 2>& theorem_values) {
    Criterion c{7, "transformation lemma, reduction theorem and quadratic symmetry"};
    const std::array<mordell2d::DoubleMordellParams, 3> transform_points{{{1, 1, 1}, {2, 5, 0.5}, {0.3, 4, 2}}};
    for (const auto& p : transform_points) {
        c.check(mordell2d::psi_transform_residual(p), 1e-7, label("psi_transform", p.alpha, p.beta));
    }
    for (unsigned n = 1; n <= 6; ++n) {
        for (double a : {0.5, 1.0, 2.0}) {
            c.check(c.timed(30.0, label("reduction", n, a), [&] { return mordell2d::reduction_residual({n, a}); }),
                    1e-7, label("reduction", n, a));
        }
    }
    for (unsigned n : {2u, 3u, 5u}) {
        for (double a : {0.5, 2.0}) {
            c.check(mordell2d::quadratic_symmetry_residual(n, a), 1e-8, label("quadratic_symmetry", n, a));
        }
    }
    // At alpha = 1 the n = 1 and n = 2 reductions are rescalings of the theorem
    // on the a b = pi and a b = 2 pi families.
    const auto one = mordell2d::reduction_sides({1, 1.0});
    c.check(std::abs(one.scaled_small - 8.0 / pi * theorem_values[0]), 1e-7, "n=1 vs theorem ab=pi");
    const auto two = mordell2d::reduction_sides({2, 1.0});
    c.check(std::abs(two.scaled_small - 16.0 / (std::sqrt(2.0) * pi) * theorem_values[1]), 1e-7,
            "n=2 vs theorem ab=2pi");
    return c.report();
}

bool criterion8() {
    Criterion c{8, "reduction of Phi"};
    for (unsigned n : {0u, 1u, 2u}) {
        for (double a : {0.5, 1.0, 2.0}) {
            c.check(mordell2d::phi_reduction_residual(n, a), 1e-7, label("phi_reduction", n, a));
        }
    }
    return c.report();
}

bool criterion9() {
    using namespace mordell::regularized;
    Criterion c{9, "regularized lemmas, Sokhotski-Plemelj limit, GR 3.981.8"};
    for (double a : {0.5, 1.0, 2.0}) {
        for (double b : {0.3, 0.7, 1.5}) {
            for (const RegParams reg : {RegParams{0.1, 0.05, std::nullopt}, RegParams{0.2, 0.3, std::nullopt}}) {
                c.check(std::abs(lemma1_line_integral(a, b, reg).value - lemma1_closed_form(a, b, reg)), 1e-8,
                        label("lemma1", a, b));
                c.check(std::abs(lemma2_line_integral(a, b, reg).value - lemma2_closed_form(a, b, reg)), 1e-8,
                        label("lemma2", a, b));
            }
        }
    }
    const std::array<double, 3> eps{1e-2, 1e-3, 1e-4};
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 0.5}}) {
        c.check(std::abs(extrapolated_limit(Lemma::first, a, b, eps) - lemma1_limit(a, b)), 1e-6,
                label("lemma1 limit", a, b));
        c.check(std::abs(extrapolated_limit(Lemma::second, a, b, eps) - lemma2_limit(a, b)), 1e-6,
                label("lemma2 limit", a, b));
    }
    const auto g = [](double x) { return std::exp(-x * x); };
    const quad::GaussianDecay hint{1.0 / pi};
    const double r1 = sp_limit_residual(g, hint, 0.1);
    const double r2 = sp_limit_residual(g, hint, 0.05);
    const double r3 = sp_limit_residual(g, hint, 0.025);
    for (double ratio : {r1 / r2, r2 / r3}) {
        c.require(ratio >= 1.7 && ratio <= 2.3, "sp ratio " + std::to_string(ratio) + " outside [1.7, 2.3]");
    }
    const auto tight = quad::QuadConfig{}.tightened(100);
    for (double theta : {0.5, pi / 2, 2.5}) {
        for (double a : {0.5, 1.0, 2.0}) {
            c.check(gr_39818_residual(theta, a, tight), 1e-10, label("gr_39818", theta, a));
        }
    }
    return c.report();
}

bool criterion10() {
    Criterion c{10, "appendix: Poisson summation, ODE solution, partial fractions"};
    c.check(typeii::poisson_residual([](double y) { return std::exp(-y * y); }, quad::GaussianDecay{1.0 / pi, 1.0}),
            1e-8, "poisson gaussian");
    for (unsigned k : {0u, 1u, 2u}) {
        c.check(typeii::ik_solution_residual(k, 1.0, 1.0), 1e-5, label("ik_solution", k));
    }
    c.check(std::abs(typeii::sech_partial_fraction(0.5, 2000) - 1.0 / std::cosh(pi * 0.5)), 1e-3,
            "sech partial fraction K=2000");
    return c.report();
}

bool criterion11() {
    Criterion c{11, "full suite passes, is fast and byte-deterministic"};
    const lab::LabConfig cfg;
    const unsigned workers = std::max(4u, lab::resolve_workers(std::nullopt, cfg));
    const auto t0 = Clock::now();
    const auto first = lab::run_suite("all", cfg, workers);
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    c.slowest_s = s;
    c.require(s < 15.0 * 60.0, "suite all took " + std::to_string(s) + " s");
    c.require(first.summary.failed == 0, std::to_string(first.summary.failed) + " suite cases failed");
    for (const auto& r : first.cases) {
        if (!r.passed) {
            c.failures.push_back("  " + r.id + (r.error ? " error: " + *r.error : " residual " + std::to_string(r.residual)));
        }
    }
    const auto second = lab::run_suite("all", cfg, 1);
    c.require(lab::report_json(first) == lab::report_json(second),
              "reports differ between " + std::to_string(workers) + " workers and 1 worker");
    std::printf("    suite all: %zu cases, %u workers, %.1f s\n", first.summary.total, workers, s);
    return c.report();
}

}  // namespace

int main() {
    std::array<double, 2> theorem_values{};
    const std::vector<std::function<bool()>> criteria{
        criterion1, criterion2, criterion3, criterion4, criterion5,
        [&] { return criterion6(theorem_values); },
        [&] { return criterion7(theorem_values); },
        criterion8, criterion9, criterion10, criterion11,
    };
    int failed = 0;
    for (const auto& run : criteria) {
        failed += run() ? 0 : 1;
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

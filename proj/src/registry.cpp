#include "mordell/lab/registry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mordell/mordell1d.hpp"
#include "mordell/mordell2d.hpp"
#include "mordell/regularized.hpp"
#include "mordell/special.hpp"
#include "mordell/typeii.hpp"

namespace mordell::lab {

namespace {

constexpr double pi = std::numbers::pi;
const double sqrt_pi = std::sqrt(pi);

using Axes = std::vector<std::pair<std::string, std::vector<double>>>;
using Eval = std::function<Outcome(const Params&, const quad::QuadConfig&)>;

unsigned as_count(double v, const char* name) {
    if (!(v >= 0.0) || v != std::floor(v) || v > 1e9) {
        throw std::invalid_argument(std::string(name) + " must be a non-negative integer");
    }
    return static_cast<unsigned>(v);
}

Outcome value(double computed, double expected) { return {computed, expected}; }
Outcome pairwise(double residual) { return {residual, std::nullopt}; }

std::vector<OpSpec> build_typeii() {
    std::vector<OpSpec> ops;
    const std::vector<double> type2_alphas{0.3, 1.0, pi, 5.0};
    const auto coth_expected = [](double a) { return 0.25 + pi / (4.0 * a); };

    ops.push_back({"typeii.int_coth_coth", {{"alpha", type2_alphas}}, 1e-8, false,
                   [=](const Params& p, const quad::QuadConfig& c) {
                       const double a = p.at("alpha");
                       return value(typeii::int_coth_coth(a, c), coth_expected(a));
                   }});
    ops.push_back({"typeii.int_coth_coth_double", {{"alpha", type2_alphas}}, 1e-8, false,
                   [=](const Params& p, const quad::QuadConfig& c) {
                       const double a = p.at("alpha");
                       return value(typeii::int_coth_coth_double(a, c), coth_expected(a));
                   }});
    ops.push_back({"typeii.int_tanh_coth", {{"alpha", {0.3, 1.0, pi, 5.0, 7.0}}}, 1e-8, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       return value(typeii::int_tanh_coth(p.at("alpha"), c), 0.25);
                   }});
    ops.push_back({"typeii.int_csch_coth", {{"alpha", type2_alphas}}, 1e-8, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       return value(typeii::int_csch_coth(p.at("alpha"), c), 0.25);
                   }});
    ops.push_back({"typeii.int_tanh_tanh_cos", {{"alpha", {0.4, 1.0, pi, 4.0}}}, 1e-8, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       return value(typeii::int_tanh_tanh_cos(p.at("alpha"), c), 0.0);
                   }});
    ops.push_back({"typeii.closed_form3", {{"alpha", {-2.0, 0.0, 1.0, 2.0}}}, 1e-10, true,
                   [](const Params& p, const quad::QuadConfig& c) {
                       const auto r = typeii::cosh_ratio_cos(p.at("alpha"),
                                                             typeii::CoshRatioKind::closed_form3, 0.0, c);
                       return value(r.lhs, r.rhs);
                   }});
    ops.push_back({"typeii.glasser", {{"alpha", {1.0, 2.0}}, {"b", {0.0, 1.0, 2.0}}}, 1e-10, true,
                   [](const Params& p, const quad::QuadConfig& c) {
                       const auto r = typeii::cosh_ratio_cos(p.at("alpha"), typeii::CoshRatioKind::glasser,
                                                             p.at("b"), c);
                       return value(r.lhs, r.rhs);
                   }});
    ops.push_back({"typeii.series", {{"alpha", {0.5, 1.0, 2.0, pi}}, {"b", {0.5, 1.0, 2.0}}}, 1e-8, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       const auto sp = typeii::SeriesParams::with_default_terms(p.at("alpha"), p.at("b"));
                       return pairwise(std::abs(typeii::series_lhs(sp, c) - typeii::series_rhs(sp).value));
                   }});
    ops.push_back({"typeii.series_at_pi", {{"b", {0.5, 1.0, 2.0}}}, 1e-10, true,
                   [](const Params& p, const quad::QuadConfig& c) {
                       const double b = p.at("b");
                       const auto sp = typeii::SeriesParams::with_default_terms(pi, b);
                       return pairwise(std::abs(typeii::series_lhs(sp, c) - typeii::series_at_pi(b)));
                   }});
    ops.push_back({"typeii.r2_residual", {{"alpha", {1.0, 2.0, pi, 2.0 * pi}}}, 1e-9, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       return pairwise(typeii::r2_residual(p.at("alpha"), c));
                   }});
    ops.push_back({"typeii.abs_square_identity", {{"alpha", {1.0, 2.0, pi}}, {"b", {0.3, 1.0, 2.0}}}, 1e-8,
                   false, [](const Params& p, const quad::QuadConfig& c) {
                       return pairwise(typeii::abs_square_identity_residual(p.at("alpha"), p.at("b"), c));
                   }});
    return ops;
}

std::vector<OpSpec> build_appendix() {
    std::vector<OpSpec> ops;
    // power: f(y) = y^power e^{-y^2}
    ops.push_back({"appendix.poisson_residual", {{"power", {0.0, 1.0}}}, 1e-8, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       const unsigned power = as_count(p.at("power"), "power");
                       const auto f = [power](double y) { return std::pow(y, power) * std::exp(-y * y); };
                       return pairwise(typeii::poisson_residual(f, quad::GaussianDecay{1.0 / pi, 1.0}, c));
                   }});
    ops.push_back({"appendix.ik_solution_residual", {{"k", {0.0, 1.0, 2.0}}, {"alpha", {1.0}}, {"b", {1.0}}},
                   1e-5, false, [](const Params& p, const quad::QuadConfig& c) {
                       return pairwise(typeii::ik_solution_residual(as_count(p.at("k"), "k"), p.at("alpha"),
                                                                    p.at("b"), c));
                   }});
    ops.push_back({"appendix.ik_initial_value", {{"k", {0.0, 1.0, 2.0}}, {"b", {1.0}}}, 1e-3, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       const unsigned k = as_count(p.at("k"), "k");
                       const double b = p.at("b");
                       return pairwise(
                           std::abs(typeii::ik_solution(k, 1e-3, b, c) - typeii::ik_initial_value(k, b)));
                   }});
    ops.push_back({"appendix.sech_partial_fraction", {{"x", {0.5}}, {"terms", {2000.0}}}, 1e-3, false,
                   [](const Params& p, const quad::QuadConfig&) {
                       const double x = p.at("x");
                       return value(typeii::sech_partial_fraction(x, as_count(p.at("terms"), "terms")),
                                    special::sech(pi * x));
                   }});
    return ops;
}

std::vector<OpSpec> build_mordell1d() {
    using mordell1d::MordellArg;
    std::vector<OpSpec> ops;
    const std::vector<double> alphas{0.5, 1.0, 2.0, 4.0};
    ops.push_back({"mordell1d.phi_at_i", {{"alpha", alphas}}, 1e-9, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       const double a = p.at("alpha");
                       return value(mordell1d::phi({a, MordellArg::imaginary(1.0)}, c), 0.5 / std::sqrt(a));
                   }});
    ops.push_back({"mordell1d.psi_at_i", {{"alpha", alphas}}, 1e-9, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       const double a = p.at("alpha");
                       return value(mordell1d::psi({a, MordellArg::imaginary(1.0)}, c).imag(),
                                    0.5 / std::sqrt(a));
                   }});
    ops.push_back({"mordell1d.big_f_transform_residual", {{"alpha", alphas}, {"theta", {0.25, 0.5, 1.0}}},
                   1e-8, false, [](const Params& p, const quad::QuadConfig& c) {
                       return pairwise(mordell1d::big_f_transform_residual(
                           p.at("alpha"), MordellArg::real(p.at("theta")), c));
                   }});
    ops.push_back({"mordell1d.big_f_transform_residual_imag", {{"alpha", alphas}, {"tau", {0.25, 0.75}}},
                   1e-8, false, [](const Params& p, const quad::QuadConfig& c) {
                       return pairwise(mordell1d::big_f_transform_residual(
                           p.at("alpha"), MordellArg::imaginary(p.at("tau")), c));
                   }});
    return ops;
}

std::vector<OpSpec> build_mordell2d() {
    std::vector<OpSpec> ops;
    // family f selects beta = f pi / alpha
    ops.push_back({"mordell2d.theorem_2d_residual",
                   {{"alpha", {0.5, 1.0, sqrt_pi, 2.0, pi}}, {"family", {1.0, 2.0}}}, 1e-7, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       const double a = p.at("alpha");
                       return pairwise(mordell2d::theorem_2d_residual(a, p.at("family") * pi / a, c));
                   }});
    ops.push_back({"mordell2d.cor_tanh_over_tanh", {{"alpha", {1.0, sqrt_pi, 2.0}}}, 1e-7, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       const double a = p.at("alpha");
                       return value(mordell2d::cor_tanh_over_tanh_lhs(a, c), sqrt_pi * a / 8.0);
                   }});
    ops.push_back({"mordell2d.cor_sinh", {{"alpha", {1.0, 2.0, std::sqrt(2.0 * pi)}}}, 1e-7, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       const double a = p.at("alpha");
                       return value(mordell2d::cor_sinh_lhs(a, c), sqrt_pi * a / 16.0);
                   }});
    // eigenfunction 0: e^{-x^2/2}; 1: sech(sqrt(pi/2) x). beta = family pi / alpha.
    ops.push_back({"mordell2d.eigen_lemma_residual",
                   {{"eigenfunction", {0.0, 1.0}}, {"alpha", {1.0, sqrt_pi}}, {"family", {0.5, 1.0}}}, 1e-6,
                   false, [](const Params& p, const quad::QuadConfig& c) {
                       const auto f = as_count(p.at("eigenfunction"), "eigenfunction") == 0
                                          ? special::gaussian_sech_eigenfunction()
                                          : special::sech_eigenfunction();
                       const double a = p.at("alpha");
                       return pairwise(mordell2d::eigen_lemma_residual(f, a, p.at("family") * pi / a, c));
                   }});
    ops.push_back({"mordell2d.psi_transform_residual",
                   {{"alpha", {0.3, 1.0, 2.0}}, {"beta", {1.0, 4.0, 5.0}}, {"gamma", {0.5, 1.0, 2.0}}}, 1e-7,
                   false, [](const Params& p, const quad::QuadConfig& c) {
                       return pairwise(
                           mordell2d::psi_transform_residual({p.at("alpha"), p.at("beta"), p.at("gamma")}, c));
                   }});
    ops.push_back({"mordell2d.reduction_residual",
                   {{"n", {1.0, 2.0, 3.0, 4.0, 5.0, 6.0}}, {"alpha", {0.5, 1.0, 2.0}}}, 1e-7, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       return pairwise(
                           mordell2d::reduction_residual({as_count(p.at("n"), "n"), p.at("alpha")}, c));
                   }});
    ops.push_back({"mordell2d.quadratic_symmetry_residual", {{"n", {2.0, 3.0, 5.0}}, {"alpha", {0.5, 2.0}}},
                   1e-8, false, [](const Params& p, const quad::QuadConfig& c) {
                       return pairwise(
                           mordell2d::quadratic_symmetry_residual(as_count(p.at("n"), "n"), p.at("alpha"), c));
                   }});
    ops.push_back({"mordell2d.phi_reduction_residual", {{"n", {0.0, 1.0, 2.0}}, {"alpha", {0.5, 1.0, 2.0}}},
                   1e-7, false, [](const Params& p, const quad::QuadConfig& c) {
                       return pairwise(
                           mordell2d::phi_reduction_residual(as_count(p.at("n"), "n"), p.at("alpha"), c));
                   }});
    return ops;
}

std::vector<OpSpec> build_regularized() {
    using regularized::RegParams;
    std::vector<OpSpec> ops;
    const Axes lemma_axes{{"a", {0.5, 1.0, 2.0}},
                          {"b", {0.3, 0.7, 1.5}},
                          {"epsilon", {0.1, 0.2}},
                          {"omega", {0.05, 0.3}}};
    ops.push_back({"regularized.lemma1_equivalence", lemma_axes, 1e-8, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       const RegParams reg{p.at("epsilon"), p.at("omega"), std::nullopt};
                       const double a = p.at("a");
                       const double b = p.at("b");
                       return value(regularized::lemma1_line_integral(a, b, reg, c).value,
                                    regularized::lemma1_closed_form(a, b, reg));
                   }});
    ops.push_back({"regularized.lemma2_equivalence", lemma_axes, 1e-8, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       const RegParams reg{p.at("epsilon"), p.at("omega"), std::nullopt};
                       const double a = p.at("a");
                       const double b = p.at("b");
                       return value(regularized::lemma2_line_integral(a, b, reg, c).value,
                                    regularized::lemma2_closed_form(a, b, reg));
                   }});
    static constexpr double eps_steps[] = {1e-2, 1e-3, 1e-4};
    ops.push_back({"regularized.lemma1_limit", {{"a", {1.0, 2.0}}, {"b", {0.5, 1.0}}}, 1e-6, false,
                   [](const Params& p, const quad::QuadConfig&) {
                       const double a = p.at("a");
                       const double b = p.at("b");
                       return value(regularized::extrapolated_limit(regularized::Lemma::first, a, b, eps_steps),
                                    regularized::lemma1_limit(a, b));
                   }});
    ops.push_back({"regularized.lemma2_limit", {{"a", {1.0, 2.0}}, {"b", {0.5, 1.0}}}, 1e-6, false,
                   [](const Params& p, const quad::QuadConfig&) {
                       const double a = p.at("a");
                       const double b = p.at("b");
                       return value(regularized::extrapolated_limit(regularized::Lemma::second, a, b, eps_steps),
                                    regularized::lemma2_limit(a, b));
                   }});
    // Ratio residual(eps) / residual(eps/2) for g = e^{-x^2}; first order means 2.
    ops.push_back({"regularized.sp_order", {{"epsilon", {0.1, 0.05}}}, 0.3, false,
                   [](const Params& p, const quad::QuadConfig& c) {
                       const auto g = [](double x) { return std::exp(-x * x); };
                       const quad::GaussianDecay decay{1.0 / pi};
                       const double e = p.at("epsilon");
                       return value(regularized::sp_limit_residual(g, decay, e, c) /
                                        regularized::sp_limit_residual(g, decay, 0.5 * e, c),
                                    2.0);
                   }});
    ops.push_back({"regularized.gr_39818_residual", {{"theta", {0.5, pi / 2.0, 2.5}}, {"a", {0.5, 1.0, 2.0}}},
                   1e-10, true, [](const Params& p, const quad::QuadConfig& c) {
                       return pairwise(regularized::gr_39818_residual(p.at("theta"), p.at("a"), c));
                   }});
    return ops;
}

std::vector<OpSpec> build_all() {
    std::vector<OpSpec> all;
    for (auto&& part : {build_typeii(), build_appendix(), build_mordell1d(), build_mordell2d(),
                        build_regularized()}) {
        all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end(), [](const OpSpec& x, const OpSpec& y) { return x.id < y.id; });
    return all;
}

void cartesian(const Axes& axes, std::size_t depth, Params& current, std::vector<Params>& out) {
    if (depth == axes.size()) {
        out.push_back(current);
        return;
    }
    for (double v : axes[depth].second) {
        current[axes[depth].first] = v;
        cartesian(axes, depth + 1, current, out);
    }
}

}  // namespace

double Outcome::residual() const {
    return expected ? std::abs(computed - *expected) : std::abs(computed);
}

const std::vector<OpSpec>& registry() {
    static const std::vector<OpSpec> ops = build_all();
    return ops;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all", "appendix", "mordell1d", "mordell2d", "regularized",
                                                "typeii"};
    return names;
}

OpRef resolve_op(const std::string& text) {
    const auto bracket = text.find('[');
    const std::string id = text.substr(0, bracket);
    const auto& ops = registry();
    const auto it = std::find_if(ops.begin(), ops.end(), [&](const OpSpec& op) { return op.id == id; });
    if (it == ops.end()) {
        throw std::invalid_argument("unknown operation '" + id + "'");
    }
    OpRef ref{&*it, {}};
    if (bracket == std::string::npos) {
        return ref;
    }
    if (text.back() != ']') {
        throw std::invalid_argument("malformed operation '" + text + "': missing ']'");
    }
    const std::string inner = text.substr(bracket + 1, text.size() - bracket - 2);
    std::size_t start = 0;
    while (start <= inner.size()) {
        const auto comma = std::min(inner.find(',', start), inner.size());
        const std::string item = inner.substr(start, comma - start);
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("malformed pin '" + item + "' in '" + text + "'");
        }
        const std::string name = item.substr(0, eq);
        const bool known = std::any_of(it->axes.begin(), it->axes.end(),
                                       [&](const auto& axis) { return axis.first == name; });
        if (!known) {
            throw std::invalid_argument("operation '" + id + "' has no parameter '" + name + "'");
        }
        try {
            std::size_t used = 0;
            const std::string num = item.substr(eq + 1);
            ref.pinned[name] = std::stod(num, &used);
            if (used != num.size()) {
                throw std::invalid_argument(num);
            }
        } catch (const std::logic_error&) {
            throw std::invalid_argument("malformed value in pin '" + item + "'");
        }
        start = comma + 1;
    }
    return ref;
}

std::vector<IdentityCase> expand_suite(const std::string& suite, const LabConfig& cfg) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    for (const auto& [op_id, overrides] : cfg.grid) {
        const auto ref = resolve_op(op_id);
        for (const auto& [param, values] : overrides) {
            const bool known = std::any_of(ref.op->axes.begin(), ref.op->axes.end(),
                                           [&](const auto& axis) { return axis.first == param; });
            if (!known) {
                throw std::invalid_argument("grid override: '" + op_id + "' has no parameter '" + param + "'");
            }
        }
    }

    std::vector<IdentityCase> cases;
    for (const auto& op : registry()) {
        if (suite != "all" && op.suite() != suite) {
            continue;
        }
        Axes axes = op.axes;
        if (const auto found = cfg.grid.find(op.id); found != cfg.grid.end()) {
            for (auto& [name, values] : axes) {
                if (const auto o = found->second.find(name); o != found->second.end()) {
                    values = o->second;
                }
            }
        }
        std::vector<Params> points;
        Params current;
        cartesian(axes, 0, current, points);
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        for (auto& params : points) {
            cases.push_back({&op, std::move(params), cfg.tolerance_override.value_or(op.tolerance)});
        }
    }
    return cases;
}

}  // namespace mordell::lab

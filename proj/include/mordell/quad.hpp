#pragma once

/**
 * @file quad.hpp
 * @brief Adaptive quadrature for the Mordell-type integrands.
 *
 * Every integral in this library is reduced to one of a few shapes:
 *
 *   - a finite interval with an analytic integrand,
 *   - [0, inf) with a Gaussian or exponential envelope,
 *   - [0, inf)^2 with per-axis envelopes,
 *   - a finite interval through one simple pole (principal value),
 *   - [0, inf) where the integrand tends to a pure Fresnel oscillation.
 *
 * The workhorse is a globally adaptive 10/21-point Gauss-Kronrod scheme.
 * Semi-infinite ranges are truncated at a radius derived from the decay
 * hint, so a fixed QuadConfig reproduces results bit-for-bit.
 */

#include <complex>
#include <cstddef>
#include <functional>
#include <variant>

namespace mordell::quad {

struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_refinement = 30;       ///< maximum bisection depth of any panel
    double truncation_margin = 1.0; ///< multiplier on the analytic truncation radius

    /// Throws std::invalid_argument if the invariants do not hold.
    void validate() const;

    /// Same config with both tolerances divided by `factor`.
    [[nodiscard]] QuadConfig tightened(double factor) const;
};

template <typename Scalar>
struct QuadResult {
    Scalar value{};
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};

/// |f(x)| <= C exp(-pi * rate * x^2 + growth * x) for large x.
struct GaussianDecay {
    double rate;
    double growth = 0.0;
};

/// |f(x)| <= C exp(-rate * x) for large x.
struct ExponentialDecay {
    double rate;
};

using DecayHint = std::variant<GaussianDecay, ExponentialDecay>;

template <typename Scalar>
using Integrand = std::function<Scalar(double)>;

template <typename Scalar>
using Integrand2d = std::function<Scalar(double, double)>;

enum class FresnelKind { sin, cos };

/// Radius R beyond which the hinted tail is negligible (bound constant C = 10).
///
/// Gaussian: R = max(8, (g + sqrt(g^2 + 4 pi a L)) / (2 pi a)) * margin,
///           L = ln(C / abs_tol); reduces to sqrt(L / (pi a)) when g = 0.
/// Exponential: R = max(8, ln(C / (abs_tol * min(c, 1))) / c) * margin.
[[nodiscard]] double truncation_radius(const DecayHint& decay, const QuadConfig& cfg);

template <typename Scalar>
[[nodiscard]] QuadResult<Scalar> integrate_finite(const Integrand<Scalar>& f, double a, double b,
                                                  const QuadConfig& cfg = {});

template <typename Scalar>
[[nodiscard]] QuadResult<Scalar> integrate_semi_infinite(const Integrand<Scalar>& f,
                                                         const DecayHint& decay,
                                                         const QuadConfig& cfg = {});

/// Nested (outer x, inner y) quadrature over [0, Rx] x [0, Ry].
template <typename Scalar>
[[nodiscard]] QuadResult<Scalar> integrate_2d(const Integrand2d<Scalar>& f, const DecayHint& decay_x,
                                              const DecayHint& decay_y, const QuadConfig& cfg = {});

/// Principal value of the integral of f over [a, b] through a simple pole.
/// Inside [pole - halfwidth, pole + halfwidth] the integrand is folded into
/// f(pole + t) + f(pole - t); the halfwidth is clipped to fit in [a, b].
template <typename Scalar>
[[nodiscard]] QuadResult<Scalar> principal_value(const Integrand<Scalar>& f, double a, double b,
                                                 double pole, double halfwidth,
                                                 const QuadConfig& cfg = {});

/// Integral over [0, inf) of an f that tends to trig(alpha x^2): integrates
/// f - trig(alpha x^2) with the given exponential envelope and adds back the
/// Fresnel value sqrt(pi / (8 alpha)).
[[nodiscard]] QuadResult<double> fresnel_subtracted(const Integrand<double>& f, FresnelKind kind,
                                                    double alpha, const ExponentialDecay& decay,
                                                    const QuadConfig& cfg = {});

/// Counts integrand evaluations made on the current thread while alive.
/// Scopes nest; each one sees every evaluation made during its lifetime.
class EvaluationTally {
public:
    EvaluationTally();
    ~EvaluationTally();
    EvaluationTally(const EvaluationTally&) = delete;
    EvaluationTally& operator=(const EvaluationTally&) = delete;

    [[nodiscard]] std::size_t count() const { return count_; }

    /// Called by the integrators; adds to every active scope on this thread.
    static void record(std::size_t n);

private:
    std::size_t count_ = 0;
    EvaluationTally* parent_;
};

}  // namespace mordell::quad

#pragma once

// Finite-(epsilon, omega) versions of the divergent double Fourier integrals
//
//   (2/pi) int int sin(xy) / (tanh x tanh pi y) cos(ax) cos(by) dx dy        (lemma 1)
//   (2/pi) int int sin(2xy) / (tanh x tanh pi y) cos(ax) cos(by) dx dy       (lemma 2)
//
// regularized by cosh((1-eps)x) cosh(pi(1-omega)y) / (sinh x sinh pi y).
// The one-dimensional line-integral form and the residue closed form are two
// independent routes to the same number.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>

#include "mordell/quad.hpp"

namespace mordell::regularized {

struct RegParams {
    double epsilon;
    double omega;
    std::optional<unsigned> coupled_n;  ///< when set, 2 epsilon = omega n is enforced

    void validate() const;
};

struct LineIntegral {
    double value;
    double error_estimate;
    bool slow_decay;  ///< epsilon < 1e-3: decay ~ e^{-eps x} makes the truncation radius huge
};

[[nodiscard]] LineIntegral lemma1_line_integral(double a, double b, const RegParams& reg,
                                                const quad::QuadConfig& cfg = {});
[[nodiscard]] double lemma1_closed_form(double a, double b, const RegParams& reg);
/// -sin(ab) / (tanh(pi a) tanh(b)), the non-delta part of the limit.
[[nodiscard]] double lemma1_limit(double a, double b);

[[nodiscard]] LineIntegral lemma2_line_integral(double a, double b, const RegParams& reg,
                                                const quad::QuadConfig& cfg = {});
[[nodiscard]] double lemma2_closed_form(double a, double b, const RegParams& reg);
/// -sin(ab/2) / (2 tanh(pi a/2) tanh(b/2)).
[[nodiscard]] double lemma2_limit(double a, double b);

/// Polynomial (Neville) extrapolation of values(eps) to eps = 0.
[[nodiscard]] double extrapolate_to_zero(std::span<const double> eps, std::span<const double> values);

enum class Lemma { first, second };

/// Closed form on the diagonal eps = omega at each of `eps`, extrapolated to 0.
[[nodiscard]] double extrapolated_limit(Lemma which, double a, double b, std::span<const double> eps);

/// |int g(x)/sinh(x + i eps) dx - (P int g(x)/sinh(x) dx - i pi g(0))| over the real line.
[[nodiscard]] double sp_limit_residual(const std::function<double(double)>& g,
                                       const quad::DecayHint& decay, double epsilon,
                                       const quad::QuadConfig& cfg = {});

/// |int_0^inf cosh(theta y)/sinh(pi y) sin(a y) dy - sinh(a) / (2 (cosh a + cos theta))|
[[nodiscard]] double gr_39818_residual(double theta, double a, const quad::QuadConfig& cfg = {});

}  // namespace mordell::regularized

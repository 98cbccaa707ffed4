#pragma once

/**
 * @file typeii.hpp
 * @brief Type II oscillatory-hyperbolic integrals and their type I companions.
 *
 * Integrands whose hyperbolic envelope tends to 1 at infinity only converge
 * because of the trailing Fresnel oscillation sin/cos(alpha x^2). They are
 * all evaluated through quad::fresnel_subtracted, never by naive truncation.
 *
 * Also hosts the series representation of
 *   int_0^inf e^{i alpha x^2} / cosh(pi x) cos(bx) dx
 * and the Poisson-summation / partial-fraction machinery behind it.
 */

#include <complex>
#include <cstddef>
#include <functional>

#include "mordell/quad.hpp"

namespace mordell::typeii {

using cplx = std::complex<double>;

[[nodiscard]] double int_coth_coth(double alpha, const quad::QuadConfig& cfg = {});
[[nodiscard]] double int_coth_coth_double(double alpha, const quad::QuadConfig& cfg = {});
[[nodiscard]] double int_tanh_coth(double alpha, const quad::QuadConfig& cfg = {});
[[nodiscard]] double int_csch_coth(double alpha, const quad::QuadConfig& cfg = {});
[[nodiscard]] double int_tanh_tanh_cos(double alpha, const quad::QuadConfig& cfg = {});

enum class CoshRatioKind {
    closed_form3,  ///< cosh(a x)/cosh(pi x) cos(a x^2) = cos(a/4)/2, |a| < pi
    glasser,       ///< cosh(pi x)cosh(a x)/(cosh 2pi x + cosh 2b) cos(a x^2) = cos(a/4 + a b^2/pi^2)/(4 cosh b)
};

struct LhsRhs {
    double lhs;
    double rhs;
};

/// The glasser integrand grows like e^{(|a| - pi) x}, so both kinds need |a| < pi.
[[nodiscard]] LhsRhs cosh_ratio_cos(double alpha, CoshRatioKind kind, double b = 0.0,
                                    const quad::QuadConfig& cfg = {});

struct SeriesParams {
    double alpha;
    double b;
    std::size_t terms;

    /// ceil(40 / min(b, pi b / alpha)), capped at 1e5.
    static SeriesParams with_default_terms(double alpha, double b);

    void validate() const;
    /// Tail bound of both geometric series after `terms` terms.
    [[nodiscard]] double remainder_bound() const;
};

struct SeriesValue {
    cplx value;
    double remainder_bound;
};

/// int_0^inf e^{i alpha x^2} / cosh(pi x) cos(bx) dx by quadrature.
[[nodiscard]] cplx series_lhs(const SeriesParams& p, const quad::QuadConfig& cfg = {});

/// The two alternating theta-type series, truncated at p.terms.
[[nodiscard]] SeriesValue series_rhs(const SeriesParams& p);

/// Finite form at alpha = pi: (e^{-i pi/4} + i e^{-i b^2/(4 pi)}) / (2 cosh(b/2)).
[[nodiscard]] cplx series_at_pi(double b);

/// |int sin(a x^2) cos(bx) / (sinh(pi x) sinh(a x)) dx - |series_lhs|^2|
[[nodiscard]] double abs_square_identity_residual(double alpha, double b,
                                                  const quad::QuadConfig& cfg = {});

/// Right-hand integrand family int cosh(s x/2) cosh(t x/2) / (cosh(s x) cosh(t x)) dx.
[[nodiscard]] double cosh_half_product(double s, double t, const quad::QuadConfig& cfg = {});

/// |sqrt 2 int cos(a x^2)/(cosh(pi x) cosh(a x)) dx - cosh_half_product(pi, a)|
[[nodiscard]] double r2_residual(double alpha, const quad::QuadConfig& cfg = {});

/// Alternating sum sum_k (-1)^k a_k accelerated with the Cohen-Rodriguez
/// Villegas-Zagier weights; exact for moment sequences up to ~5.8^-n.
[[nodiscard]] double alternating_sum(const std::function<double(std::size_t)>& term,
                                     std::size_t n_terms);

/// |sum_k>=0 (-1)^k int_0^inf f(y) sin(pi(2k+1)y) dy - 1/2 sum_{k in Z} (-1)^k f(k+1/2)|
/// with f taken as zero on the negative half-line.
[[nodiscard]] double poisson_residual(const std::function<double(double)>& f,
                                      const quad::DecayHint& decay,
                                      const quad::QuadConfig& cfg = {});

/// I_k(0) = 2 pi / (2k+1) e^{-b(k+1/2)}.
[[nodiscard]] cplx ik_initial_value(unsigned k, double b);

/// Explicit solution of I_k' + i (k+1/2)^2 I_k = sqrt(pi/a) e^{3 i pi/4 - i b^2/(4a)}.
[[nodiscard]] cplx ik_solution(unsigned k, double alpha, double b, const quad::QuadConfig& cfg = {});

/// ODE residual of ik_solution with a central difference of step 1e-4.
[[nodiscard]] double ik_solution_residual(unsigned k, double alpha, double b,
                                          const quad::QuadConfig& cfg = {});

/// (1/pi) sum_{k<=K} (-1)^k (2k+1) / (x^2 + (k+1/2)^2).
[[nodiscard]] double sech_partial_fraction(double x, std::size_t max_k);

}  // namespace mordell::typeii

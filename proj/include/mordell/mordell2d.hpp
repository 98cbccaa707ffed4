#pragma once

/**
 * @file mordell2d.hpp
 * @brief Double Mordell integrals
 *
 *   Phi(a, b, g) = int int cos(pi g x y) / (cosh pi x cosh pi y) e^{-pi (a x^2 + b y^2)/2}
 *   Psi(a, b, g) = int int sin(pi g x y) / (tanh pi x tanh pi y) e^{-pi (a x^2 + b y^2)/2}
 *
 * over [0, inf)^2, together with the closed-form evaluations obtained from
 * self-reciprocal functions and the reductions of Phi and Psi to squares and
 * products of one-dimensional Mordell integrals.
 */

#include "mordell/quad.hpp"
#include "mordell/special.hpp"

namespace mordell::mordell2d {

struct DoubleMordellParams {
    double alpha;
    double beta;
    double gamma;

    void validate() const;
};

struct ReductionInstance {
    unsigned n;
    double alpha;

    void validate() const;
};

[[nodiscard]] double phi2(const DoubleMordellParams& p, const quad::QuadConfig& cfg = {});
[[nodiscard]] double psi_double(const DoubleMordellParams& p, const quad::QuadConfig& cfg = {});

/// int int sin(2xy) / (tanh(a x) tanh(b y)) e^{-x^2-y^2} dx dy by quadrature.
[[nodiscard]] double theorem_2d_lhs(double alpha, double beta, const quad::QuadConfig& cfg = {});

/// pi^{3/2} (1/a + 1/b) / 8.
[[nodiscard]] double theorem_2d_rhs(double alpha, double beta);

/// |lhs - rhs|; requires a b = pi or a b = 2 pi to 1e-12.
[[nodiscard]] double theorem_2d_residual(double alpha, double beta, const quad::QuadConfig& cfg = {});

/// beta = pi / alpha: int int tanh(a x)/tanh(b y) sin(2xy) e^{-x^2-y^2} vs sqrt(pi) a / 8.
[[nodiscard]] double cor_tanh_over_tanh_lhs(double alpha, const quad::QuadConfig& cfg = {});
[[nodiscard]] double cor_tanh_over_tanh_residual(double alpha, const quad::QuadConfig& cfg = {});

/// beta = 2 pi / alpha: int int sin(2xy)/(tanh(a x) sinh(b y)) e^{-x^2-y^2} vs sqrt(pi) a / 16.
[[nodiscard]] double cor_sinh_lhs(double alpha, const quad::QuadConfig& cfg = {});
[[nodiscard]] double cor_sinh_residual(double alpha, const quad::QuadConfig& cfg = {});

/// |int int sin(xy) f(x) f(y) / (tanh a x tanh b y) - pi^{3/2} (1/a + 1/b) f(0)^2 / (4 sqrt 2)|
/// for a b in {pi, pi/2}; f must pass eigen_residual <= 1e-8 at b in {0, 0.5, 1, 2}.
[[nodiscard]] double eigen_lemma_residual(const special::SelfReciprocalFn& f, double alpha,
                                          double beta, const quad::QuadConfig& cfg = {});

/// |Psi(a,b,g) - 2/sqrt(ab+g^2) Psi(4a/(ab+g^2), 4b/(ab+g^2), 4g/(ab+g^2))|
[[nodiscard]] double psi_transform_residual(const DoubleMordellParams& p,
                                            const quad::QuadConfig& cfg = {});

/// Signed sum sum_{k=1}^{n-1} {psi_{a/n}((n-2k)/n i)}^2 (each square is negative).
[[nodiscard]] double psi_square_sum(unsigned n, double alpha, const quad::QuadConfig& cfg = {});

/// sqrt a + 1/sqrt a - (4/n) sqrt a * psi_square_sum(n, a).
///
/// The 4/n weight is what the double integrals satisfy for every n; it
/// equals 1 at n = 4 and the sum vanishes for n = 1, 2.
[[nodiscard]] double reduction_rhs(const ReductionInstance& inst, const quad::QuadConfig& cfg = {});

struct ReductionSides {
    double scaled_small;  ///< 8/sqrt(n) Psi(2a/n, 2/(a n), 2/n)
    double scaled_large;  ///< sqrt(32 n) Psi(n/a, a n, n)
    double closed;        ///< reduction_rhs
};

[[nodiscard]] ReductionSides reduction_sides(const ReductionInstance& inst,
                                             const quad::QuadConfig& cfg = {});

/// Largest pairwise difference among the three reduction_sides.
[[nodiscard]] double reduction_residual(const ReductionInstance& inst,
                                        const quad::QuadConfig& cfg = {});

/// |sqrt(a) S(a) - sqrt(1/a) S(1/a)| with S = psi_square_sum(n, .). Needs n >= 2.
[[nodiscard]] double quadratic_symmetry_residual(unsigned n, double alpha,
                                                 const quad::QuadConfig& cfg = {});

struct PhiReductionSides {
    double lhs;  ///< (2n+1) sqrt(2/a) Phi(1/a, (4n+2)^2 a, 4n+2)
    double rhs;  ///< (-1)^n [phi_a(i/2)^2 + 2 sum_k (-1)^k phi_a(..) phi_a(..)]
};

[[nodiscard]] PhiReductionSides phi_reduction_sides(unsigned n, double alpha,
                                                    const quad::QuadConfig& cfg = {});
[[nodiscard]] double phi_reduction_residual(unsigned n, double alpha,
                                            const quad::QuadConfig& cfg = {});

}  // namespace mordell::mordell2d

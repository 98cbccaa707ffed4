#pragma once

// Stable hyperbolic kernels shared by every integrand, plus the two
// self-reciprocal test functions.

#include <functional>

#include "mordell/quad.hpp"

namespace mordell::special {

/// x / tanh(x), with the removable singularity at 0 filled in.
[[nodiscard]] double coth_scaled(double x);

/// x / sinh(x); even, equals 1 at 0, underflows cleanly for large |x|.
[[nodiscard]] double x_over_sinh(double x);

/// sin(x) / x.
[[nodiscard]] double sinc(double x);

/// sinh(x) / x.
[[nodiscard]] double sinhc(double x);

/// 1 / cosh(x) without overflow.
[[nodiscard]] double sech(double x);

/// sinh(num_scale x) / sinh(den_scale x).
///
/// Small arguments go through sinhc; once either argument exceeds 350 in
/// magnitude the ratio is formed from exponential differences so it never
/// overflows unless the true value does (then std::range_error).
[[nodiscard]] double hyperbolic_ratio(double num_scale, double den_scale, double x);

/// cosh(num_scale x) / cosh(den_scale x), same large-argument treatment.
[[nodiscard]] double cosh_ratio(double num_scale, double den_scale, double x);

/// Common value sqrt(pi / (8 alpha)) of both Fresnel integrals.
[[nodiscard]] double fresnel_value(double alpha);

/// sin(pi gamma x y) / (tanh(a_scale x) tanh(b_scale y)), finite on the axes.
[[nodiscard]] double kernel_sin2d(double x, double y, double gamma, double a_scale, double b_scale);

/// A function equal to its own cosine transform sqrt(2/pi) int_0^inf f(x) cos(bx) dx.
struct SelfReciprocalFn {
    std::function<double(double)> eval;
    double value_at_zero;
    quad::DecayHint decay;
};

/// exp(-x^2 / 2).
[[nodiscard]] SelfReciprocalFn gaussian_sech_eigenfunction();

/// 1 / cosh(sqrt(pi/2) x).
[[nodiscard]] SelfReciprocalFn sech_eigenfunction();

/// |sqrt(2/pi) int_0^inf f(x) cos(bx) dx - f(b)|.
[[nodiscard]] double eigen_residual(const SelfReciprocalFn& f, double b,
                                    const quad::QuadConfig& cfg = {});

}  // namespace mordell::special

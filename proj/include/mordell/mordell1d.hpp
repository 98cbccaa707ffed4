#pragma once

/**
 * @file mordell1d.hpp
 * @brief One-dimensional Mordell integrals.
 *
 *   phi_a(t) = int_0^inf cos(pi t x) / cosh(pi x) e^{-pi a x^2} dx
 *   psi_a(t) = int_0^inf sin(pi t x) / sinh(pi x) e^{-pi a x^2} dx
 *   F_a(t)   = int_0^inf sin(pi t x) / tanh(pi x) e^{-pi a x^2} dx
 *
 * for real t and for purely imaginary t = i tau. For imaginary arguments
 * psi and F are returned as complex numbers i * (real integral) so that
 * squares keep their sign.
 */

#include <complex>

#include "mordell/quad.hpp"

namespace mordell::mordell1d {

using cplx = std::complex<double>;

/// Argument of phi/psi/F: either real (t = magnitude) or imaginary (t = i magnitude).
class MordellArg {
public:
    enum class Kind { real, imaginary };

    static MordellArg real(double t) { return MordellArg(Kind::real, t); }
    static MordellArg imaginary(double tau) { return MordellArg(Kind::imaginary, tau); }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] double magnitude() const { return magnitude_; }
    [[nodiscard]] bool is_real() const { return kind_ == Kind::real; }
    [[nodiscard]] cplx value() const {
        return is_real() ? cplx(magnitude_, 0.0) : cplx(0.0, magnitude_);
    }
    [[nodiscard]] MordellArg negated() const { return MordellArg(kind_, -magnitude_); }

    /// i * this; real t becomes i t, imaginary i tau becomes -tau.
    [[nodiscard]] MordellArg times_i() const {
        return is_real() ? imaginary(magnitude_) : real(-magnitude_);
    }
    [[nodiscard]] MordellArg scaled(double s) const { return MordellArg(kind_, magnitude_ * s); }

private:
    MordellArg(Kind kind, double magnitude);
    Kind kind_;
    double magnitude_;
};

struct MordellParams {
    double alpha;
    MordellArg theta;

    void validate() const;
};

[[nodiscard]] double phi(const MordellParams& p, const quad::QuadConfig& cfg = {});
[[nodiscard]] cplx psi(const MordellParams& p, const quad::QuadConfig& cfg = {});
[[nodiscard]] cplx big_f(const MordellParams& p, const quad::QuadConfig& cfg = {});

/// |F_a(t) - (-i / sqrt a) e^{-pi t^2 / (4a)} F_{1/a}(i t / a)|, both sides by quadrature.
[[nodiscard]] double big_f_transform_residual(double alpha, const MordellArg& theta,
                                              const quad::QuadConfig& cfg = {});

}  // namespace mordell::mordell1d

#ifndef SHEARBQ_MODAL_EIGEN_HPP
#define SHEARBQ_MODAL_EIGEN_HPP

#include <array>

#include "shearbq/params.hpp"

namespace shearbq {

enum class EigenClass { RealDistinct, ComplexPair, Degenerate };

const char* to_string(EigenClass c);

/// Spectral data of the no-shear (beta = 0) coefficient matrix at one mode.
struct EigenReport {
    Complex lambda1;
    Complex lambda2;
    double alpha_star = 0.0;  ///< threshold separating real/complex regimes
    EigenClass classification = EigenClass::ComplexPair;
};

/// 2x2 coefficient matrix of the per-mode linear system, row-major
/// {a11, a12, a21, a22}. With beta = 0 its entries are time-independent.
using Matrix2c = std::array<Complex, 4>;

/// Coefficient matrix at frame time t (general beta); the alpha coupling is
/// defined as 0 on the k = 0 channel.
Matrix2c mode_matrix(const Params& params, const Mode& mode, double t);

/// Eigenvalues, alpha* and regime classification of the beta = 0 matrix.
/// The discriminant is evaluated as (k^2/(k^2+xi^2)) * (alpha* - alpha) so
/// the classification flips exactly at alpha = alpha*.
/// Throws ZeroK for k = 0 (that channel is pure heat flow).
EigenReport eigen_no_shear(const Params& params, const Mode& mode);

/// exp(t M) for the beta = 0 mode matrix, via the two-point Lagrange form
/// for distinct eigenvalues and the Jordan form e^{lambda t}(I + t(M -
/// lambda I)) in the degenerate case alpha = alpha*.
Matrix2c matrix_exponential_no_shear(const Params& params, const Mode& mode,
                                     double t);

/// Inviscid, no-shear rotation: the cos/sin solution matrix with frequency
/// k sqrt(alpha) / sqrt(k^2 + xi^2) applied to state0. Periodic in t with
/// period 2 pi sqrt(k^2+xi^2) / (|k| sqrt(alpha)), and conserves
/// alpha |omega|^2 + (k^2+xi^2) |theta|^2 exactly.
ModeState exact_rotation_inviscid(double alpha, const Mode& mode,
                                  const ModeState& state0, double t);

/// Inviscid Couette response in the sheared frame:
/// (omega0 + t * i k * theta0, theta0). Independent of beta.
ModeState inviscid_couette_mode(double beta, const Mode& mode,
                                const ModeState& state0, double t);

/// Predicted algebraic growth exponent of the inviscid alpha > 0, sheared
/// vorticity mode, measured against the squared-time variable z = 1 + t^2
/// (the argument of the underlying asymptotic expansion):
/// |omega(t)| ~ z^gamma with gamma = 1/4 + sqrt(1 - 4 alpha)/4. The
/// corresponding exponent in t itself is 2*gamma. For alpha > 1/4 the pair
/// of exponents becomes complex; the real part 1/4 is returned with the
/// oscillatory flag set.
struct GrowthExponent {
    double value = 0.0;
    bool oscillatory = false;
};

GrowthExponent growth_exponent_theory(double alpha);

}  // namespace shearbq

#endif  // SHEARBQ_MODAL_EIGEN_HPP

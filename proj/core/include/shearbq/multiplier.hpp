#ifndef SHEARBQ_MULTIPLIER_HPP
#define SHEARBQ_MULTIPLIER_HPP

#include "shearbq/params.hpp"

namespace shearbq {

/// Mixing multiplier in exact-integral form,
///
///   M(t,k,xi) = exp(-(1/|k|) [arctan(t - xi/k) + arctan(xi/k)]),  k != 0,
///   M(t,0,xi) = 1,
///
/// which satisfies M(0,.) = 1, e^{-pi} <= M <= 1, monotone non-increasing
/// in t, and -dM/dt / M = |k| / (k^2 + (xi - kt)^2) with equality.
double multiplier_M(double t, const Mode& mode);

/// The ratio -dM/dt / M = |k| / (k^2 + (xi - kt)^2). Throws ZeroK at k = 0.
double mdot_ratio(double t, const Mode& mode);

/// Generalization of M to shear rate beta (displacement beta*k*t); reduces
/// to multiplier_M at beta = 1 and to the constant 1 at beta = 0.
double multiplier_m_beta(double beta, double t, int k, double xi);

/// Lower bound achieved by this construction (the lemma's constant c).
inline constexpr double multiplier_floor() { return 0.043213918263772250; }

}  // namespace shearbq

#endif  // SHEARBQ_MULTIPLIER_HPP

#ifndef SHEARBQ_PHASE_HPP
#define SHEARBQ_PHASE_HPP

#include <cmath>

namespace shearbq {

/// Mixing phase integral of a sheared Fourier mode,
///
///     phi(k, xi, s, t) = int_s^t (xi - k*tau)^2 dtau .
///
/// Evaluated through the completed square
///
///     phi = (t-s) * [ (xi - k*(t+s)/2)^2 + k^2 (t-s)^2 / 12 ],
///
/// which is exact, cancellation-free, and makes the lower bound
/// phi(k,xi,0,t) >= k^2 t^3 / 12 (equality iff xi = k t/2) manifest.
/// For k = 0 this reduces to xi^2 (t-s).
inline double phase_integral(int k, double xi, double s, double t) {
    const double len = t - s;
    const double mid = xi - 0.5 * k * (t + s);
    return len * (mid * mid + double(k) * k * len * len / 12.0);
}

/// Dissipation factor exp(-cx k^2 (t-s) - cy * phase_integral(k,xi,s,t)).
/// Lies in (0, 1] for s <= t and nonnegative coefficients.
inline double heat_factor(double cx, double cy, int k, double xi, double s,
                          double t) {
    return std::exp(-cx * double(k) * k * (t - s) -
                    cy * phase_integral(k, xi, s, t));
}

}  // namespace shearbq

#endif  // SHEARBQ_PHASE_HPP

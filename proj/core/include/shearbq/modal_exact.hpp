#ifndef SHEARBQ_MODAL_EXACT_HPP
#define SHEARBQ_MODAL_EXACT_HPP

#include "shearbq/params.hpp"

namespace shearbq {

/// Temperature mode of the alpha = 0 linearized system in the sheared frame:
/// g(t) = exp(-eta_x k^2 t - eta_y * phase_integral(k,xi,0,t)) * theta0.
/// Valid for every k, including the k = 0 heat channel.
/// Throws AlphaNotZero when params.alpha != 0.
Complex exact_theta_alpha0(const Params& params, const Mode& mode,
                           Complex theta0, double t);

/// Homogeneous part of the vorticity mode: the heat factor acting on omega0.
Complex exact_omega_homogeneous(const Params& params, const Mode& mode,
                                Complex omega0, double t);

/// Duhamel contribution of the temperature forcing to the vorticity mode,
///
///   f2(t) = i k theta0 * int_0^t exp(-nu_x k^2 (t-s) - nu_y phi(s,t))
///                            * exp(-eta_x k^2 s - eta_y phi(0,s)) ds,
///
/// evaluated by adaptive quadrature of the positive kernel to `quad_tol`.
Complex exact_omega_duhamel(const Params& params, const Mode& mode,
                            Complex theta0, double t, double quad_tol = 1e-10);

/// Full vorticity mode of the alpha = 0 system: homogeneous + Duhamel part.
/// Requires alpha = 0 and k != 0 (throws AlphaNotZero / ZeroK).
Complex exact_omega_alpha0(const Params& params, const Mode& mode,
                           Complex omega0, Complex theta0, double t,
                           double quad_tol = 1e-10);

/// Coefficient-ordering case that selects the asymptotic profile omega1.
/// Determined solely by the signs of (eta_x - nu_x) and (eta_y - nu_y);
/// ties fall into the matching "both" case, the exact double tie is
/// EqualCoefficients.
enum class Omega1Case {
    EqualCoefficients,  ///< eta_x == nu_x and eta_y == nu_y
    NuLeEtaBoth,        ///< nu_x <= eta_x and nu_y <= eta_y
    NuGeEtaBoth,        ///< nu_x >= eta_x and nu_y >= eta_y
    MixedXLe,           ///< eta_x < nu_x and eta_y > nu_y
    MixedXGe,           ///< eta_x > nu_x and eta_y < nu_y
};

Omega1Case classify_omega1(const Params& params);

const char* to_string(Omega1Case c);

/// Slow asymptotic component omega1(t) of the vorticity response to
/// temperature forcing, per the case split above. The "both" orderings
/// extend the inner integral to an improper one (truncated where the
/// integrand envelope falls below tol/10, then adaptive quadrature); the
/// equal and mixed orderings keep the inner integral on [0, t], where no
/// discardable fast-decaying remainder exists.
/// Requires alpha = 0 and k != 0.
Complex omega1_profile(const Params& params, const Mode& mode, Complex theta0,
                       double t, double quad_tol = 1e-10);

}  // namespace shearbq

#endif  // SHEARBQ_MODAL_EXACT_HPP

#ifndef SHEARBQ_ENERGIES_HPP
#define SHEARBQ_ENERGIES_HPP

#include <utility>
#include <vector>

#include "shearbq/spectral_field.hpp"

namespace shearbq {

using ModeSet = std::vector<std::pair<Mode, ModeState>>;

/// No-shear energy alpha ||omega||_HN^2 + ||grad theta||_HN^2 and its exact
/// dissipation, so that d/dt value = -dissipation along solutions of the
/// beta = 0 linear system. Entries: "alpha_omega", "grad_theta", "E".
EnergyReport energy_no_shear(const ModeSet& states, const Params& params);

/// Sheared-frame energy at frame time t. The co-moving storage fixes the
/// gradient weights: "dx_theta" carries k^2, "dy_theta" the stored xi^2,
/// and "dy_theta_moving" the physical-frame (xi - beta k t)^2. Totals:
/// "E" = alpha_omega + dx_theta + dy_theta (stored-frequency convention),
/// "E_moving" = alpha_omega + dx_theta + dy_theta_moving.
EnergyReport energy_sheared(const ModeSet& states, const Params& params,
                            double t);

// --- grid-level weighted norms (over SpectralField coefficients) ---

/// Sum of <D>^{2n} |f|^2 (the squared H^n sequence norm).
double norm_hn_sq(const SpectralField& f, int n);

/// Sum of (k^2 + (xi - beta k t)^2) <D>^{2n} |f|^2 at the field's frame time.
double norm_grad_hn_sq(const SpectralField& f, int n, double beta);

/// Sum of M^2 <D>^{2n} |f|^2 with the beta-generalized multiplier.
double norm_a_sq(const SpectralField& f, int n, double beta);

/// Sum of (k^2 + (xi - beta k t)^2) M^2 <D>^{2n} |f|^2.
double norm_grad_a_sq(const SpectralField& f, int n, double beta);

/// Sum of (-Mdot M) <D>^{2n} |f|^2 = M^2 * beta|k|/(k^2+(xi-beta k t)^2) ...
double norm_mdot_sq(const SpectralField& f, int n, double beta);

struct BootstrapEnergies {
    double e_omega = 0.0;
    double e_theta = 0.0;
};

/// Bootstrap energies over a uniformly sampled time series of field pairs:
/// L-infinity-in-time term as a running max of ||A .||^2, the dissipation
/// and multiplier terms accumulated by the trapezoidal rule with spacing dt.
/// Assumes isotropic coefficients (nu = nu_x, eta = eta_x).
BootstrapEnergies energy_bootstrap(
    const std::vector<std::pair<SpectralField, SpectralField>>& series,
    const Params& params, double dt);

/// Large-balance functional alpha ||A omega||^2 + <A theta, -Laplacian_t A
/// theta> at frame time t (weights use the physical co-moving frequency).
double energy_largealpha(const SpectralField& omega, const SpectralField& theta,
                         const Params& params, double t);

/// Squared-operator theta weighting (k^2 + xi_phys^2)^2 M^2 <D>^{2n} |theta|^2,
/// the alternative dissipation form reported alongside the gradient form.
double largealpha_theta_dissipation_sq(const SpectralField& theta, int n,
                                       double beta);

}  // namespace shearbq

#endif  // SHEARBQ_ENERGIES_HPP

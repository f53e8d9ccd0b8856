#ifndef SHEARBQ_CHECKS_HPP
#define SHEARBQ_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace shearbq::checks {

/// One verification outcome. `margin` is the criterion-specific worst
/// ratio or error, already normalized so that pass <=> margin <= 1 wherever
/// a single ratio makes sense.
struct CheckResult {
    std::string name;
    bool pass = false;
    double margin = 0.0;
    std::string detail;
};

/// Phase-integral lower bound k^2 t^3 / 12 with equality at xi = k t / 2,
/// on random draws.
CheckResult phase_integral_bound(int draws = 10000, std::uint64_t seed = 42);

/// Inviscid Couette explicit solution against the adaptive integrator.
CheckResult couette_explicit(int draws = 100, std::uint64_t seed = 43);

/// No-shear rotation: numeric period against 2 pi sqrt(k^2+xi^2)/(k
/// sqrt(alpha)) and modal energy conservation.
CheckResult rotation_period(int draws = 20, std::uint64_t seed = 44);

/// Eigen threshold: trace/determinant identities, classification flip at
/// alpha*, and matrix-exponential reconstruction against the integrator.
CheckResult eigen_threshold(int draws = 1000, std::uint64_t seed = 45);

/// Fitted growth exponent of the inviscid balance oscillator against the
/// closed-form value, one result per coefficient.
std::vector<CheckResult> growth_exponents(
    const std::vector<double>& alphas = {0.05, 0.1, 0.1875});

/// Pointwise temperature envelope exp(-eta_x k^2 t - eta_y k^2 t^3/12) with
/// slack 1 + 1e-8.
CheckResult theta_envelope(int draws = 50, std::uint64_t seed = 46);

/// Sheared balance energy against the (1+t^2) exp envelope with slack 10 on
/// integrated trajectories (both gradient-weight conventions).
CheckResult wshear_envelope(int draws = 20, std::uint64_t seed = 47);

/// Remainder and profile envelopes of the omega1 decomposition for each
/// coefficient ordering.
std::vector<CheckResult> omega1_decomposition();

/// Multiplier construction: normalization, bounds, and exact -Mdot/M ratio
/// on a (t, k, xi) grid.
CheckResult multiplier_construction();

struct NonlinearCheckConfig {
    double nu = 0.05;
    double eta = 0.05;
    int sobolev_n = 5;
    int grid = 128;
    double delta_xi = 0.7853981633974483;  // 2 pi / 8
    double dt = 0.05;
    double t_end = 50.0;
    int seeds = 5;
    std::uint64_t seed0 = 1000;
    bool alpha_positive = false;  ///< alpha = (1/2) eta^{1/2} nu^{1/3} eps2/eps1
};

/// Bootstrap bounds E_omega <= 8 eps1^2, E_theta <= 8 eps2^2 over the run,
/// plus the fitted nonlinear decay rate against min(nu,eta)^{1/3}/10 and
/// the bare heat rate of the slowest retained nonzero mode. Returns
/// {bounds check, decay-rate check}.
std::vector<CheckResult> nonlinear_bootstrap(
    const NonlinearCheckConfig& cfg = NonlinearCheckConfig{});

/// Large-balance functional plus accumulated dissipation stays below eps^2.
CheckResult largealpha_energy(std::uint64_t seed = 2000);

/// Hermitian preservation, inviscid transport drift, dt-refinement order,
/// and the brute-force convolution oracle.
std::vector<CheckResult> solver_hygiene();

}  // namespace shearbq::checks

#endif  // SHEARBQ_CHECKS_HPP

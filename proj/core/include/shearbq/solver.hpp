#ifndef SHEARBQ_SOLVER_HPP
#define SHEARBQ_SOLVER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "shearbq/energies.hpp"
#include "shearbq/random_field.hpp"
#include "shearbq/spectral_field.hpp"

namespace shearbq {

struct GridSpec {
    int nx = 128;
    int ny = 128;
    double delta_xi = 0.7853981633974483;  ///< 2 pi / 8 vertical box
    double dealias_fraction = 2.0 / 3.0;
};

struct IcSpec {
    enum class Kind { Zero, BandRandom, SingleMode };
    Kind kind = Kind::BandRandom;
    double eps1 = 1e-3;        ///< target H^N norm of omega_0
    double eps2 = 1e-3;        ///< target H^N norm of theta_0
    std::uint64_t seed = 1;
    BandSpec band;             ///< excludes the k = 0 channel by default
    // SingleMode initial data:
    int k = 1;
    int j = 0;
    Complex omega_amp{0.0, 0.0};
    Complex theta_amp{0.0, 0.0};
};

struct SimConfig {
    Params params;
    GridSpec grid;
    double dt = 0.05;
    double t_end = 50.0;
    IcSpec ic;
    int snapshot_every = 5;
    bool linear_only = false;    ///< drop advection (linear-limit runs)
    bool enforce_horizon = true; ///< cap t_end at the shear-drift horizon
    bool check_cfl = true;
};

struct SimState {
    SpectralField omega;
    SpectralField theta;
    double t = 0.0;
};

/// Spectral Biot-Savart in the sheared frame:
/// v_hat = i * (-xi_phys, k) / (k^2 + xi_phys^2) * omega_hat with
/// xi_phys = xi - beta*k*t; the (k, xi_phys) = (0,0) mode is zero.
std::pair<SpectralField, SpectralField> velocity_from_vorticity(
    const SpectralField& omega, double t, double beta);

/// Large-balance budget tracked over a run: the sup of the balance
/// functional plus its accumulated dissipation integrals.
struct LargeAlphaBudget {
    double sup_functional = 0.0;
    double diss_omega = 0.0;        ///< nu * alpha * int ||grad_t A omega||^2
    double diss_theta_grad = 0.0;   ///< eta * int ||grad_t A theta||^2
    double diss_theta_biharm = 0.0; ///< eta * int of the squared-operator form
    double total() const {
        return sup_functional + diss_omega + diss_theta_grad;
    }
};

struct SimResult {
    std::vector<EnergyReport> reports;
    SimState final_state;
    BootstrapEnergies bootstrap;
    bool bootstrap_omega_exceeded = false;  ///< E_omega ever above 8 eps1^2
    bool bootstrap_theta_exceeded = false;  ///< E_theta ever above 8 eps2^2
    LargeAlphaBudget largealpha;
    double horizon = 0.0;     ///< shear-drift horizon of the configuration
    double t_end_used = 0.0;  ///< min(config t_end, horizon)
};

/// Dealiased pseudospectral integrator for the sheared-frame system with an
/// exponential-integrating-factor RK4 step: the per-mode heat factors over
/// [t, t+dt] are applied exactly, the advection and the two linear
/// couplings are advanced explicitly. Hermitian symmetry of the fields is
/// preserved by construction (products are formed from real physical
/// arrays).
class PseudoSpectral {
  public:
    explicit PseudoSpectral(const SimConfig& cfg);
    ~PseudoSpectral();
    PseudoSpectral(const PseudoSpectral&) = delete;
    PseudoSpectral& operator=(const PseudoSpectral&) = delete;

    const SimConfig& config() const { return cfg_; }

    SimState initial_state();

    /// -(v . grad_t omega) - (v . grad_t theta), dealiased, plus the
    /// couplings d_x theta (omega equation) and the balance term (theta
    /// equation).
    void nonlinear_term(const SimState& s, SpectralField& n_omega,
                        SpectralField& n_theta);

    /// Advances by cfg.dt (or the passed override). Throws CflViolation if
    /// 0.5 * min grid spacing / max |v| falls below the step size.
    void step(SimState& s, double dt_override = -1.0);

    /// Max |k| carried by the initial data; sets the drift horizon
    /// Xi * delta_xi / (beta * k_ic).
    double shear_horizon() const;

    void apply_dealias(SpectralField& f) const;

    double last_max_velocity() const { return last_max_velocity_; }

  private:
    SimConfig cfg_;
    struct Work;
    std::unique_ptr<Work> w_;
    double last_max_velocity_ = 0.0;

    void advect(const SpectralField& omega, const SpectralField& theta,
                double t, SpectralField& n_omega, SpectralField& n_theta);
};

SimResult run_simulation(const SimConfig& cfg);

/// Binary spectra dump (little-endian, documented in docs/config.md):
/// magic "SBQSNAP1", grid sizes, frame time, parameters, then the omega and
/// theta coefficient arrays.
void write_snapshot(const std::string& path, const SimState& s,
                    const Params& params);
SimState read_snapshot(const std::string& path, Params* params_out = nullptr);

}  // namespace shearbq

#endif  // SHEARBQ_SOLVER_HPP

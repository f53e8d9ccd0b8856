#ifndef SHEARBQ_CLI_CONFIG_HPP
#define SHEARBQ_CLI_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shearbq/fitting.hpp"
#include "shearbq/params.hpp"
#include "shearbq/solver.hpp"

namespace shearbq::cli {

enum class ScenarioKind {
    ModalExact,
    ModalOde,
    EigenSweep,
    InviscidGrowth,
    NonlinearRun,
    EnvelopeSuite,
};

const char* to_string(ScenarioKind k);

/// Mode list for modal studies: an explicit (k, xi) grid, or `count` random
/// draws from the given ranges.
struct ModeSelection {
    std::vector<int> k_list{1};
    std::vector<double> xi_list{0.0};
    int random_count = 0;  ///< > 0 draws random modes instead of the grid
    int k_min = -5, k_max = 5;
    double xi_lo = -5.0, xi_hi = 5.0;
};

struct TimeGrid {
    double t_end = 30.0;
    int samples = 301;  ///< uniform samples including t = 0
    double tol = 1e-10;
};

struct FitRequest {
    FitKind kind = FitKind::Exponential;
    std::optional<FitWindow> window;  ///< defaults to the standard window
    std::string quantity = "omega_abs";
};

struct SweepSpec {
    std::vector<double> alphas{0.01};
    std::vector<int> k_list{1};
    std::vector<double> xi_list{0.0};
    bool verify = false;  ///< cross-check exp(tM) against the integrator
};

struct GrowthSpec {
    std::vector<double> alphas{0.1875};
    double t_max = 1e4;
};

struct Scenario {
    std::string name;
    ScenarioKind kind = ScenarioKind::ModalOde;
    std::string output_dir;
    std::uint64_t seed = 1;
    Params params;

    ModeSelection modes;
    ModeState initial_state{Complex{1.0, 0.0}, Complex{1.0, 0.0}};
    TimeGrid time;
    std::vector<FitRequest> fits;
    std::string oracle = "none";  ///< modal-ode: couette | rotation-period | exact-alpha0

    SweepSpec sweep;
    GrowthSpec growth;

    SimConfig sim;                ///< nonlinear-run
    bool check_bootstrap = false;
    bool write_final_snapshot = false;

    std::vector<std::string> checks;  ///< envelope-suite entries
};

/// Parses the documented key/value scenario format. Throws ParseError with
/// line/column for malformed text and ValidationError naming the offending
/// or missing field.
Scenario parse_config(const std::string& text);

Scenario load_config(const std::string& path);

}  // namespace shearbq::cli

#endif  // SHEARBQ_CLI_CONFIG_HPP

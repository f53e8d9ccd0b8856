#ifndef SHEARBQ_CLI_RUN_SCENARIO_HPP
#define SHEARBQ_CLI_RUN_SCENARIO_HPP

#include <string>

#include "config.hpp"

namespace shearbq::cli {

struct RunOptions {
    std::string output_dir_override;
    int threads = 1;
    bool verbose = false;
};

/// Dispatches a validated scenario and writes series.csv / fits.json /
/// summary.json into the output directory. Returns the number of failed
/// summary checks (0 when everything passed or nothing was checked).
int run_scenario(const Scenario& scenario, const RunOptions& options);

}  // namespace shearbq::cli

#endif  // SHEARBQ_CLI_RUN_SCENARIO_HPP

#include <cstdio>
#include <exception>

#include "CLI11.hpp"
#include "config.hpp"
#include "run_scenario.hpp"
#include "shearbq/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "shearbq - spectral studies of sheared, stratified 2D Boussinesq "
        "flow: modal solutions, energy functionals, a pseudospectral "
        "solver, and their verification checks"};
    app.require_subcommand(1);

    std::string config_path;
    shearbq::cli::RunOptions options;

    CLI::App* run = app.add_subcommand("run", "run a scenario config");
    run->add_option("config", config_path, "scenario config file")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--output-dir", options.output_dir_override,
                    "override the scenario's output directory");
    run->add_option("--threads", options.threads,
                    "worker threads for mode sweeps (results are merged "
                    "in deterministic order; numerics do not depend on "
                    "this setting)")
        ->check(CLI::PositiveNumber);
    run->add_flag("--verbose", options.verbose,
                  "print each check result, not only failures");

    CLI11_PARSE(app, argc, argv);

    try {
        const shearbq::cli::Scenario sc =
            shearbq::cli::load_config(config_path);
        const int failures = shearbq::cli::run_scenario(sc, options);
        if (failures > 0)
            std::fprintf(stderr, "%d check(s) failed\n", failures);
        return failures == 0 ? 0 : 1;
    } catch (const shearbq::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected error: %s\n", e.what());
        return 3;
    }
}

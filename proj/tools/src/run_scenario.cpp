#include "run_scenario.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "json.hpp"
#include "shearbq/checks.hpp"
#include "shearbq/energies.hpp"
#include "shearbq/errors.hpp"
#include "shearbq/modal_eigen.hpp"
#include "shearbq/modal_exact.hpp"
#include "shearbq/multiplier.hpp"
#include "shearbq/ode.hpp"
#include "shearbq/random_field.hpp"
#include "shearbq/solver.hpp"

namespace shearbq::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kSchemaVersion = 1;

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void write_csv(const fs::path& path) const {
        std::ofstream os(path);
        if (!os) throw IoError("cannot write " + path.string());
        for (std::size_t c = 0; c < columns.size(); ++c)
            os << columns[c] << (c + 1 < columns.size() ? "," : "\n");
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                os << row[c] << (c + 1 < row.size() ? "," : "\n");
        }
        if (!os) throw IoError("short write on " + path.string());
    }
};

void write_json(const fs::path& path, const json& j) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot write " + path.string());
    os << j.dump(2) << "\n";
    if (!os) throw IoError("short write on " + path.string());
}

json fit_to_json(const DecayFit& fit, const std::string& quantity) {
    json j;
    j["quantity"] = quantity;
    j["kind"] = fit.kind == FitKind::Exponential ? "exponential" : "algebraic";
    j["rate_or_exponent"] = fit.rate_or_exponent;
    j["residual"] = fit.residual;
    j["window"] = {fit.window.t_lo, fit.window.t_hi};
    return j;
}

json check_to_json(const checks::CheckResult& r) {
    json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["margin"] = r.margin;
    j["detail"] = r.detail;
    return j;
}

// index-chunked deterministic parallel loop: results are produced into
// per-index slots, so the merge order never depends on scheduling
template <class F>
void parallel_for(int n, int threads, F body) {
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t]() {
            for (int i = t; i < n; i += threads) body(i);
        });
    for (auto& th : pool) th.join();
}

std::string mode_label(const Mode& m) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "k%d_xi%g", m.k, m.xi);
    return buf;
}

std::vector<Mode> resolve_modes(const Scenario& sc) {
    std::vector<Mode> modes;
    if (sc.modes.random_count > 0) {
        std::mt19937_64 rng(sc.seed);
        for (int i = 0; i < sc.modes.random_count; ++i) {
            Mode m;
            const int span = sc.modes.k_max - sc.modes.k_min + 1;
            m.k = sc.modes.k_min + int(rng() % std::uint64_t(span));
            if (m.k == 0) m.k = std::max(1, sc.modes.k_max);
            m.xi = sc.modes.xi_lo +
                   (sc.modes.xi_hi - sc.modes.xi_lo) * uniform01(rng);
            modes.push_back(m);
        }
    } else {
        for (int k : sc.modes.k_list)
            for (double xi : sc.modes.xi_list) modes.push_back(Mode{k, xi});
    }
    if (modes.empty()) throw ValidationError("no modes selected");
    return modes;
}

std::vector<double> time_samples(const TimeGrid& grid) {
    std::vector<double> ts(grid.samples);
    for (int i = 0; i < grid.samples; ++i)
        ts[i] = grid.t_end * i / double(grid.samples - 1);
    return ts;
}

// trajectory of one mode sampled on the uniform grid
std::vector<ModeState> sample_mode(const Scenario& sc, const Mode& m,
                                   const std::vector<double>& ts,
                                   bool exact_forms) {
    std::vector<ModeState> out(ts.size());
    if (exact_forms) {
        for (std::size_t i = 0; i < ts.size(); ++i) {
            out[i].theta_hat = exact_theta_alpha0(
                sc.params, m, sc.initial_state.theta_hat, ts[i]);
            out[i].omega_hat =
                m.k == 0
                    ? exact_omega_homogeneous(sc.params, m,
                                              sc.initial_state.omega_hat,
                                              ts[i])
                    : exact_omega_alpha0(sc.params, m,
                                         sc.initial_state.omega_hat,
                                         sc.initial_state.theta_hat, ts[i],
                                         sc.time.tol);
        }
        return out;
    }
    ModeState state = sc.initial_state;
    out[0] = state;
    for (std::size_t i = 1; i < ts.size(); ++i) {
        state = integrate_mode_final(sc.params, m, state, ts[i - 1], ts[i],
                                     sc.time.tol);
        out[i] = state;
    }
    return out;
}

json make_summary(const Scenario& sc,
                  const std::vector<checks::CheckResult>& results) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["scenario"] = sc.name;
    j["kind"] = to_string(sc.kind);
    j["seed"] = sc.seed;
    bool all = true;
    json arr = json::array();
    for (const auto& r : results) {
        arr.push_back(check_to_json(r));
        all = all && r.pass;
    }
    j["checks"] = arr;
    j["all_pass"] = all;
    return j;
}

int finish(const Scenario& sc, const fs::path& dir,
           const std::vector<checks::CheckResult>& results,
           const std::vector<json>& fits, bool verbose) {
    json fj;
    fj["schema_version"] = kSchemaVersion;
    fj["scenario"] = sc.name;
    fj["fits"] = fits;
    write_json(dir / "fits.json", fj);
    write_json(dir / "summary.json", make_summary(sc, results));
    int failures = 0;
    for (const auto& r : results) {
        if (verbose || !r.pass)
            std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL",
                        r.name.c_str(), r.detail.c_str());
        if (!r.pass) ++failures;
    }
    return failures;
}

// ---- kind handlers -------------------------------------------------------

int run_modal(const Scenario& sc, const fs::path& dir, const RunOptions& opt,
              bool exact_forms) {
    if (exact_forms && sc.params.alpha != 0.0)
        throw ValidationError(
            "modal-exact requires alpha = 0 (closed forms)");
    const auto modes = resolve_modes(sc);
    const auto ts = time_samples(sc.time);

    std::vector<std::vector<ModeState>> samples(modes.size());
    parallel_for(int(modes.size()), opt.threads, [&](int i) {
        samples[i] = sample_mode(sc, modes[i], ts, exact_forms);
    });

    Table table;
    table.columns.push_back("t");
    for (const Mode& m : modes) {
        const std::string base = mode_label(m);
        for (const char* part :
             {"_omega_re", "_omega_im", "_omega_abs", "_theta_re",
              "_theta_im", "_theta_abs"})
            table.columns.push_back(base + part);
    }
    for (std::size_t r = 0; r < ts.size(); ++r) {
        std::vector<std::string> row{num17(ts[r])};
        for (std::size_t i = 0; i < modes.size(); ++i) {
            const ModeState& s = samples[i][r];
            row.push_back(num17(s.omega_hat.real()));
            row.push_back(num17(s.omega_hat.imag()));
            row.push_back(num17(std::abs(s.omega_hat)));
            row.push_back(num17(s.theta_hat.real()));
            row.push_back(num17(s.theta_hat.imag()));
            row.push_back(num17(std::abs(s.theta_hat)));
        }
        table.rows.push_back(std::move(row));
    }
    table.write_csv(dir / "series.csv");

    std::vector<checks::CheckResult> results;
    std::vector<json> fits;

    if (sc.oracle == "couette") {
        double worst = 0.0;
        for (std::size_t i = 0; i < modes.size(); ++i)
            for (std::size_t r = 0; r < ts.size(); ++r) {
                const ModeState ref = inviscid_couette_mode(
                    sc.params.beta, modes[i], sc.initial_state, ts[r]);
                worst = std::max(
                    worst, std::abs(samples[i][r].omega_hat - ref.omega_hat));
                worst = std::max(
                    worst, std::abs(samples[i][r].theta_hat - ref.theta_hat));
            }
        checks::CheckResult r;
        r.name = "couette-oracle";
        r.pass = worst <= 1e-8;
        r.margin = worst / 1e-8;
        r.detail = "max |numeric - explicit| = " + num17(worst);
        results.push_back(r);
    } else if (sc.oracle == "exact-alpha0") {
        double worst = 0.0;
        for (std::size_t i = 0; i < modes.size(); ++i)
            for (std::size_t r = 0; r < ts.size(); ++r) {
                const Complex g = exact_theta_alpha0(
                    sc.params, modes[i], sc.initial_state.theta_hat, ts[r]);
                worst =
                    std::max(worst, std::abs(samples[i][r].theta_hat - g));
                if (modes[i].k != 0) {
                    const Complex f = exact_omega_alpha0(
                        sc.params, modes[i], sc.initial_state.omega_hat,
                        sc.initial_state.theta_hat, ts[r], sc.time.tol);
                    worst = std::max(worst,
                                     std::abs(samples[i][r].omega_hat - f));
                }
            }
        checks::CheckResult r;
        r.name = "exact-alpha0-oracle";
        r.pass = worst <= 1e-7;
        r.margin = worst / 1e-7;
        r.detail = "max |numeric - closed form| = " + num17(worst);
        results.push_back(r);
    } else if (sc.oracle != "none") {
        throw ValidationError("unknown oracle '" + sc.oracle + "'");
    }

    for (const FitRequest& fr : sc.fits) {
        const bool want_theta = fr.quantity == "theta_abs";
        if (!want_theta && fr.quantity != "omega_abs")
            throw ValidationError("[fit] quantity must be omega_abs|theta_abs");
        for (std::size_t i = 0; i < modes.size(); ++i) {
            std::vector<double> vals(ts.size());
            for (std::size_t r = 0; r < ts.size(); ++r)
                vals[r] = want_theta ? std::abs(samples[i][r].theta_hat)
                                     : std::abs(samples[i][r].omega_hat);
            const FitWindow win =
                fr.window ? *fr.window : default_fit_window(ts);
            const DecayFit fit =
                fr.kind == FitKind::Exponential
                    ? fit_exponential_rate(ts, vals, win)
                    : fit_algebraic_exponent(ts, vals, win);
            fits.push_back(fit_to_json(
                fit, mode_label(modes[i]) + "_" + fr.quantity));
        }
    }
    return finish(sc, dir, results, fits, opt.verbose);
}

int run_eigen_sweep(const Scenario& sc, const fs::path& dir,
                    const RunOptions& opt) {
    struct Row {
        double alpha;
        Mode m;
        EigenReport rep;
        double tracedet_defect = 0.0;
        double reconstruction_error = 0.0;
    };
    std::vector<Row> rows;
    for (double alpha : sc.sweep.alphas)
        for (int k : sc.sweep.k_list)
            for (double xi : sc.sweep.xi_list)
                rows.push_back(Row{alpha, Mode{k, xi}, {}, 0.0, 0.0});

    parallel_for(int(rows.size()), opt.threads, [&](int i) {
        Row& row = rows[i];
        Params p = sc.params;
        p.alpha = row.alpha;
        p.beta = 0.0;
        row.rep = eigen_no_shear(p, row.m);
        const Matrix2c M = mode_matrix(p, row.m, 0.0);
        const Complex tr = M[0] + M[3];
        const Complex det = M[0] * M[3] - M[1] * M[2];
        row.tracedet_defect = std::max(
            std::abs(row.rep.lambda1 + row.rep.lambda2 - tr) /
                std::max(1e-30, std::abs(tr)),
            std::abs(row.rep.lambda1 * row.rep.lambda2 - det) /
                std::max(1e-30, std::abs(det)));
        if (sc.sweep.verify) {
            const ModeState s0{Complex{1.0, 0.0}, Complex{0.5, 0.5}};
            const Matrix2c E = matrix_exponential_no_shear(p, row.m, 5.0);
            const ModeState rec{E[0] * s0.omega_hat + E[1] * s0.theta_hat,
                                E[2] * s0.omega_hat + E[3] * s0.theta_hat};
            const ModeState num =
                integrate_mode_final(p, row.m, s0, 0.0, 5.0, 1e-11);
            const double scale =
                std::max(1.0, std::max(std::abs(num.omega_hat),
                                       std::abs(num.theta_hat)));
            row.reconstruction_error =
                std::max(std::abs(rec.omega_hat - num.omega_hat),
                         std::abs(rec.theta_hat - num.theta_hat)) /
                scale;
        }
    });

    Table table;
    table.columns = {"alpha",      "k",          "xi",
                     "lambda1_re", "lambda1_im", "lambda2_re",
                     "lambda2_im", "alpha_star", "classification"};
    if (sc.sweep.verify) {
        table.columns.push_back("tracedet_defect");
        table.columns.push_back("reconstruction_error");
    }
    for (const Row& row : rows) {
        std::vector<std::string> r{
            num17(row.alpha),
            std::to_string(row.m.k),
            num17(row.m.xi),
            num17(row.rep.lambda1.real()),
            num17(row.rep.lambda1.imag()),
            num17(row.rep.lambda2.real()),
            num17(row.rep.lambda2.imag()),
            num17(row.rep.alpha_star),
            to_string(row.rep.classification)};
        if (sc.sweep.verify) {
            r.push_back(num17(row.tracedet_defect));
            r.push_back(num17(row.reconstruction_error));
        }
        table.rows.push_back(std::move(r));
    }
    table.write_csv(dir / "series.csv");

    std::vector<checks::CheckResult> results;
    if (sc.sweep.verify) {
        double worst_td = 0.0, worst_rec = 0.0;
        for (const Row& row : rows) {
            worst_td = std::max(worst_td, row.tracedet_defect);
            worst_rec = std::max(worst_rec, row.reconstruction_error);
        }
        checks::CheckResult r;
        r.name = "eigen-sweep-verify";
        r.pass = worst_td <= 1e-12 && worst_rec <= 1e-8;
        r.margin = std::max(worst_td / 1e-12, worst_rec / 1e-8);
        r.detail = "trace/det defect " + num17(worst_td) +
                   ", reconstruction error " + num17(worst_rec);
        results.push_back(r);
    }
    return finish(sc, dir, results, {}, opt.verbose);
}

int run_growth(const Scenario& sc, const fs::path& dir,
               const RunOptions& opt) {
    std::vector<checks::CheckResult> results;
    std::vector<json> fits;
    Table table;
    table.columns = {"alpha", "t", "z", "omega_abs"};
    for (double alpha : sc.growth.alphas) {
        const double gamma = growth_exponent_theory(alpha).value;
        const double t0 = 1e2;
        const double z0 = 1.0 + t0 * t0;
        const Complex y0{std::pow(z0, gamma), 0.0};
        const Complex yp0{2.0 * gamma * t0 * std::pow(z0, gamma - 1.0), 0.0};
        const auto traj = integrate_second_order(alpha, t0, sc.growth.t_max,
                                                 y0, yp0, sc.time.tol);
        std::vector<double> zs, vals;
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
            const double t = traj.times[i];
            const double z = 1.0 + t * t;
            const double v = std::abs(traj.states[i].y);
            zs.push_back(z);
            vals.push_back(v);
            table.rows.push_back(
                {num17(alpha), num17(t), num17(z), num17(v)});
        }
        const DecayFit fit =
            fit_algebraic_exponent(zs, vals, FitWindow{zs.front(), zs.back()});
        fits.push_back(
            fit_to_json(fit, "alpha=" + num17(alpha) + "_z_exponent"));
        checks::CheckResult r;
        r.name = "growth-exponent(alpha=" + num17(alpha) + ")";
        const double err = std::abs(fit.rate_or_exponent - gamma);
        r.pass = err <= 0.02;
        r.margin = err / 0.02;
        r.detail = "fit " + num17(fit.rate_or_exponent) + " vs theory " +
                   num17(gamma);
        results.push_back(r);
    }
    table.write_csv(dir / "series.csv");
    return finish(sc, dir, results, fits, opt.verbose);
}

int run_nonlinear(const Scenario& sc, const fs::path& dir,
                  const RunOptions& opt) {
    SimConfig cfg = sc.sim;
    cfg.params = sc.params;
    cfg.ic.seed = sc.seed;
    const SimResult res = run_simulation(cfg);

    Table table;
    table.columns.push_back("t");
    if (!res.reports.empty())
        for (const auto& [name, entry] : res.reports.front().entries) {
            table.columns.push_back(name);
            table.columns.push_back(name + "_dissipation");
        }
    for (const auto& rep : res.reports) {
        std::vector<std::string> row{num17(rep.time)};
        for (const auto& [name, entry] : rep.entries) {
            row.push_back(num17(entry.value));
            row.push_back(num17(entry.dissipation));
        }
        table.rows.push_back(std::move(row));
    }
    table.write_csv(dir / "series.csv");

    std::vector<checks::CheckResult> results;
    std::vector<json> fits;

    if (sc.check_bootstrap) {
        const double thr1 = 8.0 * cfg.ic.eps1 * cfg.ic.eps1;
        const double thr2 = 8.0 * cfg.ic.eps2 * cfg.ic.eps2;
        checks::CheckResult r;
        r.name = "bootstrap-bounds";
        r.pass = !res.bootstrap_omega_exceeded &&
                 !res.bootstrap_theta_exceeded &&
                 res.bootstrap.e_omega <= thr1 &&
                 res.bootstrap.e_theta <= thr2;
        r.margin = std::max(res.bootstrap.e_omega / thr1,
                            res.bootstrap.e_theta / thr2);
        r.detail = "E_omega = " + num17(res.bootstrap.e_omega) + " vs " +
                   num17(thr1) + ", E_theta = " +
                   num17(res.bootstrap.e_theta) + " vs " + num17(thr2) +
                   ", horizon " + num17(res.horizon);
        results.push_back(r);
    }

    for (const FitRequest& fr : sc.fits) {
        std::vector<double> ts, vals;
        for (const auto& rep : res.reports) {
            double v = 0.0;
            if (fr.quantity == "hn_norm_sum")
                v = std::sqrt(rep.value("omega_hn_sq")) +
                    std::sqrt(rep.value("theta_hn_sq"));
            else if (rep.entries.count(fr.quantity))
                v = rep.value(fr.quantity);
            else
                throw ValidationError("[fit] unknown quantity '" +
                                      fr.quantity + "'");
            if (v > 1e-12) {
                ts.push_back(rep.time);
                vals.push_back(v);
            }
        }
        const FitWindow win = fr.window ? *fr.window : default_fit_window(ts);
        const DecayFit fit = fr.kind == FitKind::Exponential
                                 ? fit_exponential_rate(ts, vals, win)
                                 : fit_algebraic_exponent(ts, vals, win);
        fits.push_back(fit_to_json(fit, fr.quantity));
    }

    if (sc.write_final_snapshot)
        write_snapshot((dir / "final_state.snap").string(), res.final_state,
                       cfg.params);

    return finish(sc, dir, results, fits, opt.verbose);
}

int run_envelope_suite(const Scenario& sc, const fs::path& dir,
                       const RunOptions& opt) {
    std::vector<checks::CheckResult> results;
    for (const std::string& name : sc.checks) {
        using namespace shearbq::checks;
        if (name == "phase-integral") {
            results.push_back(phase_integral_bound(10000, sc.seed));
        } else if (name == "couette") {
            results.push_back(couette_explicit(100, sc.seed));
        } else if (name == "rotation") {
            results.push_back(rotation_period(20, sc.seed));
        } else if (name == "eigen") {
            results.push_back(eigen_threshold(1000, sc.seed));
        } else if (name == "growth") {
            for (auto& r : growth_exponents()) results.push_back(r);
        } else if (name == "theta-envelope") {
            results.push_back(theta_envelope(50, sc.seed));
        } else if (name == "wshear-envelope") {
            results.push_back(wshear_envelope(20, sc.seed));
        } else if (name == "omega1") {
            for (auto& r : omega1_decomposition()) results.push_back(r);
        } else if (name == "multiplier") {
            results.push_back(multiplier_construction());
        } else if (name == "bootstrap" || name == "bootstrap-alpha") {
            NonlinearCheckConfig nc;
            nc.alpha_positive = name == "bootstrap-alpha";
            nc.seed0 = sc.seed;
            for (auto& r : nonlinear_bootstrap(nc)) results.push_back(r);
        } else if (name == "largealpha") {
            results.push_back(largealpha_energy(sc.seed));
        } else if (name == "solver-hygiene") {
            for (auto& r : solver_hygiene()) results.push_back(r);
        } else {
            throw ValidationError("unknown check '" + name + "'");
        }
    }
    return finish(sc, dir, results, {}, opt.verbose);
}

}  // namespace

int run_scenario(const Scenario& sc, const RunOptions& opt) {
    std::string out = opt.output_dir_override.empty()
                          ? sc.output_dir
                          : opt.output_dir_override;
    if (out.empty())
        throw ValidationError(
            "no output directory (set [scenario] output_dir or pass "
            "--output-dir)");
    fs::path dir(out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output dir " + dir.string());

    switch (sc.kind) {
        case ScenarioKind::ModalExact:
            return run_modal(sc, dir, opt, true);
        case ScenarioKind::ModalOde:
            return run_modal(sc, dir, opt, false);
        case ScenarioKind::EigenSweep:
            return run_eigen_sweep(sc, dir, opt);
        case ScenarioKind::InviscidGrowth:
            return run_growth(sc, dir, opt);
        case ScenarioKind::NonlinearRun:
            return run_nonlinear(sc, dir, opt);
        case ScenarioKind::EnvelopeSuite:
            return run_envelope_suite(sc, dir, opt);
    }
    return 1;
}

}  // namespace shearbq::cli

#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "shearbq/errors.hpp"

namespace shearbq::cli {

const char* to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::ModalExact: return "modal-exact";
        case ScenarioKind::ModalOde: return "modal-ode";
        case ScenarioKind::EigenSweep: return "eigen-sweep";
        case ScenarioKind::InviscidGrowth: return "inviscid-growth";
        case ScenarioKind::NonlinearRun: return "nonlinear-run";
        case ScenarioKind::EnvelopeSuite: return "envelope-suite";
    }
    return "?";
}

namespace {

struct RawEntry {
    std::string value;
    int line = 0;
    bool used = false;
};

using Section = std::map<std::string, RawEntry>;

struct RawConfig {
    std::map<std::string, Section> sections;
    std::map<std::string, int> section_lines;
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

RawConfig tokenize(const std::string& text) {
    RawConfig raw;
    std::istringstream is(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']')
                throw ParseError("unterminated section header", lineno,
                                 int(line.find('[')) + 1);
            section = trim(body.substr(1, body.size() - 2));
            if (section.empty())
                throw ParseError("empty section name", lineno, 1);
            raw.sections[section];
            raw.section_lines.emplace(section, lineno);
            continue;
        }
        const std::size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", lineno,
                             int(line.find(body.front())) + 1);
        if (section.empty())
            throw ParseError("key outside any [section]", lineno, 1);
        const std::string key = trim(body.substr(0, eq));
        if (key.empty()) throw ParseError("empty key", lineno, 1);
        raw.sections[section][key] =
            RawEntry{trim(body.substr(eq + 1)), lineno, false};
    }
    return raw;
}

class Reader {
  public:
    explicit Reader(RawConfig& raw) : raw_(raw) {}

    bool has(const std::string& sec, const std::string& key) {
        auto s = raw_.sections.find(sec);
        return s != raw_.sections.end() && s->second.count(key) > 0;
    }

    RawEntry& entry(const std::string& sec, const std::string& key) {
        auto& e = raw_.sections.at(sec).at(key);
        e.used = true;
        return e;
    }

    std::string str(const std::string& sec, const std::string& key,
                    const std::string& fallback) {
        if (!has(sec, key)) return fallback;
        return entry(sec, key).value;
    }

    std::string required(const std::string& sec, const std::string& key) {
        if (!has(sec, key))
            throw ValidationError("missing required field [" + sec + "] " +
                                  key);
        return entry(sec, key).value;
    }

    double num(const std::string& sec, const std::string& key,
               double fallback) {
        if (!has(sec, key)) return fallback;
        return parse_num(entry(sec, key));
    }

    int integer(const std::string& sec, const std::string& key,
                int fallback) {
        return int(std::llround(num(sec, key, double(fallback))));
    }

    bool boolean(const std::string& sec, const std::string& key,
                 bool fallback) {
        if (!has(sec, key)) return fallback;
        const RawEntry& e = entry(sec, key);
        if (e.value == "true" || e.value == "on" || e.value == "1")
            return true;
        if (e.value == "false" || e.value == "off" || e.value == "0")
            return false;
        throw ParseError("expected boolean, got '" + e.value + "'", e.line, 1);
    }

    std::vector<double> num_list(const std::string& sec,
                                 const std::string& key,
                                 std::vector<double> fallback) {
        if (!has(sec, key)) return fallback;
        const RawEntry& e = entry(sec, key);
        std::istringstream is(e.value);
        std::vector<double> out;
        std::string tok;
        while (is >> tok) out.push_back(parse_token(tok, e.line));
        if (out.empty())
            throw ParseError("empty list for '" + key + "'", e.line, 1);
        return out;
    }

    std::vector<std::string> word_list(const std::string& sec,
                                       const std::string& key) {
        std::vector<std::string> out;
        if (!has(sec, key)) return out;
        std::istringstream is(entry(sec, key).value);
        std::string tok;
        while (is >> tok) out.push_back(tok);
        return out;
    }

    void reject_unused() const {
        for (const auto& [sec, entries] : raw_.sections)
            for (const auto& [key, e] : entries)
                if (!e.used)
                    throw ValidationError("unknown field [" + sec + "] " +
                                          key + " (line " +
                                          std::to_string(e.line) + ")");
    }

  private:
    static double parse_token(const std::string& tok, int line) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("malformed number '" + tok + "'", line, 1);
        }
        if (used != tok.size())
            throw ParseError("malformed number '" + tok + "'", line, 1);
        return v;
    }

    double parse_num(const RawEntry& e) {
        return parse_token(e.value, e.line);
    }

    RawConfig& raw_;
};

ScenarioKind parse_kind(const std::string& v, int line) {
    if (v == "modal-exact") return ScenarioKind::ModalExact;
    if (v == "modal-ode") return ScenarioKind::ModalOde;
    if (v == "eigen-sweep") return ScenarioKind::EigenSweep;
    if (v == "inviscid-growth") return ScenarioKind::InviscidGrowth;
    if (v == "nonlinear-run") return ScenarioKind::NonlinearRun;
    if (v == "envelope-suite") return ScenarioKind::EnvelopeSuite;
    throw ParseError("unknown scenario kind '" + v + "'", line, 1);
}

Complex parse_complex_pair(Reader& r, const std::string& sec,
                           const std::string& key, Complex fallback) {
    if (!r.has(sec, key)) return fallback;
    const auto v = r.num_list(sec, key, {});
    if (v.size() != 2)
        throw ValidationError("field [" + sec + "] " + key +
                              " expects 're im'");
    return {v[0], v[1]};
}

}  // namespace

Scenario parse_config(const std::string& text) {
    RawConfig raw = tokenize(text);
    Reader r(raw);
    Scenario sc;

    sc.name = r.required("scenario", "name");
    const int kind_line =
        r.has("scenario", "kind") ? r.entry("scenario", "kind").line : 0;
    sc.kind = parse_kind(r.required("scenario", "kind"), kind_line);
    sc.output_dir = r.str("scenario", "output_dir", "");
    sc.seed = std::uint64_t(r.num("scenario", "seed", 1.0));

    sc.params.alpha = r.num("params", "alpha", 0.0);
    sc.params.beta = r.num("params", "beta", 0.0);
    sc.params.nu_x = r.num("params", "nu_x", 0.0);
    sc.params.nu_y = r.num("params", "nu_y", 0.0);
    sc.params.eta_x = r.num("params", "eta_x", 0.0);
    sc.params.eta_y = r.num("params", "eta_y", 0.0);
    sc.params.sobolev_n = r.integer("params", "sobolev_n", 0);
    validate(sc.params);

    if (r.has("modes", "k")) {
        sc.modes.k_list.clear();
        for (double v : r.num_list("modes", "k", {}))
            sc.modes.k_list.push_back(int(std::llround(v)));
    }
    sc.modes.xi_list = r.num_list("modes", "xi", sc.modes.xi_list);
    sc.modes.random_count = r.integer("modes", "random", 0);
    sc.modes.k_min = r.integer("modes", "k_min", sc.modes.k_min);
    sc.modes.k_max = r.integer("modes", "k_max", sc.modes.k_max);
    sc.modes.xi_lo = r.num("modes", "xi_lo", sc.modes.xi_lo);
    sc.modes.xi_hi = r.num("modes", "xi_hi", sc.modes.xi_hi);
    sc.initial_state.omega_hat = parse_complex_pair(
        r, "modes", "omega0", sc.initial_state.omega_hat);
    sc.initial_state.theta_hat = parse_complex_pair(
        r, "modes", "theta0", sc.initial_state.theta_hat);

    sc.time.t_end = r.num("time", "t_end", sc.time.t_end);
    sc.time.samples = r.integer("time", "samples", sc.time.samples);
    sc.time.tol = r.num("time", "tol", sc.time.tol);
    if (sc.time.samples < 2)
        throw ValidationError("[time] samples must be at least 2");

    if (r.has("fit", "kind")) {
        FitRequest fr;
        const std::string kind = r.str("fit", "kind", "exponential");
        if (kind == "exponential")
            fr.kind = FitKind::Exponential;
        else if (kind == "algebraic")
            fr.kind = FitKind::Algebraic;
        else
            throw ValidationError("[fit] kind must be exponential|algebraic");
        if (r.has("fit", "window")) {
            const auto w = r.num_list("fit", "window", {});
            if (w.size() != 2)
                throw ValidationError("[fit] window expects 't_lo t_hi'");
            fr.window = FitWindow{w[0], w[1]};
        }
        fr.quantity = r.str("fit", "quantity", fr.quantity);
        sc.fits.push_back(fr);
    }
    sc.oracle = r.str("scenario", "oracle", sc.oracle);

    sc.sweep.alphas = r.num_list("sweep", "alpha", sc.sweep.alphas);
    if (r.has("sweep", "k")) {
        sc.sweep.k_list.clear();
        for (double v : r.num_list("sweep", "k", {}))
            sc.sweep.k_list.push_back(int(std::llround(v)));
    }
    sc.sweep.xi_list = r.num_list("sweep", "xi", sc.sweep.xi_list);
    sc.sweep.verify = r.boolean("sweep", "verify", sc.sweep.verify);

    sc.growth.alphas = r.num_list("growth", "alpha", sc.growth.alphas);
    sc.growth.t_max = r.num("growth", "t_max", sc.growth.t_max);

    // nonlinear-run blocks
    sc.sim.params = sc.params;
    if (r.has("sim", "grid")) {
        const auto g = r.num_list("sim", "grid", {});
        if (g.size() != 2)
            throw ValidationError("[sim] grid expects 'nx ny'");
        sc.sim.grid.nx = int(std::llround(g[0]));
        sc.sim.grid.ny = int(std::llround(g[1]));
    }
    sc.sim.grid.delta_xi = r.num("sim", "delta_xi", sc.sim.grid.delta_xi);
    sc.sim.grid.dealias_fraction =
        r.num("sim", "dealias", sc.sim.grid.dealias_fraction);
    if (sc.sim.grid.dealias_fraction <= 0.0 ||
        sc.sim.grid.dealias_fraction > 1.0)
        throw ValidationError("[sim] dealias must lie in (0, 1]");
    sc.sim.dt = r.num("sim", "dt", sc.sim.dt);
    if (sc.sim.dt <= 0.0) throw ValidationError("[sim] dt must be positive");
    sc.sim.t_end = r.num("sim", "t_end", sc.sim.t_end);
    sc.sim.snapshot_every =
        r.integer("sim", "snapshot_every", sc.sim.snapshot_every);
    if (sc.sim.snapshot_every < 1)
        throw ValidationError("[sim] snapshot_every must be >= 1");
    sc.sim.linear_only = r.boolean("sim", "linear_only", sc.sim.linear_only);
    sc.sim.enforce_horizon =
        r.boolean("sim", "enforce_horizon", sc.sim.enforce_horizon);
    sc.write_final_snapshot =
        r.boolean("sim", "write_snapshots", sc.write_final_snapshot);

    if (r.has("ic", "kind")) {
        const std::string kind = r.str("ic", "kind", "band-random");
        if (kind == "band-random")
            sc.sim.ic.kind = IcSpec::Kind::BandRandom;
        else if (kind == "single-mode")
            sc.sim.ic.kind = IcSpec::Kind::SingleMode;
        else if (kind == "zero")
            sc.sim.ic.kind = IcSpec::Kind::Zero;
        else
            throw ValidationError(
                "[ic] kind must be band-random|single-mode|zero");
    }
    sc.sim.ic.eps1 = r.num("ic", "eps1", sc.sim.ic.eps1);
    sc.sim.ic.eps2 = r.num("ic", "eps2", sc.sim.ic.eps2);
    sc.sim.ic.seed = sc.seed;
    if (r.has("ic", "band_k")) {
        const auto b = r.num_list("ic", "band_k", {});
        if (b.size() != 2)
            throw ValidationError("[ic] band_k expects 'k_min k_max'");
        sc.sim.ic.band.k_min = int(std::llround(b[0]));
        sc.sim.ic.band.k_max = int(std::llround(b[1]));
    }
    if (r.has("ic", "band_j")) {
        const auto b = r.num_list("ic", "band_j", {});
        if (b.size() != 2)
            throw ValidationError("[ic] band_j expects 'j_min j_max'");
        sc.sim.ic.band.j_min = int(std::llround(b[0]));
        sc.sim.ic.band.j_max = int(std::llround(b[1]));
    }
    if (r.has("ic", "mode")) {
        const auto m = r.num_list("ic", "mode", {});
        if (m.size() != 2)
            throw ValidationError("[ic] mode expects 'k j'");
        sc.sim.ic.k = int(std::llround(m[0]));
        sc.sim.ic.j = int(std::llround(m[1]));
    }
    sc.sim.ic.omega_amp =
        parse_complex_pair(r, "ic", "omega0", sc.sim.ic.omega_amp);
    sc.sim.ic.theta_amp =
        parse_complex_pair(r, "ic", "theta0", sc.sim.ic.theta_amp);
    sc.check_bootstrap =
        r.boolean("bootstrap", "check", sc.check_bootstrap);

    sc.checks = r.word_list("envelope", "checks");
    if (sc.kind == ScenarioKind::EnvelopeSuite && sc.checks.empty())
        throw ValidationError("missing required field [envelope] checks");

    r.reject_unused();
    return sc;
}

Scenario load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open config: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str());
}

}  // namespace shearbq::cli

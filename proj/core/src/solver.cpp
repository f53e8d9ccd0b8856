#include "shearbq/solver.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

#include "shearbq/errors.hpp"
#include "shearbq/fft.hpp"
#include "shearbq/phase.hpp"

namespace shearbq {

std::pair<SpectralField, SpectralField> velocity_from_vorticity(
    const SpectralField& omega, double t, double beta) {
    SpectralField v1(omega.nx(), omega.ny(), omega.delta_xi(), t);
    SpectralField v2(omega.nx(), omega.ny(), omega.delta_xi(), t);
    for (int i = 0; i < omega.nx(); ++i) {
        const int k = omega.k_of(i);
        for (int j = 0; j < omega.ny(); ++j) {
            const double xp = omega.xi_of(j) - beta * k * t;
            const double denom = double(k) * k + xp * xp;
            if (denom == 0.0) continue;
            const Complex w = omega.at(i, j) / denom;
            v1.at(i, j) = Complex{0.0, -xp} * w;
            v2.at(i, j) = Complex{0.0, double(k)} * w;
        }
    }
    return {std::move(v1), std::move(v2)};
}

struct PseudoSpectral::Work {
    Fft2D fft;
    // physical scratch (complex storage, real content)
    std::vector<Complex> v1, v2, gx, gy, prod;
    SpectralField sa, sb;  // spectral scratch
    // RK stage storage
    SpectralField k1o, k1t, k2o, k2t, k3o, k3t, k4o, k4t, uo, ut;

    Work(int nx, int ny, double dxi)
        : fft(nx, ny),
          v1(std::size_t(nx) * ny),
          v2(std::size_t(nx) * ny),
          gx(std::size_t(nx) * ny),
          gy(std::size_t(nx) * ny),
          prod(std::size_t(nx) * ny),
          sa(nx, ny, dxi), sb(nx, ny, dxi),
          k1o(nx, ny, dxi), k1t(nx, ny, dxi), k2o(nx, ny, dxi),
          k2t(nx, ny, dxi), k3o(nx, ny, dxi), k3t(nx, ny, dxi),
          k4o(nx, ny, dxi), k4t(nx, ny, dxi), uo(nx, ny, dxi),
          ut(nx, ny, dxi) {}
};

PseudoSpectral::PseudoSpectral(const SimConfig& cfg)
    : cfg_(cfg),
      w_(new Work(cfg.grid.nx, cfg.grid.ny, cfg.grid.delta_xi)) {
    validate(cfg_.params);
}

PseudoSpectral::~PseudoSpectral() = default;

void PseudoSpectral::apply_dealias(SpectralField& f) const {
    const int cut_x =
        int(std::floor(cfg_.grid.dealias_fraction * (cfg_.grid.nx / 2)));
    const int cut_y =
        int(std::floor(cfg_.grid.dealias_fraction * (cfg_.grid.ny / 2)));
    for (int i = 0; i < f.nx(); ++i) {
        const int k = f.k_of(i);
        const bool kill_x = std::abs(k) > cut_x || std::abs(k) >= f.nx() / 2;
        for (int j = 0; j < f.ny(); ++j) {
            const int jj = j <= f.ny() / 2 ? j : j - f.ny();
            if (kill_x || std::abs(jj) > cut_y || std::abs(jj) >= f.ny() / 2)
                f.at(i, j) = Complex{0.0, 0.0};
        }
    }
}

SimState PseudoSpectral::initial_state() {
    const auto& g = cfg_.grid;
    SimState s;
    s.t = 0.0;
    switch (cfg_.ic.kind) {
        case IcSpec::Kind::Zero:
            s.omega = SpectralField(g.nx, g.ny, g.delta_xi);
            s.theta = SpectralField(g.nx, g.ny, g.delta_xi);
            break;
        case IcSpec::Kind::BandRandom: {
            std::mt19937_64 rng(cfg_.ic.seed);
            s.omega = random_band_field(g.nx, g.ny, g.delta_xi, cfg_.ic.band,
                                        cfg_.params.sobolev_n, cfg_.ic.eps1,
                                        rng);
            s.theta = random_band_field(g.nx, g.ny, g.delta_xi, cfg_.ic.band,
                                        cfg_.params.sobolev_n, cfg_.ic.eps2,
                                        rng);
            break;
        }
        case IcSpec::Kind::SingleMode: {
            s.omega = SpectralField(g.nx, g.ny, g.delta_xi);
            s.theta = SpectralField(g.nx, g.ny, g.delta_xi);
            s.omega.at_mode(cfg_.ic.k, cfg_.ic.j) = cfg_.ic.omega_amp;
            s.omega.at_mode(-cfg_.ic.k, -cfg_.ic.j) =
                std::conj(cfg_.ic.omega_amp);
            s.theta.at_mode(cfg_.ic.k, cfg_.ic.j) = cfg_.ic.theta_amp;
            s.theta.at_mode(-cfg_.ic.k, -cfg_.ic.j) =
                std::conj(cfg_.ic.theta_amp);
            break;
        }
    }
    return s;
}

double PseudoSpectral::shear_horizon() const {
    if (cfg_.params.beta == 0.0) return std::numeric_limits<double>::infinity();
    int k_ic = 1;
    if (cfg_.ic.kind == IcSpec::Kind::BandRandom)
        k_ic = std::max(1, cfg_.ic.band.k_max);
    else if (cfg_.ic.kind == IcSpec::Kind::SingleMode)
        k_ic = std::max(1, std::abs(cfg_.ic.k));
    const double xi_max = (cfg_.grid.ny / 2) * cfg_.grid.delta_xi;
    return xi_max / (std::abs(cfg_.params.beta) * k_ic);
}

void PseudoSpectral::advect(const SpectralField& omega,
                            const SpectralField& theta, double t,
                            SpectralField& n_omega, SpectralField& n_theta) {
    auto& w = *w_;
    const int nx = omega.nx();
    const int ny = omega.ny();
    const std::size_t n = std::size_t(nx) * ny;
    const double beta = cfg_.params.beta;

    // velocity in physical space
    auto [v1s, v2s] = velocity_from_vorticity(omega, t, beta);
    w.fft.backward(v1s, w.v1.data());
    w.fft.backward(v2s, w.v2.data());

    double vmax = 0.0;
    for (std::size_t idx = 0; idx < n; ++idx) {
        vmax = std::max(vmax, std::abs(w.v1[idx].real()));
        vmax = std::max(vmax, std::abs(w.v2[idx].real()));
    }
    last_max_velocity_ = vmax;

    auto advected = [&](const SpectralField& f, SpectralField& out) {
        for (int i = 0; i < nx; ++i) {
            const int k = f.k_of(i);
            for (int j = 0; j < ny; ++j) {
                const double xp = f.xi_of(j) - beta * k * t;
                const Complex c = f.at(i, j);
                w.sa.at(i, j) = Complex{0.0, double(k)} * c;
                w.sb.at(i, j) = Complex{0.0, xp} * c;
            }
        }
        w.fft.backward(w.sa, w.gx.data());
        w.fft.backward(w.sb, w.gy.data());
        for (std::size_t idx = 0; idx < n; ++idx) {
            const double val = -(w.v1[idx].real() * w.gx[idx].real() +
                                 w.v2[idx].real() * w.gy[idx].real());
            w.prod[idx] = Complex{val, 0.0};
        }
        w.fft.forward(w.prod.data(), out);
        apply_dealias(out);
    };
    advected(omega, n_omega);
    advected(theta, n_theta);
}

void PseudoSpectral::nonlinear_term(const SimState& s, SpectralField& n_omega,
                                    SpectralField& n_theta) {
    const int nx = s.omega.nx();
    const int ny = s.omega.ny();
    if (n_omega.nx() != nx)
        n_omega = SpectralField(nx, ny, s.omega.delta_xi());
    if (n_theta.nx() != nx)
        n_theta = SpectralField(nx, ny, s.omega.delta_xi());

    if (cfg_.linear_only) {
        std::fill(n_omega.data(), n_omega.data() + n_omega.size(),
                  Complex{0.0, 0.0});
        std::fill(n_theta.data(), n_theta.data() + n_theta.size(),
                  Complex{0.0, 0.0});
        last_max_velocity_ = 0.0;
    } else {
        advect(s.omega, s.theta, s.t, n_omega, n_theta);
    }

    // linear couplings: d_x theta feeds omega, the balance term feeds theta
    const double alpha = cfg_.params.alpha;
    const double beta = cfg_.params.beta;
    for (int i = 0; i < nx; ++i) {
        const int k = s.omega.k_of(i);
        if (k == 0) continue;
        for (int j = 0; j < ny; ++j) {
            const double xp = s.omega.xi_of(j) - beta * k * s.t;
            n_omega.at(i, j) += Complex{0.0, double(k)} * s.theta.at(i, j);
            if (alpha != 0.0)
                n_theta.at(i, j) +=
                    Complex{0.0, alpha * k / (double(k) * k + xp * xp)} *
                    s.omega.at(i, j);
        }
    }
    n_omega.set_frame_time(s.t);
    n_theta.set_frame_time(s.t);
}

namespace {

// Multiply each mode by its exact dissipation propagator over [s1, s2].
void propagate(SpectralField& f, double cx, double cy, double s1, double s2,
               double beta) {
    for (int i = 0; i < f.nx(); ++i) {
        const int k = f.k_of(i);
        for (int j = 0; j < f.ny(); ++j) {
            // In the sheared frame the physical frequency is xi - beta k t,
            // so the accumulated symbol is cx k^2 (s2-s1) + cy int (xi -
            // beta k tau)^2 dtau; the latter is the phase integral in the
            // variable beta*tau.
            const double xi = f.xi_of(j);
            double acc = cx * double(k) * k * (s2 - s1);
            if (cy > 0.0) {
                if (beta == 0.0) {
                    acc += cy * xi * xi * (s2 - s1);
                } else {
                    acc += cy / beta *
                           phase_integral(k, xi, beta * s1, beta * s2);
                }
            }
            f.at(i, j) *= std::exp(-acc);
        }
    }
}

void axpy(SpectralField& y, const Complex& a, const SpectralField& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y.data()[i] += a * x.data()[i];
}

void scale_copy(SpectralField& dst, const SpectralField& src) { dst = src; }

}  // namespace

void PseudoSpectral::step(SimState& s, double dt_override) {
    auto& w = *w_;
    const double h = dt_override > 0.0 ? dt_override : cfg_.dt;
    const double t = s.t;
    const auto& p = cfg_.params;

    SimState stage;
    stage.omega = s.omega;
    stage.theta = s.theta;

    // k1 at t
    stage.t = t;
    nonlinear_term(stage, w.k1o, w.k1t);

    if (cfg_.check_cfl && !cfg_.linear_only && last_max_velocity_ > 0.0) {
        const double dx = 2.0 * M_PI / cfg_.grid.nx;
        const double dy =
            2.0 * M_PI / cfg_.grid.delta_xi / cfg_.grid.ny;
        const double dt_max = 0.5 * std::min(dx, dy) / last_max_velocity_;
        if (h > dt_max)
            throw CflViolation("dt " + std::to_string(h) +
                               " exceeds CFL bound " + std::to_string(dt_max));
    }

    auto prop_pair = [&](SpectralField& om, SpectralField& th, double s1,
                         double s2) {
        propagate(om, p.nu_x, p.nu_y, s1, s2, p.beta);
        propagate(th, p.eta_x, p.eta_y, s1, s2, p.beta);
    };

    // va = P(t -> t+h/2) (u + h/2 k1)
    stage.omega = s.omega;
    stage.theta = s.theta;
    axpy(stage.omega, 0.5 * h, w.k1o);
    axpy(stage.theta, 0.5 * h, w.k1t);
    prop_pair(stage.omega, stage.theta, t, t + 0.5 * h);
    stage.t = t + 0.5 * h;
    nonlinear_term(stage, w.k2o, w.k2t);

    // vb = P(t -> t+h/2) u + h/2 k2
    scale_copy(w.uo, s.omega);
    scale_copy(w.ut, s.theta);
    prop_pair(w.uo, w.ut, t, t + 0.5 * h);
    stage.omega = w.uo;
    stage.theta = w.ut;
    axpy(stage.omega, 0.5 * h, w.k2o);
    axpy(stage.theta, 0.5 * h, w.k2t);
    stage.t = t + 0.5 * h;
    nonlinear_term(stage, w.k3o, w.k3t);

    // vc = P(t -> t+h) u + h P(t+h/2 -> t+h) k3
    scale_copy(stage.omega, w.k3o);
    scale_copy(stage.theta, w.k3t);
    prop_pair(stage.omega, stage.theta, t + 0.5 * h, t + h);
    w.k3o = stage.omega;  // keep half-propagated k3 for the update
    w.k3t = stage.theta;
    scale_copy(w.uo, s.omega);
    scale_copy(w.ut, s.theta);
    prop_pair(w.uo, w.ut, t, t + h);  // P(t -> t+h) u, reused below
    stage.omega = w.uo;
    stage.theta = w.ut;
    axpy(stage.omega, h, w.k3o);
    axpy(stage.theta, h, w.k3t);
    stage.t = t + h;
    nonlinear_term(stage, w.k4o, w.k4t);

    // k2 also needs propagation from t+h/2 to t+h
    prop_pair(w.k2o, w.k2t, t + 0.5 * h, t + h);
    // k1 over the full step
    prop_pair(w.k1o, w.k1t, t, t + h);

    // u+ = P(t->t+h) u + h/6 [P k1 + 2 P12 (k2 + k3) + k4]
    s.omega = w.uo;
    s.theta = w.ut;
    axpy(s.omega, h / 6.0, w.k1o);
    axpy(s.theta, h / 6.0, w.k1t);
    axpy(s.omega, h / 3.0, w.k2o);
    axpy(s.theta, h / 3.0, w.k2t);
    axpy(s.omega, h / 3.0, w.k3o);
    axpy(s.theta, h / 3.0, w.k3t);
    axpy(s.omega, h / 6.0, w.k4o);
    axpy(s.theta, h / 6.0, w.k4t);
    s.t = t + h;
    s.omega.set_frame_time(s.t);
    s.theta.set_frame_time(s.t);
}

SimResult run_simulation(const SimConfig& cfg) {
    PseudoSpectral solver(cfg);
    SimResult res;
    res.horizon = solver.shear_horizon();
    double t_end = cfg.t_end;
    if (cfg.enforce_horizon) t_end = std::min(t_end, res.horizon);
    res.t_end_used = t_end;

    SimState s = solver.initial_state();
    const int n = cfg.params.sobolev_n;
    const double beta = cfg.params.beta;
    const double nu = cfg.params.nu_x;
    const double eta = cfg.params.eta_x;
    const double thr_omega = 8.0 * cfg.ic.eps1 * cfg.ic.eps1;
    const double thr_theta = 8.0 * cfg.ic.eps2 * cfg.ic.eps2;

    double linf_omega = 0.0, linf_theta = 0.0;
    double acc_omega = 0.0, acc_theta = 0.0;
    double prev_time = 0.0;
    double prev_int_omega = 0.0, prev_int_theta = 0.0;
    double prev_la_go = 0.0, prev_la_gt = 0.0, prev_la_bi = 0.0;
    bool first = true;

    auto snapshot = [&](const SimState& st) {
        EnergyReport rep;
        rep.time = st.t;
        const double o_hn = norm_hn_sq(st.omega, n);
        const double t_hn = norm_hn_sq(st.theta, n);
        const double ao = norm_a_sq(st.omega, n, beta);
        const double at = norm_a_sq(st.theta, n, beta);
        const double go = norm_grad_a_sq(st.omega, n, beta);
        const double gt = norm_grad_a_sq(st.theta, n, beta);
        const double mo = norm_mdot_sq(st.omega, n, beta);
        const double mt = norm_mdot_sq(st.theta, n, beta);
        const double la =
            energy_largealpha(st.omega, st.theta, cfg.params, st.t);
        const double la_bi =
            largealpha_theta_dissipation_sq(st.theta, n, beta);

        rep.entries["omega_hn_sq"] = {o_hn, 0.0};
        rep.entries["theta_hn_sq"] = {t_hn, 0.0};
        rep.entries["a_omega_sq"] = {ao, nu * go + mo};
        rep.entries["a_theta_sq"] = {at, eta * gt + mt};
        rep.entries["largealpha"] = {la,
                                     nu * cfg.params.alpha * go + eta * gt};
        res.reports.push_back(rep);

        // streaming accumulators (trapezoid in time)
        const double int_omega = nu * go + mo;
        const double int_theta = eta * gt + mt;
        if (!first) {
            const double hdt = 0.5 * (st.t - prev_time);
            acc_omega += hdt * (prev_int_omega + int_omega);
            acc_theta += hdt * (prev_int_theta + int_theta);
            res.largealpha.diss_omega +=
                hdt * cfg.params.alpha * nu * (prev_la_go + go);
            res.largealpha.diss_theta_grad += hdt * eta * (prev_la_gt + gt);
            res.largealpha.diss_theta_biharm +=
                hdt * eta * (prev_la_bi + la_bi);
        }
        prev_time = st.t;
        prev_int_omega = int_omega;
        prev_int_theta = int_theta;
        prev_la_go = go;
        prev_la_gt = gt;
        prev_la_bi = la_bi;
        first = false;

        linf_omega = std::max(linf_omega, ao);
        linf_theta = std::max(linf_theta, at);
        res.largealpha.sup_functional =
            std::max(res.largealpha.sup_functional, la);
        if (linf_omega + acc_omega > thr_omega)
            res.bootstrap_omega_exceeded = true;
        if (linf_theta + acc_theta > thr_theta)
            res.bootstrap_theta_exceeded = true;
    };

    snapshot(s);
    int step_index = 0;
    while (s.t < t_end - 1e-12) {
        const double h = std::min(cfg.dt, t_end - s.t);
        solver.step(s, h);
        ++step_index;
        if (step_index % cfg.snapshot_every == 0 || s.t >= t_end - 1e-12)
            snapshot(s);
    }

    res.bootstrap.e_omega = linf_omega + acc_omega;
    res.bootstrap.e_theta = linf_theta + acc_theta;
    res.final_state = std::move(s);
    return res;
}

}  // namespace shearbq

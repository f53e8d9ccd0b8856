#include "shearbq/energies.hpp"

#include <algorithm>
#include <cmath>

#include "shearbq/multiplier.hpp"

namespace shearbq {

EnergyReport energy_no_shear(const ModeSet& states, const Params& p) {
    EnergyReport rep;
    double e_omega = 0.0, d_omega = 0.0;
    double e_theta = 0.0, d_theta = 0.0;
    for (const auto& [m, s] : states) {
        const double w2 = std::pow(sobolev_weight(p.sobolev_n, m), 2);
        const double k2 = double(m.k) * m.k;
        const double K2 = k2 + m.xi * m.xi;
        const double om2 = std::norm(s.omega_hat);
        const double th2 = std::norm(s.theta_hat);
        e_omega += w2 * p.alpha * om2;
        e_theta += w2 * K2 * th2;
        d_omega += 2.0 * w2 * p.alpha * (p.nu_x * k2 + p.nu_y * m.xi * m.xi) *
                   om2;
        d_theta += 2.0 * w2 * K2 * (p.eta_x * k2 + p.eta_y * m.xi * m.xi) *
                   th2;
    }
    rep.entries["alpha_omega"] = {e_omega, d_omega};
    rep.entries["grad_theta"] = {e_theta, d_theta};
    rep.entries["E"] = {e_omega + e_theta, d_omega + d_theta};
    return rep;
}

EnergyReport energy_sheared(const ModeSet& states, const Params& p,
                            double t) {
    EnergyReport rep;
    rep.time = t;
    double e_omega = 0.0, e_dx = 0.0, e_dy = 0.0, e_dy_mov = 0.0;
    for (const auto& [m, s] : states) {
        const double w2 = std::pow(sobolev_weight(p.sobolev_n, m), 2);
        const double k2 = double(m.k) * m.k;
        const double xp = m.xi - p.beta * m.k * t;
        const double om2 = std::norm(s.omega_hat);
        const double th2 = std::norm(s.theta_hat);
        e_omega += w2 * p.alpha * om2;
        e_dx += w2 * k2 * th2;
        e_dy += w2 * m.xi * m.xi * th2;
        e_dy_mov += w2 * xp * xp * th2;
    }
    rep.entries["alpha_omega"] = {e_omega, 0.0};
    rep.entries["dx_theta"] = {e_dx, 0.0};
    rep.entries["dy_theta"] = {e_dy, 0.0};
    rep.entries["dy_theta_moving"] = {e_dy_mov, 0.0};
    rep.entries["E"] = {e_omega + e_dx + e_dy, 0.0};
    rep.entries["E_moving"] = {e_omega + e_dx + e_dy_mov, 0.0};
    return rep;
}

namespace {

template <class Weight>
double field_sum(const SpectralField& f, Weight w) {
    return f.weighted_norm_sq(w);
}

double sob2(int n, int k, double xi) {
    const double s = 1.0 + double(k) * k + xi * xi;
    return std::pow(s, double(n));
}

}  // namespace

double norm_hn_sq(const SpectralField& f, int n) {
    return field_sum(f, [n](int k, double xi) { return sob2(n, k, xi); });
}

double norm_grad_hn_sq(const SpectralField& f, int n, double beta) {
    const double t = f.frame_time();
    return field_sum(f, [=](int k, double xi) {
        const double xp = xi - beta * k * t;
        return (double(k) * k + xp * xp) * sob2(n, k, xi);
    });
}

double norm_a_sq(const SpectralField& f, int n, double beta) {
    const double t = f.frame_time();
    return field_sum(f, [=](int k, double xi) {
        const double m = multiplier_m_beta(beta, t, k, xi);
        return m * m * sob2(n, k, xi);
    });
}

double norm_grad_a_sq(const SpectralField& f, int n, double beta) {
    const double t = f.frame_time();
    return field_sum(f, [=](int k, double xi) {
        const double m = multiplier_m_beta(beta, t, k, xi);
        const double xp = xi - beta * k * t;
        return (double(k) * k + xp * xp) * m * m * sob2(n, k, xi);
    });
}

double norm_mdot_sq(const SpectralField& f, int n, double beta) {
    const double t = f.frame_time();
    return field_sum(f, [=](int k, double xi) {
        if (k == 0) return 0.0;
        const double m = multiplier_m_beta(beta, t, k, xi);
        const double xp = xi - beta * k * t;
        const double ratio =
            beta * std::abs(double(k)) / (double(k) * k + xp * xp);
        return m * m * ratio * sob2(n, k, xi);
    });
}

BootstrapEnergies energy_bootstrap(
    const std::vector<std::pair<SpectralField, SpectralField>>& series,
    const Params& p, double dt) {
    BootstrapEnergies out;
    if (series.empty()) return out;
    const int n = p.sobolev_n;
    const double nu = p.nu_x;
    const double eta = p.eta_x;

    double linf_omega = 0.0, linf_theta = 0.0;
    double acc_omega = 0.0, acc_theta = 0.0;
    const std::size_t count = series.size();
    for (std::size_t i = 0; i < count; ++i) {
        const auto& [om, th] = series[i];
        linf_omega = std::max(linf_omega, norm_a_sq(om, n, p.beta));
        linf_theta = std::max(linf_theta, norm_a_sq(th, n, p.beta));
        const double w = (i == 0 || i + 1 == count) ? 0.5 : 1.0;
        acc_omega += w * dt *
                     (nu * norm_grad_a_sq(om, n, p.beta) +
                      norm_mdot_sq(om, n, p.beta));
        acc_theta += w * dt *
                     (eta * norm_grad_a_sq(th, n, p.beta) +
                      norm_mdot_sq(th, n, p.beta));
    }
    if (count == 1) {  // single snapshot: no time integral
        acc_omega = acc_theta = 0.0;
    }
    out.e_omega = linf_omega + acc_omega;
    out.e_theta = linf_theta + acc_theta;
    return out;
}

double energy_largealpha(const SpectralField& omega, const SpectralField& theta,
                         const Params& p, double t) {
    const int n = p.sobolev_n;
    const double beta = p.beta;
    auto a2 = [&](int k, double xi) {
        const double m = multiplier_m_beta(beta, t, k, xi);
        return m * m * sob2(n, k, xi);
    };
    const double part_omega =
        p.alpha * field_sum(omega, [&](int k, double xi) { return a2(k, xi); });
    const double part_theta = field_sum(theta, [&](int k, double xi) {
        const double xp = xi - beta * k * t;
        return (double(k) * k + xp * xp) * a2(k, xi);
    });
    return part_omega + part_theta;
}

double largealpha_theta_dissipation_sq(const SpectralField& theta, int n,
                                       double beta) {
    const double t = theta.frame_time();
    return field_sum(theta, [=](int k, double xi) {
        const double m = multiplier_m_beta(beta, t, k, xi);
        const double xp = xi - beta * k * t;
        const double lap = double(k) * k + xp * xp;
        return lap * lap * m * m * sob2(n, k, xi);
    });
}

}  // namespace shearbq

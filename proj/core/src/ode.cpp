#include "shearbq/ode.hpp"

#include "shearbq/phase.hpp"

namespace shearbq {

ModeState linear_rhs(const Params& p, double t, const Mode& m,
                     const ModeState& s) {
    const double k = m.k;
    const double xp = m.xi - p.beta * k * t;
    const double k2 = k * k;
    ModeState d;
    d.omega_hat = -(p.nu_x * k2 + p.nu_y * xp * xp) * s.omega_hat +
                  Complex{0.0, k} * s.theta_hat;
    d.theta_hat = -(p.eta_x * k2 + p.eta_y * xp * xp) * s.theta_hat;
    if (m.k != 0 && p.alpha != 0.0)
        d.theta_hat +=
            Complex{0.0, k * p.alpha / (k2 + xp * xp)} * s.omega_hat;
    return d;
}

namespace {

// Stepping in locally filtered variables z = F(t)^{-1} y, where F carries
// the exact diagonal heat factors accumulated from the step's start time.
// Filter values stay in (0, 1] for times past the anchor, so no overflow
// can occur inside a step.
ModeTrajectory integrate_mode_filtered(const Params& p, const Mode& m,
                                       const ModeState& s0, double t0,
                                       double t1, double tol) {
    ModeTrajectory traj;
    traj.tol_used = tol;
    traj.times.push_back(t0);
    traj.states.push_back(s0);
    if (t1 <= t0) return traj;

    double t = t0;
    ModeState y = s0;
    const double span = t1 - t0;

    while (t < t1) {
        const double anchor = t;
        auto filtered_rhs = [&p, &m, anchor](double s, const ModeState& z) {
            const double fw =
                heat_factor(p.nu_x, p.nu_y, m.k, m.xi, anchor, s);
            const double ft =
                heat_factor(p.eta_x, p.eta_y, m.k, m.xi, anchor, s);
            // Off-diagonal part of the system applied to F z, then
            // unfiltered.
            const double k = m.k;
            const double xp = m.xi - p.beta * k * s;
            ModeState d;
            d.omega_hat = Complex{0.0, k} * (ft * z.theta_hat) / fw;
            d.theta_hat =
                (m.k != 0 && p.alpha != 0.0)
                    ? Complex{0.0, k * p.alpha / (k * k + xp * xp)} *
                          (fw * z.omega_hat) / ft
                    : Complex{0.0, 0.0};
            return d;
        };
        // One adaptive sub-run per anchor. The window is capped so that the
        // accumulated diagonal exponent stays ~20, keeping the filter ratios
        // finite for strongly damped modes.
        auto diag_rate = [&p, &m](double s) {
            const double k2 = double(m.k) * m.k;
            const double xp = m.xi - p.beta * m.k * s;
            return std::max(p.nu_x * k2 + p.nu_y * xp * xp,
                            p.eta_x * k2 + p.eta_y * xp * xp);
        };
        double window = std::min(t1 - t, std::max(1.0, 0.05 * span));
        const double rmax = std::max(diag_rate(t), diag_rate(t + window));
        window = std::min(window, 20.0 / std::max(rmax, 1e-12));
        window = std::min(window, t1 - t);
        auto piece = integrate_adaptive(filtered_rhs, t, t + window, y, tol);
        for (std::size_t i = 1; i < piece.times.size(); ++i) {
            const double s = piece.times[i];
            const double fw = heat_factor(p.nu_x, p.nu_y, m.k, m.xi, anchor, s);
            const double ft =
                heat_factor(p.eta_x, p.eta_y, m.k, m.xi, anchor, s);
            ModeState ys{fw * piece.states[i].omega_hat,
                         ft * piece.states[i].theta_hat};
            traj.times.push_back(s);
            traj.states.push_back(ys);
        }
        t += window;
        y = traj.states.back();
    }
    return traj;
}

}  // namespace

ModeTrajectory integrate_mode(const Params& p, const Mode& m,
                              const ModeState& s0, double t0, double t1,
                              double tol, IntegrateOptions opts) {
    if (opts.integrating_factor)
        return integrate_mode_filtered(p, m, s0, t0, t1, tol);
    auto rhs = [&p, &m](double t, const ModeState& s) {
        return linear_rhs(p, t, m, s);
    };
    return integrate_adaptive(rhs, t0, t1, s0, tol);
}

ModeState integrate_mode_final(const Params& p, const Mode& m,
                               const ModeState& s0, double t0, double t1,
                               double tol, IntegrateOptions opts) {
    return integrate_mode(p, m, s0, t0, t1, tol, opts).final_state();
}

SecondOrderTrajectory integrate_second_order(double coefficient, double t0,
                                             double t1, Complex y0,
                                             Complex yp0, double tol) {
    auto rhs = [coefficient](double t, const PhasePoint& s) {
        PhasePoint d;
        d.y = s.yp;
        d.yp = -coefficient / (1.0 + t * t) * s.y;
        return d;
    };
    return integrate_adaptive(rhs, t0, t1, PhasePoint{y0, yp0}, tol);
}

}  // namespace shearbq

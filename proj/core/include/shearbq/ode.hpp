#ifndef SHEARBQ_ODE_HPP
#define SHEARBQ_ODE_HPP

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "shearbq/errors.hpp"
#include "shearbq/params.hpp"

namespace shearbq {

/// State of the rescaled second-order runs: (y, y').
struct PhasePoint {
    Complex y{0.0, 0.0};
    Complex yp{0.0, 0.0};
};

inline PhasePoint operator*(double c, const PhasePoint& s) {
    return {c * s.y, c * s.yp};
}
inline PhasePoint operator+(const PhasePoint& a, const PhasePoint& b) {
    return {a.y + b.y, a.yp + b.yp};
}
inline PhasePoint operator-(const PhasePoint& a, const PhasePoint& b) {
    return {a.y - b.y, a.yp - b.yp};
}
inline ModeState operator*(double c, const ModeState& s) {
    return {c * s.omega_hat, c * s.theta_hat};
}

template <class State>
struct Trajectory {
    std::vector<double> times;   ///< strictly increasing accepted times
    std::vector<State> states;   ///< same length as times
    double tol_used = 0.0;

    const State& final_state() const { return states.back(); }
};

using ModeTrajectory = Trajectory<ModeState>;
using SecondOrderTrajectory = Trajectory<PhasePoint>;

namespace detail {

inline double component_scale(const ModeState& a, const ModeState& b, int i) {
    return std::max(i == 0 ? std::abs(a.omega_hat) : std::abs(a.theta_hat),
                    i == 0 ? std::abs(b.omega_hat) : std::abs(b.theta_hat));
}
inline double component_abs(const ModeState& e, int i) {
    return i == 0 ? std::abs(e.omega_hat) : std::abs(e.theta_hat);
}
inline double component_scale(const PhasePoint& a, const PhasePoint& b,
                              int i) {
    return std::max(i == 0 ? std::abs(a.y) : std::abs(a.yp),
                    i == 0 ? std::abs(b.y) : std::abs(b.yp));
}
inline double component_abs(const PhasePoint& e, int i) {
    return i == 0 ? std::abs(e.y) : std::abs(e.yp);
}

// Dormand-Prince 5(4) tableau.
struct Dopri5 {
    static constexpr int stages = 7;
    static constexpr std::array<double, 7> c = {0.0,     1.0 / 5, 3.0 / 10,
                                                4.0 / 5, 8.0 / 9, 1.0,
                                                1.0};
    static constexpr std::array<std::array<double, 6>, 7> a = {{
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176,
         -5103.0 / 18656},
        {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784,
         11.0 / 84},
    }};
    static constexpr std::array<double, 7> b5 = {
        35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84,
        0.0};
    static constexpr std::array<double, 7> b4 = {
        5179.0 / 57600,    0.0,          7571.0 / 16695, 393.0 / 640,
        -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};
};

}  // namespace detail

/// Adaptive embedded 5(4) integration of dy/dt = rhs(t, y) from t0 to t1.
/// Accepted states are recorded; the last recorded time is exactly t1.
/// The error test is max over components of |e| / (tol + tol*|y|); the step
/// controller is PI-style with safety 0.9. Throws StepSizeUnderflow when
/// dt falls below 1e-14 * (t1 - t0).
template <class State, class Rhs>
Trajectory<State> integrate_adaptive(Rhs rhs, double t0, double t1,
                                     const State& y0, double tol) {
    using Tab = detail::Dopri5;
    Trajectory<State> traj;
    traj.tol_used = tol;
    traj.times.push_back(t0);
    traj.states.push_back(y0);
    if (t1 <= t0) return traj;

    const double span = t1 - t0;
    double t = t0;
    State y = y0;
    double h = std::min(span, 1e-2 * span + 1e-6);
    double err_prev = 1.0;

    std::array<State, Tab::stages> k;
    while (t < t1) {
        if (h < 1e-14 * span)
            throw StepSizeUnderflow("dt underflow in adaptive integrator");
        h = std::min(h, t1 - t);

        k[0] = rhs(t, y);
        for (int i = 1; i < Tab::stages; ++i) {
            State yi = y;
            for (int j = 0; j < i; ++j)
                yi = yi + (h * Tab::a[i][j]) * k[j];
            k[i] = rhs(t + Tab::c[i] * h, yi);
        }
        State y5 = y;
        State err{};
        for (int i = 0; i < Tab::stages; ++i) {
            y5 = y5 + (h * Tab::b5[i]) * k[i];
            err = err + (h * (Tab::b5[i] - Tab::b4[i])) * k[i];
        }

        double ratio = 0.0;
        for (int c = 0; c < 2; ++c) {
            const double scale =
                tol + tol * detail::component_scale(y, y5, c);
            const double term = detail::component_abs(err, c) / scale;
            if (!std::isfinite(term)) {
                ratio = 1e30;  // overflowing state: force rejection
                break;
            }
            ratio = std::max(ratio, term);
        }

        if (ratio <= 1.0) {
            t += h;
            y = y5;
            traj.times.push_back(t);
            traj.states.push_back(y);
            const double grow =
                0.9 * std::pow(std::max(ratio, 1e-10), -0.7 / 5.0) *
                std::pow(err_prev, 0.4 / 5.0);
            h *= std::min(5.0, std::max(0.2, grow));
            err_prev = std::max(ratio, 1e-10);
        } else {
            h *= std::max(0.2, 0.9 * std::pow(ratio, -1.0 / 5.0));
        }
    }
    return traj;
}

/// Fixed-step variant (no controller); used by convergence-order tests.
template <class State, class Rhs>
State fixed_step_integrate(Rhs rhs, double t0, double t1, const State& y0,
                           int nsteps) {
    using Tab = detail::Dopri5;
    const double h = (t1 - t0) / nsteps;
    State y = y0;
    std::array<State, Tab::stages> k;
    for (int n = 0; n < nsteps; ++n) {
        const double t = t0 + n * h;
        k[0] = rhs(t, y);
        for (int i = 1; i < Tab::stages; ++i) {
            State yi = y;
            for (int j = 0; j < i; ++j)
                yi = yi + (h * Tab::a[i][j]) * k[j];
            k[i] = rhs(t + Tab::c[i] * h, yi);
        }
        for (int i = 0; i < Tab::stages; ++i) y = y + (h * Tab::b5[i]) * k[i];
    }
    return y;
}

/// Right-hand side of the per-mode linearized system at frame time t. The
/// alpha coupling is defined as 0 on the k = 0 channel.
ModeState linear_rhs(const Params& params, double t, const Mode& mode,
                     const ModeState& state);

struct IntegrateOptions {
    /// Multiply out the diagonal heat factors exactly within each step
    /// (local integrating factor); improves step sizes when the
    /// dissipation rates are large.
    bool integrating_factor = false;
};

/// Integrates the per-mode system from t0 to t1 at local tolerance `tol`.
ModeTrajectory integrate_mode(const Params& params, const Mode& mode,
                              const ModeState& state0, double t0, double t1,
                              double tol, IntegrateOptions opts = {});

/// Final state only, convenience wrapper.
ModeState integrate_mode_final(const Params& params, const Mode& mode,
                               const ModeState& state0, double t0, double t1,
                               double tol, IntegrateOptions opts = {});

/// Integrates the rescaled scalar oscillator y'' + A / (1 + tau^2) y = 0.
/// The sheared-frame mode (k, xi) maps onto this form by the time shift
/// tau = beta (t - xi/k) with A = alpha / beta^2; theta is recovered as
/// (1/ik) y'.
SecondOrderTrajectory integrate_second_order(double coefficient, double t0,
                                             double t1, Complex y0, Complex yp0,
                                             double tol);

}  // namespace shearbq

#endif  // SHEARBQ_ODE_HPP

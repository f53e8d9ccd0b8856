#include <cmath>
#include <random>

#include "doctest.h"
#include "shearbq/modal_eigen.hpp"
#include "shearbq/ode.hpp"
#include "shearbq/random_field.hpp"

using namespace shearbq;

TEST_CASE("linear rhs entries") {
    Params p;
    p.alpha = 0.0;
    SUBCASE("inviscid alpha = 0 couples only through ik") {
        const ModeState d = linear_rhs(p, 3.0, Mode{2, 1.0},
                                       ModeState{Complex{0.5, 0.0},
                                                 Complex{0.0, 1.0}});
        CHECK(d.omega_hat == Complex{-2.0, 0.0});  // ik * theta = 2i * i
        CHECK(d.theta_hat == Complex{0.0, 0.0});
    }
    SUBCASE("critical time wipes the vertical symbol") {
        p = Params{0.5, 1.0, 0.2, 0.3, 0.4, 0.6, 0};
        const Mode m{2, 3.0};
        const double t = m.xi / m.k;  // xi - k t = 0
        const ModeState d =
            linear_rhs(p, t, m, ModeState{Complex{1.0, 0.0}, {}});
        CHECK(d.omega_hat.real() == doctest::Approx(-0.2 * 4.0));
        // coupling uses alpha k / k^2 at the critical time
        CHECK(d.theta_hat ==
              Complex{0.0, 0.5 * 2.0 / 4.0} * Complex{1.0, 0.0});
    }
    SUBCASE("zero state maps to zero") {
        const ModeState d = linear_rhs(p, 1.0, Mode{1, 0.0}, ModeState{});
        CHECK(d.omega_hat == Complex{0.0, 0.0});
        CHECK(d.theta_hat == Complex{0.0, 0.0});
    }
}

TEST_CASE("integrator reproduces the explicit inviscid solutions") {
    SUBCASE("Couette secular growth") {
        Params p;
        p.beta = 1.0;
        const ModeState f = integrate_mode_final(
            p, Mode{1, 0.0}, ModeState{Complex{1, 0}, Complex{1, 0}}, 0.0, 5.0,
            1e-10);
        CHECK(std::abs(f.omega_hat - Complex{1.0, 5.0}) < 1e-9);
        CHECK(std::abs(f.theta_hat - Complex{1.0, 0.0}) < 1e-12);
    }
    SUBCASE("full rotation returns to the start") {
        Params p;
        p.alpha = 1.0;
        const ModeState f = integrate_mode_final(
            p, Mode{1, 0.0}, ModeState{Complex{1, 0}, {}}, 0.0, 2.0 * M_PI,
            1e-10);
        CHECK(std::abs(f.omega_hat - Complex{1.0, 0.0}) < 1e-8);
        CHECK(std::abs(f.theta_hat) < 1e-8);
    }
    SUBCASE("decoupled scalar decay") {
        Params p;
        p.nu_x = 1.0;
        const auto traj = integrate_mode(p, Mode{1, 2.0},
                                         ModeState{Complex{1, 0}, {}}, 0.0,
                                         5.0, 1e-10);
        for (std::size_t i = 0; i < traj.times.size(); ++i)
            CHECK(std::abs(traj.states[i].omega_hat) ==
                  doctest::Approx(std::exp(-traj.times[i])).epsilon(1e-8));
    }
}

TEST_CASE("linearity of the integrator") {
    std::mt19937_64 rng(51);
    Params p{0.4, 1.0, 0.1, 0.0, 0.3, 0.2, 0};
    const Mode m{2, -1.0};
    for (int i = 0; i < 20; ++i) {
        const ModeState s0{Complex{uniform01(rng), uniform01(rng)},
                           Complex{uniform01(rng), uniform01(rng)}};
        const Complex c{2.0 * uniform01(rng) - 1.0,
                        2.0 * uniform01(rng) - 1.0};
        const ModeState a =
            integrate_mode_final(p, m, c * s0, 0.0, 8.0, 1e-11);
        const ModeState b = integrate_mode_final(p, m, s0, 0.0, 8.0, 1e-11);
        CHECK(std::abs(a.omega_hat - c * b.omega_hat) < 1e-9);
        CHECK(std::abs(a.theta_hat - c * b.theta_hat) < 1e-9);
    }
}

TEST_CASE("fixed-step convergence order on the rotation test") {
    Params p;
    p.alpha = 1.0;
    const Mode m{1, 0.0};
    auto rhs = [&](double t, const ModeState& s) {
        return linear_rhs(p, t, m, s);
    };
    const ModeState s0{Complex{1, 0}, {}};
    auto err = [&](int nsteps) {
        const ModeState f =
            fixed_step_integrate(rhs, 0.0, 2.0 * M_PI, s0, nsteps);
        const ModeState ref = exact_rotation_inviscid(1.0, m, s0, 2.0 * M_PI);
        return std::max(std::abs(f.omega_hat - ref.omega_hat),
                        std::abs(f.theta_hat - ref.theta_hat));
    };
    const double e1 = err(40);
    const double e2 = err(80);
    const double order = std::log2(e1 / e2);
    CHECK(order >= 4.0);
}

TEST_CASE("tolerance halving tightens the result") {
    Params p;
    p.alpha = 1.0;
    const Mode m{1, 0.0};
    const ModeState s0{Complex{1, 0}, {}};
    const ModeState ref = exact_rotation_inviscid(1.0, m, s0, 2.0 * M_PI);
    auto err = [&](double tol) {
        const ModeState f =
            integrate_mode_final(p, m, s0, 0.0, 2.0 * M_PI, tol);
        return std::abs(f.omega_hat - ref.omega_hat);
    };
    CHECK(err(1e-6) > err(1e-10));
}

TEST_CASE("integrating-factor option matches the direct path") {
    Params p{0.0, 1.0, 0.2, 0.8, 0.1, 0.5, 0};
    const Mode m{2, 1.0};
    const ModeState s0{Complex{0.7, 0.1}, Complex{-0.4, 0.3}};
    const ModeState direct =
        integrate_mode_final(p, m, s0, 0.0, 12.0, 1e-11);
    const ModeState filtered = integrate_mode_final(
        p, m, s0, 0.0, 12.0, 1e-11, IntegrateOptions{true});
    CHECK(std::abs(direct.omega_hat - filtered.omega_hat) <=
          1e-8 * std::max(1.0, std::abs(direct.omega_hat)));
    CHECK(std::abs(direct.theta_hat - filtered.theta_hat) <= 1e-8);
}

TEST_CASE("step size underflow raises") {
    auto rhs = [](double t, const PhasePoint& s) {
        PhasePoint d;
        d.y = s.yp;
        const double g = 1.0 - t;
        d.yp = s.y / (g * g * g * g);  // non-integrable blow-up at t = 1
        return d;
    };
    CHECK_THROWS_AS(integrate_adaptive(rhs, 0.0, 2.0,
                                       PhasePoint{Complex{1, 0}, {}}, 1e-10),
                    StepSizeUnderflow);
}

TEST_CASE("second-order oscillator basics") {
    SUBCASE("free particle at zero coefficient") {
        const auto traj = integrate_second_order(0.0, 0.0, 7.0,
                                                 Complex{1.0, 0.0},
                                                 Complex{0.5, 0.0}, 1e-11);
        for (std::size_t i = 0; i < traj.times.size(); ++i)
            CHECK(std::abs(traj.states[i].y -
                           (1.0 + 0.5 * traj.times[i])) < 1e-9);
    }
    SUBCASE("even data stays even across the potential well") {
        const double T = 6.0;
        const auto fwd = integrate_second_order(0.2, 0.0, T, Complex{1, 0},
                                                Complex{0, 0}, 1e-12);
        const PhasePoint end = fwd.final_state();
        // start at -T with the mirrored data; the trajectory must pass
        // through (1, 0) at tau = 0 and reach the forward endpoint at +T
        const auto back = integrate_second_order(0.2, -T, 0.0, end.y,
                                                 -end.yp, 1e-12);
        CHECK(std::abs(back.final_state().y - 1.0) < 1e-9);
        CHECK(std::abs(back.final_state().yp) < 1e-9);
        const auto full = integrate_second_order(0.2, -T, T, end.y, -end.yp,
                                                 1e-12);
        CHECK(std::abs(full.final_state().y - end.y) < 1e-9);
        CHECK(std::abs(full.final_state().yp - end.yp) < 1e-9);
    }
    SUBCASE("algebraic growth exponent in the squared-time variable") {
        const auto traj = integrate_second_order(3.0 / 16.0, 0.0, 2000.0,
                                                 Complex{1, 0},
                                                 Complex{0.5, 0}, 1e-10);
        // crude two-point slope check between t = 200 and t = 2000
        auto value_at = [&](double t) {
            double best = 1e300;
            double val = 0.0;
            for (std::size_t i = 0; i < traj.times.size(); ++i) {
                if (std::abs(traj.times[i] - t) < best) {
                    best = std::abs(traj.times[i] - t);
                    val = std::abs(traj.states[i].y);
                }
            }
            return val;
        };
        const double slope = std::log(value_at(2000.0) / value_at(200.0)) /
                             std::log((1.0 + 4e6) / (1.0 + 4e4));
        CHECK(slope == doctest::Approx(0.375).epsilon(0.1));
    }
}

#include <cmath>
#include <random>

#include "doctest.h"
#include "shearbq/energies.hpp"
#include "shearbq/modal_eigen.hpp"
#include "shearbq/multiplier.hpp"
#include "shearbq/ode.hpp"
#include "shearbq/quadrature.hpp"
#include "shearbq/random_field.hpp"

using namespace shearbq;

TEST_CASE("multiplier normalization and limits") {
    CHECK(multiplier_M(0.0, Mode{3, -2.5}) == doctest::Approx(1.0));
    CHECK(multiplier_M(17.0, Mode{0, 1.0}) == 1.0);
    // t -> infinity at xi = 0: arctan -> pi/2
    CHECK(multiplier_M(1e9, Mode{1, 0.0}) ==
          doctest::Approx(std::exp(-M_PI_2)).epsilon(1e-8));
    CHECK(multiplier_floor() == doctest::Approx(std::exp(-M_PI)).epsilon(1e-14));
}

TEST_CASE("multiplier bounds and monotonicity") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 200; ++i) {
        const Mode m{1 + int(rng() % 5), 12.0 * uniform01(rng) - 6.0};
        double prev = 2.0;
        for (int j = 0; j <= 30; ++j) {
            const double t = 2.0 * j;
            const double M = multiplier_M(t, m);
            CHECK(M <= 1.0 + 1e-15);
            CHECK(M >= std::exp(-M_PI));
            CHECK(M <= prev + 1e-15);
            prev = M;
        }
    }
}

TEST_CASE("mdot ratio examples and the exact-derivative property") {
    CHECK(mdot_ratio(0.0, Mode{1, 0.0}) == doctest::Approx(1.0));
    CHECK(mdot_ratio(1.0, Mode{2, 0.0}) == doctest::Approx(0.25));
    // critical time xi = k t maximizes the ratio at 1/|k|
    CHECK(mdot_ratio(1.5, Mode{2, 3.0}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(mdot_ratio(1.0, Mode{0, 1.0}), ZeroK);

    std::mt19937_64 rng(62);
    for (int i = 0; i < 100; ++i) {
        const Mode m{1 + int(rng() % 4), 8.0 * uniform01(rng) - 4.0};
        const double t = 20.0 * uniform01(rng);
        const double h = 1e-4;
        const double d = (std::log(multiplier_M(t + h, m)) -
                          std::log(multiplier_M(t - h, m))) /
                         (2.0 * h);
        CHECK(std::abs(-d - mdot_ratio(t, m)) < 1e-7);
    }
}

TEST_CASE("integrated mdot ratio equals the total multiplier drop") {
    for (const Mode m : {Mode{1, 0.0}, Mode{2, 3.0}, Mode{3, -4.0}}) {
        const double T = 500.0;
        const auto q = integrate_gk(
            [&](double t) { return mdot_ratio(t, m); }, 0.0, T, 1e-11);
        // analytic tail of int_T^inf (modes here have k > 0)
        const double ak = std::abs(double(m.k));
        const double tail = (M_PI_2 - std::atan(T - m.xi / m.k)) / ak;
        const double total = -std::log(multiplier_m_beta(1.0, 1e14, m.k, m.xi));
        CHECK(q.value + tail == doctest::Approx(total).epsilon(1e-6));
        CHECK(total <= M_PI / ak + 1e-12);
    }
}

TEST_CASE("no-shear energy values") {
    Params p;
    p.alpha = 2.0;
    SUBCASE("pure vorticity mode") {
        const ModeSet set{{Mode{1, 0.0}, ModeState{Complex{1, 0}, {}}}};
        CHECK(energy_no_shear(set, p).value("E") == doctest::Approx(2.0));
    }
    SUBCASE("pure temperature mode carries the gradient weight") {
        const ModeSet set{{Mode{1, 0.0}, ModeState{{}, Complex{1, 0}}}};
        CHECK(energy_no_shear(set, p).value("E") == doctest::Approx(1.0));
    }
    SUBCASE("constant along the inviscid rotation") {
        const ModeState s0{Complex{0.6, 0.1}, Complex{-0.2, 0.4}};
        const Mode m{1, 1.0};
        const double e0 =
            energy_no_shear({{m, s0}}, p).value("E");
        for (double t : {0.7, 3.0, 11.0}) {
            const ModeState s = exact_rotation_inviscid(p.alpha, m, s0, t);
            const double e = energy_no_shear({{m, s}}, p).value("E");
            CHECK(std::abs(e - e0) <= 1e-12 * e0);
        }
    }
}

TEST_CASE("no-shear energy balances its dissipation exactly") {
    Params p{0.8, 0.0, 0.3, 0.1, 0.2, 0.4, 2};
    const Mode m{2, 1.0};
    const ModeState s0{Complex{0.9, -0.3}, Complex{0.2, 0.6}};
    const double t = 2.0;
    const double h = 1e-5;
    auto energy_at = [&](double tau) {
        const ModeState s = integrate_mode_final(p, m, s0, 0.0, tau, 1e-12);
        const EnergyReport rep = energy_no_shear({{m, s}}, p);
        return std::pair<double, double>{rep.value("E"),
                                         rep.dissipation("E")};
    };
    const auto [e_minus, d_minus] = energy_at(t - h);
    const auto [e_plus, d_plus] = energy_at(t + h);
    const auto [e_mid, d_mid] = energy_at(t);
    const double dE_dt = (e_plus - e_minus) / (2.0 * h);
    CHECK(dE_dt == doctest::Approx(-d_mid).epsilon(1e-5));
}

TEST_CASE("sheared energy weights") {
    SUBCASE("coincides with the no-shear energy at beta = 0") {
        Params p{1.5, 0.0, 0.0, 0.0, 0.0, 0.0, 1};
        const ModeSet set{
            {Mode{1, 2.0}, ModeState{Complex{0.3, 0.1}, Complex{0.2, -0.7}}}};
        const double a = energy_no_shear(set, p).value("E");
        const double b = energy_sheared(set, p, 0.0).value("E");
        CHECK(a == doctest::Approx(b).epsilon(1e-14));
    }
    SUBCASE("stored co-moving frequency fixes the vertical weight") {
        Params p;
        p.beta = 1.0;
        const ModeSet set{{Mode{1, 0.0}, ModeState{{}, Complex{1, 0}}}};
        const EnergyReport rep = energy_sheared(set, p, 3.0);
        CHECK(rep.value("E") == doctest::Approx(1.0));
        // the physical-frame weight at t = 3 adds (xi - k t)^2 = 9
        CHECK(rep.value("E_moving") == doctest::Approx(10.0));
    }
}

TEST_CASE("bootstrap energies on toy series") {
    Params p;
    p.beta = 1.0;
    p.nu_x = p.nu_y = 0.1;
    p.eta_x = p.eta_y = 0.1;
    p.sobolev_n = 0;
    SUBCASE("zero fields") {
        std::vector<std::pair<SpectralField, SpectralField>> series(
            3, {SpectralField(8, 8, 1.0), SpectralField(8, 8, 1.0)});
        const auto e = energy_bootstrap(series, p, 0.5);
        CHECK(e.e_omega == 0.0);
        CHECK(e.e_theta == 0.0);
    }
    SUBCASE("single snapshot reduces to the L-infinity term") {
        SpectralField w(8, 8, 1.0, 0.0);
        w.at_mode(1, 0) = Complex{1.0, 0.0};
        w.at_mode(-1, 0) = Complex{1.0, 0.0};
        // one mode of unit amplitude plus its conjugate partner
        std::vector<std::pair<SpectralField, SpectralField>> series{
            {w, SpectralField(8, 8, 1.0, 0.0)}};
        const auto e = energy_bootstrap(series, p, 0.5);
        CHECK(e.e_omega == doctest::Approx(2.0));  // M(0)=1, two modes
        CHECK(e.e_theta == 0.0);
    }
}

TEST_CASE("large-balance functional") {
    Params p;
    p.alpha = 3.0;
    p.beta = 0.0;
    p.sobolev_n = 0;
    SUBCASE("theta = 0 leaves the weighted vorticity") {
        SpectralField w(8, 8, 1.0, 0.0);
        w.at_mode(1, 1) = Complex{0.5, 0.0};
        w.at_mode(-1, -1) = Complex{0.5, 0.0};
        const SpectralField th(8, 8, 1.0, 0.0);
        CHECK(energy_largealpha(w, th, p, 0.0) ==
              doctest::Approx(3.0 * 2.0 * 0.25));
    }
    SUBCASE("single theta mode at t = 0") {
        const SpectralField w(8, 8, 1.0, 0.0);
        SpectralField th(8, 8, 1.0, 0.0);
        th.at_mode(1, 0) = Complex{1.0, 0.0};
        th.at_mode(-1, 0) = Complex{1.0, 0.0};
        CHECK(energy_largealpha(w, th, p, 0.0) == doctest::Approx(2.0));
    }
    SUBCASE("constant along the beta = 0 inviscid rotation") {
        const Mode m{1, 1.0};
        const ModeState s0{Complex{0.4, 0.0}, Complex{0.0, 0.3}};
        double e0 = -1.0;
        for (double t : {0.0, 1.3, 4.7}) {
            const ModeState s = exact_rotation_inviscid(p.alpha, m, s0, t);
            SpectralField w(8, 8, 1.0, t), th(8, 8, 1.0, t);
            w.at_mode(m.k, 1) = s.omega_hat;
            w.at_mode(-m.k, -1) = std::conj(s.omega_hat);
            th.at_mode(m.k, 1) = s.theta_hat;
            th.at_mode(-m.k, -1) = std::conj(s.theta_hat);
            const double e = energy_largealpha(w, th, p, t);
            if (e0 < 0.0)
                e0 = e;
            else
                CHECK(e == doctest::Approx(e0).epsilon(1e-12));
        }
    }
}

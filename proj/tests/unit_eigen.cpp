#include <cmath>
#include <random>

#include "doctest.h"
#include "shearbq/modal_eigen.hpp"
#include "shearbq/ode.hpp"
#include "shearbq/random_field.hpp"

using namespace shearbq;

TEST_CASE("inviscid balance gives a pure rotation spectrum") {
    Params p;
    p.alpha = 1.0;
    const EigenReport rep = eigen_no_shear(p, Mode{1, 0.0});
    CHECK(rep.alpha_star == 0.0);
    CHECK(rep.classification == EigenClass::ComplexPair);
    CHECK(std::abs(rep.lambda1 - Complex{0.0, 1.0}) < 1e-14);
    CHECK(std::abs(rep.lambda2 - Complex{0.0, -1.0}) < 1e-14);
}

TEST_CASE("threshold example with horizontal thermal diffusion") {
    Params p;
    p.eta_x = 1.0;
    p.alpha = 0.01;
    const EigenReport rep = eigen_no_shear(p, Mode{1, 0.0});
    CHECK(rep.alpha_star == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(rep.classification == EigenClass::RealDistinct);
    const double r = std::sqrt(0.25 - 0.01);
    CHECK(rep.lambda1.real() == doctest::Approx(-0.5 + r).epsilon(1e-13));
    CHECK(rep.lambda2.real() == doctest::Approx(-0.5 - r).epsilon(1e-13));
}

TEST_CASE("matched coefficients always oscillate") {
    Params p;
    p.nu_x = p.eta_x = 0.3;
    p.nu_y = p.eta_y = 0.1;
    p.alpha = 0.7;
    const Mode m{2, 1.5};
    const EigenReport rep = eigen_no_shear(p, m);
    CHECK(rep.alpha_star == 0.0);
    CHECK(rep.classification == EigenClass::ComplexPair);
    const double expect = -(0.3 * 4.0 + 0.1 * 1.5 * 1.5);
    CHECK(rep.lambda1.real() == doctest::Approx(expect).epsilon(1e-13));
    CHECK(rep.lambda2.real() == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("k = 0 has no eigen report") {
    Params p;
    p.alpha = 1.0;
    CHECK_THROWS_AS(eigen_no_shear(p, Mode{0, 1.0}), ZeroK);
}

TEST_CASE("eigenvalues reproduce trace and determinant") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
        Params p;
        p.nu_x = uniform01(rng);
        p.nu_y = uniform01(rng);
        p.eta_x = uniform01(rng);
        p.eta_y = uniform01(rng);
        p.alpha = 2.0 * uniform01(rng);
        const Mode m{1 + int(rng() % 4), 6.0 * uniform01(rng) - 3.0};
        const EigenReport rep = eigen_no_shear(p, m);
        const Matrix2c M = mode_matrix(p, m, 0.0);
        const Complex tr = M[0] + M[3];
        const Complex det = M[0] * M[3] - M[1] * M[2];
        CHECK(std::abs(rep.lambda1 + rep.lambda2 - tr) <=
              1e-12 * std::abs(tr));
        CHECK(std::abs(rep.lambda1 * rep.lambda2 - det) <=
              1e-12 * std::max(1e-30, std::abs(det)));
    }
}

TEST_CASE("matrix exponential tracks the integrator, degenerate included") {
    Params p;
    p.nu_x = 0.0;
    p.eta_x = 1.0;
    const Mode m{1, 0.0};
    SUBCASE("generic") { p.alpha = 0.1; }
    SUBCASE("degenerate Jordan block") {
        p.alpha = eigen_no_shear(p, m).alpha_star;
        CHECK(eigen_no_shear(p, m).classification == EigenClass::Degenerate);
    }
    const ModeState s0{Complex{0.8, -0.1}, Complex{0.2, 0.5}};
    for (double t : {1.0, 5.0, 10.0}) {
        const Matrix2c E = matrix_exponential_no_shear(p, m, t);
        const ModeState rec{E[0] * s0.omega_hat + E[1] * s0.theta_hat,
                            E[2] * s0.omega_hat + E[3] * s0.theta_hat};
        const ModeState num =
            integrate_mode_final(p, m, s0, 0.0, t, 1e-11);
        CHECK(std::abs(rec.omega_hat - num.omega_hat) < 1e-8);
        CHECK(std::abs(rec.theta_hat - num.theta_hat) < 1e-8);
    }
}

TEST_CASE("inviscid rotation matrix examples") {
    SUBCASE("quarter period moves omega into theta") {
        const ModeState s =
            exact_rotation_inviscid(1.0, Mode{1, 0.0},
                                    ModeState{Complex{1.0, 0.0}, {}}, M_PI_2);
        CHECK(std::abs(s.omega_hat) < 1e-15);
        CHECK(std::abs(s.theta_hat - Complex{0.0, 1.0}) < 1e-15);
    }
    SUBCASE("identity at t = 0") {
        const ModeState s0{Complex{0.3, 0.4}, Complex{-0.2, 0.9}};
        const ModeState s =
            exact_rotation_inviscid(2.5, Mode{2, 1.0}, s0, 0.0);
        CHECK(s.omega_hat == s0.omega_hat);
        CHECK(s.theta_hat == s0.theta_hat);
    }
    SUBCASE("double frequency at alpha = 4") {
        const ModeState s = exact_rotation_inviscid(
            4.0, Mode{1, 0.0}, ModeState{{}, Complex{1.0, 0.0}}, M_PI_2);
        CHECK(std::abs(s.omega_hat) < 1e-15);
        CHECK(std::abs(s.theta_hat - Complex{-1.0, 0.0}) < 1e-15);
    }
}

TEST_CASE("rotation conserves the balance energy and is periodic") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        const double alpha = 0.25 + 4.0 * uniform01(rng);
        const Mode m{1 + int(rng() % 3), 4.0 * uniform01(rng) - 2.0};
        const double K2 = double(m.k) * m.k + m.xi * m.xi;
        const ModeState s0{Complex{uniform01(rng), uniform01(rng)},
                           Complex{uniform01(rng), uniform01(rng)}};
        const double e0 =
            alpha * std::norm(s0.omega_hat) + K2 * std::norm(s0.theta_hat);
        const double t = 20.0 * uniform01(rng);
        const ModeState s = exact_rotation_inviscid(alpha, m, s0, t);
        const double e =
            alpha * std::norm(s.omega_hat) + K2 * std::norm(s.theta_hat);
        CHECK(std::abs(e - e0) <= 1e-12 * e0);

        const double period =
            2.0 * M_PI * std::sqrt(K2) / (m.k * std::sqrt(alpha));
        const ModeState sp = exact_rotation_inviscid(alpha, m, s0, period);
        CHECK(std::abs(sp.omega_hat - s0.omega_hat) < 1e-11);
        CHECK(std::abs(sp.theta_hat - s0.theta_hat) < 1e-11);
    }
}

TEST_CASE("inviscid Couette mode") {
    const ModeState s0{Complex{1.0, 0.0}, Complex{1.0, 0.0}};
    SUBCASE("k = 0 is frozen") {
        const ModeState s = inviscid_couette_mode(1.0, Mode{0, 2.0}, s0, 9.0);
        CHECK(s.omega_hat == s0.omega_hat);
        CHECK(s.theta_hat == s0.theta_hat);
    }
    SUBCASE("linear secular growth") {
        const ModeState s = inviscid_couette_mode(1.0, Mode{1, 0.0}, s0, 5.0);
        CHECK(std::abs(s.omega_hat - Complex{1.0, 5.0}) < 1e-15);
        CHECK(s.theta_hat == s0.theta_hat);
    }
    SUBCASE("growth slope is |k theta0|") {
        const Mode m{3, 1.0};
        const double t1 = 50.0, t2 = 100.0;
        const double g1 =
            std::abs(inviscid_couette_mode(0.5, m, s0, t1).omega_hat);
        const double g2 =
            std::abs(inviscid_couette_mode(0.5, m, s0, t2).omega_hat);
        CHECK((g2 - g1) / (t2 - t1) ==
              doctest::Approx(3.0 * std::abs(s0.theta_hat)).epsilon(1e-3));
    }
}

TEST_CASE("growth exponent formula") {
    CHECK(growth_exponent_theory(1e-9).value == doctest::Approx(0.5));
    CHECK(growth_exponent_theory(3.0 / 16.0).value ==
          doctest::Approx(0.375).epsilon(1e-15));
    const auto border = growth_exponent_theory(0.25);
    CHECK(border.value == doctest::Approx(0.25));
    CHECK_FALSE(border.oscillatory);
    const auto beyond = growth_exponent_theory(0.3);
    CHECK(beyond.value == doctest::Approx(0.25));
    CHECK(beyond.oscillatory);
}

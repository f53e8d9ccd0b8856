#include <cmath>
#include <vector>

#include "doctest.h"
#include "shearbq/fitting.hpp"

using namespace shearbq;

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
    return out;
}

}  // namespace

TEST_CASE("exponential rate on synthetic decay") {
    const auto ts = linspace(0.0, 10.0, 101);
    std::vector<double> vs;
    for (double t : ts) vs.push_back(std::exp(-2.0 * t));
    const DecayFit fit = fit_exponential_rate(ts, vs, FitWindow{0.0, 10.0});
    CHECK(fit.rate_or_exponent == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fit.residual < 1e-12);
}

TEST_CASE("algebraic exponent on synthetic growth") {
    const auto ts = linspace(1.0, 100.0, 200);
    std::vector<double> vs;
    for (double t : ts) vs.push_back(t);
    const DecayFit fit = fit_algebraic_exponent(ts, vs, FitWindow{1.0, 100.0});
    CHECK(fit.rate_or_exponent == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("fits are invariant under positive scaling") {
    const auto ts = linspace(1.0, 50.0, 120);
    std::vector<double> vs, vs_scaled;
    for (double t : ts) {
        const double v = std::pow(t, 0.7) * std::exp(-0.3 * t);
        vs.push_back(v);
        vs_scaled.push_back(17.0 * v);
    }
    const FitWindow w{1.0, 50.0};
    CHECK(fit_exponential_rate(ts, vs, w).rate_or_exponent ==
          doctest::Approx(fit_exponential_rate(ts, vs_scaled, w)
                              .rate_or_exponent)
              .epsilon(1e-12));
    CHECK(fit_algebraic_exponent(ts, vs, w).rate_or_exponent ==
          doctest::Approx(fit_algebraic_exponent(ts, vs_scaled, w)
                              .rate_or_exponent)
              .epsilon(1e-12));
}

TEST_CASE("fit error paths") {
    const auto ts = linspace(0.0, 10.0, 50);
    std::vector<double> vs(50, 1.0);
    vs[20] = 0.0;
    CHECK_THROWS_AS(fit_exponential_rate(ts, vs, FitWindow{0.0, 10.0}),
                    NonPositiveValues);
    std::vector<double> ok(50, 1.0);
    CHECK_THROWS_AS(fit_exponential_rate(ts, ok, FitWindow{9.7, 10.0}),
                    WindowTooSmall);
}

TEST_CASE("default window starts at the later of t=5 and 20%") {
    SUBCASE("long series: the 20% mark dominates") {
        const auto ts = linspace(0.0, 100.0, 11);
        CHECK(default_fit_window(ts).t_lo == doctest::Approx(20.0));
    }
    SUBCASE("short series: the t=5 floor dominates") {
        const auto ts = linspace(0.0, 10.0, 11);
        CHECK(default_fit_window(ts).t_lo == doctest::Approx(5.0));
    }
}

TEST_CASE("envelope check margins") {
    const auto ts = linspace(0.0, 5.0, 26);
    std::vector<double> vs;
    for (double t : ts) vs.push_back(std::exp(-t));
    SUBCASE("values equal to the envelope give margin 1") {
        const auto rep = envelope_check(
            ts, vs, [](double t) { return std::exp(-t); }, 1.0 + 1e-12);
        CHECK(rep.margin == doctest::Approx(1.0));
        CHECK(rep.pass);
    }
    SUBCASE("margin is monotone in the values") {
        std::vector<double> doubled;
        for (double v : vs) doubled.push_back(2.0 * v);
        const auto rep = envelope_check(
            ts, doubled, [](double t) { return std::exp(-t); }, 1.5);
        CHECK(rep.margin == doctest::Approx(2.0));
        CHECK_FALSE(rep.pass);
    }
}

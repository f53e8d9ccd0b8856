#include <random>

#include "doctest.h"
#include "shearbq/params.hpp"
#include "shearbq/random_field.hpp"
#include "shearbq/spectral_field.hpp"

using namespace shearbq;

TEST_CASE("validate accepts legal parameter sets") {
    Params p{1.0, 1.0, 0.1, 0.1, 0.1, 0.1, 5};
    CHECK_NOTHROW(validate(p));

    Params inviscid;  // all zero, N = 0: legal boundary case
    CHECK_NOTHROW(validate(inviscid));
}

TEST_CASE("validate rejects negative coefficients") {
    Params p;
    p.nu_x = -0.1;
    CHECK_THROWS_AS(validate(p), NegativeCoefficient);
    p = Params{};
    p.alpha = -1e-9;
    CHECK_THROWS_AS(validate(p), NegativeCoefficient);
}

TEST_CASE("sobolev weight examples") {
    CHECK(sobolev_weight(0, Mode{7, 3.5}) == 1.0);
    CHECK(sobolev_weight(2, Mode{1, 0.0}) == doctest::Approx(2.0));
    // (1 + 9 + 16)^{5/2}, cross-checked through the logarithm
    const double w = sobolev_weight(5, Mode{3, 4.0});
    CHECK(w == doctest::Approx(std::exp(2.5 * std::log(26.0))).epsilon(1e-13));
    CHECK(w == doctest::Approx(3446.94).epsilon(1e-4));
}

TEST_CASE("sobolev weight is monotone in |k|, |xi| and n") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const int k = int(rng() % 9);
        const double xi = 10.0 * uniform01(rng) - 5.0;
        const int n = 1 + int(rng() % 6);
        const double w = sobolev_weight(n, Mode{k, xi});
        CHECK(sobolev_weight(n, Mode{k + 1, xi}) >= w);
        CHECK(sobolev_weight(n, Mode{k, xi >= 0 ? xi + 0.5 : xi - 0.5}) >= w);
        CHECK(sobolev_weight(n + 1, Mode{k, xi}) >= w);
    }
}

TEST_CASE("hermitian predicate and enforcement") {
    SpectralField f(8, 8, 1.0);
    f.at_mode(1, 2) = Complex{0.3, -0.4};
    f.at_mode(-1, -2) = Complex{0.3, 0.4};
    f.at_mode(0, 0) = Complex{1.0, 0.0};
    CHECK(f.hermitian_defect() == doctest::Approx(0.0));

    f.at_mode(-1, -2) = Complex{0.0, 0.0};  // break the pairing
    CHECK(f.hermitian_defect() > 0.4);
    f.enforce_hermitian();
    CHECK(f.hermitian_defect() == doctest::Approx(0.0));
}

TEST_CASE("random band fields are hermitian with exact norm") {
    std::mt19937_64 rng(5);
    const auto f =
        random_band_field(32, 32, 0.5, BandSpec{1, 3, 0, 4}, 3, 0.125, rng);
    CHECK(f.hermitian_defect() <= 1e-15);
    double acc = 0.0;
    for (int i = 0; i < f.nx(); ++i)
        for (int j = 0; j < f.ny(); ++j) {
            const double s =
                1.0 + double(f.k_of(i)) * f.k_of(i) + f.xi_of(j) * f.xi_of(j);
            acc += std::pow(s, 3.0) * std::norm(f.at(i, j));
        }
    CHECK(std::sqrt(acc) == doctest::Approx(0.125).epsilon(1e-12));
}

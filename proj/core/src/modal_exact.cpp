#include "shearbq/modal_exact.hpp"

#include <algorithm>
#include <cmath>

#include "shearbq/phase.hpp"
#include "shearbq/quadrature.hpp"

namespace shearbq {

namespace {

void require_alpha0(const Params& p) {
    if (p.alpha != 0.0)
        throw AlphaNotZero("explicit alpha = 0 formula called with alpha != 0");
}

void require_k(const Mode& m) {
    if (m.k == 0) throw ZeroK("operation requires k != 0");
}

// Absolute tolerance to request from the kernel quadrature so that the final
// complex value is accurate to quad_tol after scaling by `scale`.
double kernel_tol(double quad_tol, double scale) {
    const double s = std::max(scale, 1e-300);
    return std::min(quad_tol / s, 1e-8);
}

// Truncation point S for int_0^inf exp(-a s - b phi-like(s)) ds where the
// phase term is bounded below by k^2 s^3 / 12. Doubles S until the analytic
// tail bound drops below tol/10.
double truncation_point(double a, double b, int k, double tol,
                        double start = 1.0) {
    const double k2 = double(k) * k;
    double S = std::max(start, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double rate = a + b * k2 * S * S / 4.0;
        const double bound = std::exp(-a * S - b * k2 * S * S * S / 12.0) /
                             std::max(rate, 1e-300);
        if (bound < 0.1 * tol) return S;
        S *= 2.0;
    }
    throw QuadratureFailure("improper integral tail does not decay");
}

}  // namespace

Complex exact_theta_alpha0(const Params& params, const Mode& mode,
                           Complex theta0, double t) {
    require_alpha0(params);
    return heat_factor(params.eta_x, params.eta_y, mode.k, mode.xi, 0.0, t) *
           theta0;
}

Complex exact_omega_homogeneous(const Params& params, const Mode& mode,
                                Complex omega0, double t) {
    return heat_factor(params.nu_x, params.nu_y, mode.k, mode.xi, 0.0, t) *
           omega0;
}

Complex exact_omega_duhamel(const Params& params, const Mode& mode,
                            Complex theta0, double t, double quad_tol) {
    require_alpha0(params);
    require_k(mode);
    if (t == 0.0 || theta0 == Complex{0.0, 0.0}) return {0.0, 0.0};

    const int k = mode.k;
    const double xi = mode.xi;
    const auto& p = params;
    auto kern = [&](double s) {
        return heat_factor(p.nu_x, p.nu_y, k, xi, s, t) *
               heat_factor(p.eta_x, p.eta_y, k, xi, 0.0, s);
    };
    const double scale = std::abs(double(k) * theta0);
    const auto q = integrate_gk_seeded(
        kern, 0.0, t, endpoint_refined_breakpoints(0.0, t),
        kernel_tol(quad_tol, scale));
    return Complex{0.0, double(k)} * theta0 * q.value;
}

Complex exact_omega_alpha0(const Params& params, const Mode& mode,
                           Complex omega0, Complex theta0, double t,
                           double quad_tol) {
    require_alpha0(params);
    require_k(mode);
    return exact_omega_homogeneous(params, mode, omega0, t) +
           exact_omega_duhamel(params, mode, theta0, t, quad_tol);
}

Omega1Case classify_omega1(const Params& p) {
    const double dx = p.eta_x - p.nu_x;
    const double dy = p.eta_y - p.nu_y;
    if (dx == 0.0 && dy == 0.0) return Omega1Case::EqualCoefficients;
    if (dx >= 0.0 && dy >= 0.0) return Omega1Case::NuLeEtaBoth;
    if (dx <= 0.0 && dy <= 0.0) return Omega1Case::NuGeEtaBoth;
    if (dx < 0.0) return Omega1Case::MixedXLe;
    return Omega1Case::MixedXGe;
}

const char* to_string(Omega1Case c) {
    switch (c) {
        case Omega1Case::EqualCoefficients: return "equal-coefficients";
        case Omega1Case::NuLeEtaBoth: return "nu_le_eta_both";
        case Omega1Case::NuGeEtaBoth: return "nu_ge_eta_both";
        case Omega1Case::MixedXLe: return "mixed-x-le";
        case Omega1Case::MixedXGe: return "mixed-x-ge";
    }
    return "?";
}

Complex omega1_profile(const Params& params, const Mode& mode, Complex theta0,
                       double t, double quad_tol) {
    require_alpha0(params);
    require_k(mode);

    const int k = mode.k;
    const double xi = mode.xi;
    const double k2 = double(k) * k;
    const double dx = params.eta_x - params.nu_x;
    const double dy = params.eta_y - params.nu_y;
    const Complex ik_theta0 = Complex{0.0, double(k)} * theta0;
    if (ik_theta0 == Complex{0.0, 0.0}) return {0.0, 0.0};

    const Omega1Case which = classify_omega1(params);
    double prefactor = 0.0;
    double inner = 0.0;

    switch (which) {
        case Omega1Case::EqualCoefficients: {
            // Kernel is constant in s; the inner integral is exactly t.
            prefactor =
                heat_factor(params.nu_x, params.nu_y, k, xi, 0.0, t);
            inner = t;
            break;
        }
        case Omega1Case::NuLeEtaBoth: {
            // Slow rates nu; the residual integrand decays in s, so the
            // inner integral extends to an improper, t-independent limit.
            prefactor =
                heat_factor(params.nu_x, params.nu_y, k, xi, 0.0, t);
            auto f = [&](double s) {
                return std::exp(-dx * k2 * s -
                                dy * phase_integral(k, xi, 0.0, s));
            };
            const double tol =
                kernel_tol(quad_tol, prefactor * std::abs(ik_theta0));
            const double S = truncation_point(dx * k2, dy, k, tol);
            inner = integrate_gk_seeded(
                        f, 0.0, S, endpoint_refined_breakpoints(0.0, S),
                        tol)
                        .value;
            break;
        }
        case Omega1Case::NuGeEtaBoth: {
            // Slow rates eta; substitute sigma = t - s and extend. The
            // residual phase integral then runs from t - sigma to t and the
            // inner integral stays t-dependent.
            prefactor =
                heat_factor(params.eta_x, params.eta_y, k, xi, 0.0, t);
            auto f = [&](double sigma) {
                return std::exp(dx * k2 * sigma +
                                dy * phase_integral(k, xi, t - sigma, t));
            };
            const double tol =
                kernel_tol(quad_tol, prefactor * std::abs(ik_theta0));
            const double S = truncation_point(-dx * k2, -dy, k, tol);
            inner = integrate_gk_seeded(
                        f, 0.0, S, endpoint_refined_breakpoints(0.0, S),
                        tol)
                        .value;
            break;
        }
        case Omega1Case::MixedXLe: {
            // Opposite orderings in x and y leave boundary layers at both
            // endpoints of the inner integral; every piece of the Duhamel
            // term decays no faster than the mixed-rate pair, so the profile
            // is the full term in its factored form.
            prefactor = heat_factor(params.eta_x, params.nu_y, k, xi, 0.0, t);
            auto f = [&](double s) {
                return std::exp(dx * k2 * (t - s) -
                                dy * phase_integral(k, xi, 0.0, s));
            };
            const double tol =
                kernel_tol(quad_tol, prefactor * std::abs(ik_theta0));
            inner = integrate_gk_seeded(
                        f, 0.0, t, endpoint_refined_breakpoints(0.0, t),
                        tol)
                        .value;
            break;
        }
        case Omega1Case::MixedXGe: {
            prefactor = heat_factor(params.nu_x, params.eta_y, k, xi, 0.0, t);
            auto f = [&](double s) {
                return std::exp(-dx * k2 * s +
                                dy * phase_integral(k, xi, s, t));
            };
            const double tol =
                kernel_tol(quad_tol, prefactor * std::abs(ik_theta0));
            inner = integrate_gk_seeded(
                        f, 0.0, t, endpoint_refined_breakpoints(0.0, t),
                        tol)
                        .value;
            break;
        }
    }
    return prefactor * inner * ik_theta0;
}

}  // namespace shearbq

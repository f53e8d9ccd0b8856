#include "shearbq/modal_eigen.hpp"

#include <cmath>

#include "shearbq/errors.hpp"

namespace shearbq {

const char* to_string(EigenClass c) {
    switch (c) {
        case EigenClass::RealDistinct: return "real-distinct";
        case EigenClass::ComplexPair: return "complex-pair";
        case EigenClass::Degenerate: return "degenerate";
    }
    return "?";
}

Matrix2c mode_matrix(const Params& p, const Mode& m, double t) {
    const double k = m.k;
    const double xp = m.xi - p.beta * k * t;  // physical vertical frequency
    const double k2 = k * k;
    Matrix2c M;
    M[0] = Complex{-p.nu_x * k2 - p.nu_y * xp * xp, 0.0};
    M[1] = Complex{0.0, k};
    M[2] = (m.k == 0) ? Complex{0.0, 0.0}
                      : Complex{0.0, k * p.alpha / (k2 + xp * xp)};
    M[3] = Complex{-p.eta_x * k2 - p.eta_y * xp * xp, 0.0};
    return M;
}

EigenReport eigen_no_shear(const Params& p, const Mode& m) {
    if (m.k == 0) throw ZeroK("k = 0 decouples to heat flow; no eigen report");
    const double k2 = double(m.k) * m.k;
    const double K2 = k2 + m.xi * m.xi;
    const double hx = p.nu_x * k2 + p.nu_y * m.xi * m.xi;
    const double hy = p.eta_x * k2 + p.eta_y * m.xi * m.xi;
    const double half_diff = 0.5 * (hy - hx);
    const double mean = -0.5 * (hx + hy);

    EigenReport rep;
    rep.alpha_star = K2 / k2 * half_diff * half_diff;
    // r^2 in the exactly-cancelling form; its sign decides the regime.
    const double r2 = k2 / K2 * (rep.alpha_star - p.alpha);
    if (r2 > 0.0) {
        const double r = std::sqrt(r2);
        rep.lambda1 = Complex{mean + r, 0.0};
        rep.lambda2 = Complex{mean - r, 0.0};
        rep.classification = EigenClass::RealDistinct;
    } else if (r2 < 0.0) {
        const double r = std::sqrt(-r2);
        rep.lambda1 = Complex{mean, r};
        rep.lambda2 = Complex{mean, -r};
        rep.classification = EigenClass::ComplexPair;
    } else {
        rep.lambda1 = rep.lambda2 = Complex{mean, 0.0};
        rep.classification = EigenClass::Degenerate;
    }
    return rep;
}

Matrix2c matrix_exponential_no_shear(const Params& p, const Mode& m,
                                     double t) {
    const EigenReport rep = eigen_no_shear(p, m);
    const Matrix2c M = mode_matrix(p, m, 0.0);
    Matrix2c E;
    if (rep.classification == EigenClass::Degenerate) {
        // exp(tM) = e^{lambda t} (I + t (M - lambda I))
        const Complex el = std::exp(rep.lambda1 * t);
        E[0] = el * (1.0 + t * (M[0] - rep.lambda1));
        E[1] = el * t * M[1];
        E[2] = el * t * M[2];
        E[3] = el * (1.0 + t * (M[3] - rep.lambda1));
        return E;
    }
    // exp(tM) = [e^{l1 t}(M - l2 I) - e^{l2 t}(M - l1 I)] / (l1 - l2)
    const Complex e1 = std::exp(rep.lambda1 * t);
    const Complex e2 = std::exp(rep.lambda2 * t);
    const Complex den = rep.lambda1 - rep.lambda2;
    E[0] = (e1 * (M[0] - rep.lambda2) - e2 * (M[0] - rep.lambda1)) / den;
    E[1] = (e1 - e2) * M[1] / den;
    E[2] = (e1 - e2) * M[2] / den;
    E[3] = (e1 * (M[3] - rep.lambda2) - e2 * (M[3] - rep.lambda1)) / den;
    return E;
}

ModeState exact_rotation_inviscid(double alpha, const Mode& m,
                                  const ModeState& s0, double t) {
    if (m.k == 0) throw ZeroK("rotation solution requires k != 0");
    const double K = std::sqrt(double(m.k) * m.k + m.xi * m.xi);
    const double ra = std::sqrt(alpha);
    const double freq = m.k * ra / K;
    const double c = std::cos(freq * t);
    const double s = std::sin(freq * t);
    ModeState out;
    out.omega_hat = c * s0.omega_hat + Complex{0.0, K / ra * s} * s0.theta_hat;
    out.theta_hat = Complex{0.0, ra / K * s} * s0.omega_hat + c * s0.theta_hat;
    return out;
}

ModeState inviscid_couette_mode(double /*beta*/, const Mode& m,
                                const ModeState& s0, double t) {
    ModeState out = s0;
    out.omega_hat += t * Complex{0.0, double(m.k)} * s0.theta_hat;
    return out;
}

GrowthExponent growth_exponent_theory(double alpha) {
    if (alpha <= 0.0)
        throw Error("growth exponent defined for alpha > 0");
    if (alpha > 0.25) return {0.25, true};
    return {0.25 + 0.25 * std::sqrt(1.0 - 4.0 * alpha), false};
}

}  // namespace shearbq

#ifndef SHEARBQ_PARAMS_HPP
#define SHEARBQ_PARAMS_HPP

#include <cmath>
#include <complex>

#include "shearbq/errors.hpp"

namespace shearbq {

using Complex = std::complex<double>;

/// Physical constants of the linearized/nonlinear Boussinesq system near the
/// stationary family v = (beta*y, 0), theta = alpha*y, plus the Sobolev index
/// used by every weighted norm.
struct Params {
    double alpha = 0.0;  ///< hydrostatic balance slope, >= 0
    double beta = 0.0;   ///< shear rate
    double nu_x = 0.0;   ///< horizontal viscosity
    double nu_y = 0.0;   ///< vertical viscosity
    double eta_x = 0.0;  ///< horizontal thermal diffusivity
    double eta_y = 0.0;  ///< vertical thermal diffusivity
    int sobolev_n = 0;   ///< H^N index, >= 0
};

/// Returns `p` unchanged if all sign constraints hold, otherwise throws
/// NegativeCoefficient. The all-zero (inviscid) parameter set is legal.
Params validate(const Params& p);

/// One Fourier frequency: k is the discrete horizontal wavenumber on the
/// torus, xi the continuous (or lattice) vertical frequency.
struct Mode {
    int k = 0;
    double xi = 0.0;
};

/// Sheared-frame spectral pair (vorticity, temperature) at one mode.
struct ModeState {
    Complex omega_hat{0.0, 0.0};
    Complex theta_hat{0.0, 0.0};
};

inline ModeState operator*(const Complex& c, const ModeState& s) {
    return {c * s.omega_hat, c * s.theta_hat};
}
inline ModeState operator+(const ModeState& a, const ModeState& b) {
    return {a.omega_hat + b.omega_hat, a.theta_hat + b.theta_hat};
}
inline ModeState operator-(const ModeState& a, const ModeState& b) {
    return {a.omega_hat - b.omega_hat, a.theta_hat - b.theta_hat};
}

/// (1 + k^2 + xi^2)^(n/2), the <D>^n symbol at one mode.
inline double sobolev_weight(int n, const Mode& m) {
    const double s = 1.0 + double(m.k) * m.k + m.xi * m.xi;
    if (n == 0) return 1.0;
    return std::pow(s, 0.5 * n);
}

}  // namespace shearbq

#endif  // SHEARBQ_PARAMS_HPP

#include "shearbq/multiplier.hpp"

#include <cmath>

#include "shearbq/errors.hpp"

namespace shearbq {

double multiplier_m_beta(double beta, double t, int k, double xi) {
    if (k == 0) return 1.0;
    const double ak = std::abs(double(k));
    const double ratio = xi / k;
    return std::exp(-(std::atan(beta * t - ratio) + std::atan(ratio)) / ak);
}

double multiplier_M(double t, const Mode& mode) {
    return multiplier_m_beta(1.0, t, mode.k, mode.xi);
}

double mdot_ratio(double t, const Mode& mode) {
    if (mode.k == 0) throw ZeroK("mdot ratio undefined on the k = 0 channel");
    const double ak = std::abs(double(mode.k));
    const double shift = mode.xi - mode.k * t;
    return ak / (double(mode.k) * mode.k + shift * shift);
}

}  // namespace shearbq

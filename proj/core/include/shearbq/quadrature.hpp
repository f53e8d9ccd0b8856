#ifndef SHEARBQ_QUADRATURE_HPP
#define SHEARBQ_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace shearbq {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of a smooth real integrand on
/// [a, b] to absolute tolerance `abs_tol`. Intervals are bisected
/// worst-first until the summed error estimate drops below tolerance.
/// Throws QuadratureFailure if `max_intervals` subdivisions do not suffice.
QuadratureResult integrate_gk(const std::function<double(double)>& f, double a,
                              double b, double abs_tol = 1e-10,
                              int max_intervals = 4000);

/// Same, but starts from the partition induced by `interior_points`
/// (clipped to (a, b)); needed when the integrand has boundary layers far
/// narrower than the interval, which a cold-started estimate cannot see.
QuadratureResult integrate_gk_seeded(const std::function<double(double)>& f,
                                     double a, double b,
                                     const std::vector<double>& interior_points,
                                     double abs_tol = 1e-10,
                                     int max_intervals = 4000);

/// Breakpoints geometrically refined toward both endpoints of [a, b], down
/// to spacing `finest` (absolute); suits exponential boundary layers of any
/// width above `finest`.
std::vector<double> endpoint_refined_breakpoints(double a, double b,
                                                 double finest = 1e-12);

}  // namespace shearbq

#endif  // SHEARBQ_QUADRATURE_HPP

#include "shearbq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "shearbq/errors.hpp"

namespace shearbq {

namespace {

// Kronrod-15 abscissae on [0,1] (symmetric) and weights, with the embedded
// Gauss-7 weights on the odd-indexed nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    double value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment evaluate(const std::function<double(double)>& f, double a, double b,
                 int& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double result_k = 0.0;
    double result_g = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fsum;
        if (i == 7) {
            fsum = f(c);
            ++evals;
        } else {
            fsum = f(c - h * kXgk[i]) + f(c + h * kXgk[i]);
            evals += 2;
        }
        result_k += kWgk[i] * fsum;
        if (i % 2 == 1) result_g += kWg[i / 2] * fsum;
    }
    result_k *= h;
    result_g *= h;
    // |K - G| is a conservative error estimate for the Kronrod value.
    const double err = std::abs(result_k - result_g);
    return Segment{a, b, result_k, err};
}

}  // namespace

QuadratureResult integrate_gk(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, int max_intervals) {
    return integrate_gk_seeded(f, a, b, {}, abs_tol, max_intervals);
}

std::vector<double> endpoint_refined_breakpoints(double a, double b,
                                                 double finest) {
    std::vector<double> pts;
    const double span = b - a;
    if (span <= 0.0) return pts;
    for (double w = 0.5 * span; w > finest; w *= 0.5) {
        pts.push_back(a + w);
        pts.push_back(b - w);
    }
    return pts;
}

QuadratureResult integrate_gk_seeded(const std::function<double(double)>& f,
                                     double a, double b,
                                     const std::vector<double>& interior_points,
                                     double abs_tol, int max_intervals) {
    QuadratureResult out;
    if (a == b) return out;

    std::vector<double> edges{a};
    for (double p : interior_points)
        if (p > a && p < b) edges.push_back(p);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    int evals = 0;
    std::priority_queue<Segment> queue;
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Segment seg = evaluate(f, edges[i], edges[i + 1], evals);
        total += seg.value;
        total_err += seg.error;
        queue.push(seg);
    }
    int intervals = int(edges.size()) - 1;

    while (total_err > abs_tol && !queue.empty()) {
        if (intervals >= max_intervals) {
            throw QuadratureFailure(
                "adaptive Gauss-Kronrod did not converge within budget");
        }
        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = evaluate(f, worst.a, mid, evals);
        Segment right = evaluate(f, mid, worst.b, evals);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++intervals;
    }

    out.value = total;
    out.error_estimate = total_err;
    out.evaluations = evals;
    return out;
}

}  // namespace shearbq

#include "shearbq/fitting.hpp"

#include <algorithm>
#include <cmath>

namespace shearbq {

FitWindow default_fit_window(std::span<const double> times) {
    FitWindow w;
    if (times.empty()) return w;
    const double t0 = times.front();
    const double t1 = times.back();
    w.t_lo = std::max(5.0, t0 + 0.2 * (t1 - t0));
    w.t_hi = t1;
    return w;
}

namespace {

DecayFit fit_loglinear(std::span<const double> times,
                       std::span<const double> values, const FitWindow& win,
                       FitKind kind) {
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        if (t < win.t_lo || t > win.t_hi) continue;
        const double v = values[i];
        if (!(v > 0.0))
            throw NonPositiveValues("fit window contains values <= 0");
        xs.push_back(kind == FitKind::Algebraic ? std::log(t) : t);
        ys.push_back(std::log(v));
    }
    if (xs.size() < 8)
        throw WindowTooSmall("fit window holds " + std::to_string(xs.size()) +
                             " samples, need >= 8");

    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;

    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (slope * xs[i] + intercept);
        rss += r * r;
    }

    DecayFit fit;
    fit.kind = kind;
    fit.window = win;
    fit.residual = std::sqrt(rss / double(n));
    // Exponential fits report decay as a positive rate; algebraic fits
    // report the growth exponent with its sign.
    fit.rate_or_exponent = kind == FitKind::Exponential ? -slope : slope;
    return fit;
}

}  // namespace

DecayFit fit_exponential_rate(std::span<const double> times,
                              std::span<const double> values,
                              const FitWindow& window) {
    return fit_loglinear(times, values, window, FitKind::Exponential);
}

DecayFit fit_algebraic_exponent(std::span<const double> times,
                                std::span<const double> values,
                                const FitWindow& window) {
    return fit_loglinear(times, values, window, FitKind::Algebraic);
}

EnvelopeReport envelope_check(std::span<const double> times,
                              std::span<const double> values,
                              const std::function<double(double)>& envelope,
                              double slack) {
    EnvelopeReport rep;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double env = envelope(times[i]);
        const double ratio = env > 0.0
                                 ? values[i] / env
                                 : (values[i] > 0.0 ? 1.0 / 0.0 : 0.0);
        if (ratio > rep.margin) {
            rep.margin = ratio;
            rep.worst_time = times[i];
        }
    }
    rep.pass = rep.margin <= slack;
    return rep;
}

}  // namespace shearbq

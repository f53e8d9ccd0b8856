#ifndef SHEARBQ_FITTING_HPP
#define SHEARBQ_FITTING_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "shearbq/errors.hpp"

namespace shearbq {

enum class FitKind { Exponential, Algebraic };

struct FitWindow {
    double t_lo = 0.0;
    double t_hi = 0.0;
};

struct DecayFit {
    FitKind kind = FitKind::Exponential;
    double rate_or_exponent = 0.0;
    double residual = 0.0;  ///< RMS of log-space fit errors over the window
    FitWindow window;
};

/// Default fit window: starts at the later of t = 5 and 20% into the
/// series, ends at the last sample (rates are asymptotic statements).
FitWindow default_fit_window(std::span<const double> times);

/// Least-squares slope of ln(values) against t over the window, reported as
/// a positive decay rate. Requires at least 8 samples in the window
/// (WindowTooSmall) and positive values there (NonPositiveValues).
DecayFit fit_exponential_rate(std::span<const double> times,
                              std::span<const double> values,
                              const FitWindow& window);

/// Least-squares slope of ln(values) against ln(times) over the window
/// (growth exponents positive). Same preconditions.
DecayFit fit_algebraic_exponent(std::span<const double> times,
                                std::span<const double> values,
                                const FitWindow& window);

struct EnvelopeReport {
    double margin = 0.0;  ///< max over samples of values / envelope
    double worst_time = 0.0;
    bool pass = false;
};

/// Checks values(t) <= slack * envelope(t) pointwise on the samples and
/// reports the worst ratio.
EnvelopeReport envelope_check(std::span<const double> times,
                              std::span<const double> values,
                              const std::function<double(double)>& envelope,
                              double slack);

}  // namespace shearbq

#endif  // SHEARBQ_FITTING_HPP

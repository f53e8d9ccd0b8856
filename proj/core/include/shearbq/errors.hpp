#ifndef SHEARBQ_ERRORS_HPP
#define SHEARBQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shearbq {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A dissipation coefficient or the balance slope is negative.
struct NegativeCoefficient : Error {
    using Error::Error;
};

/// An explicit alpha = 0 formula was asked to handle alpha != 0.
struct AlphaNotZero : Error {
    using Error::Error;
};

/// The k = 0 channel was passed to an operation that requires k != 0.
struct ZeroK : Error {
    using Error::Error;
};

/// Adaptive quadrature did not reach the requested tolerance in budget.
struct QuadratureFailure : Error {
    using Error::Error;
};

/// The adaptive step controller drove dt below its floor.
struct StepSizeUnderflow : Error {
    using Error::Error;
};

/// The CFL bound was violated during a nonlinear step.
struct CflViolation : Error {
    using Error::Error;
};

/// A fit was requested on data containing non-positive values.
struct NonPositiveValues : Error {
    using Error::Error;
};

/// A fit window holds fewer samples than the minimum.
struct WindowTooSmall : Error {
    using Error::Error;
};

/// Scenario text could not be parsed; carries line/column.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& what, int line_, int column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

/// A parsed scenario is structurally valid but semantically incomplete.
struct ValidationError : Error {
    using Error::Error;
};

/// Filesystem failure while writing artifacts.
struct IoError : Error {
    using Error::Error;
};

}  // namespace shearbq

#endif  // SHEARBQ_ERRORS_HPP

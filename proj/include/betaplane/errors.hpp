#pragma once

#include <stdexcept>
#include <string>

namespace betaplane {

// Thrown for invalid configuration, malformed inputs, and precondition
// violations that a caller could have checked. CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an evolution produces a non-finite field. Carries the time at
// which the problem was detected. CLI maps this to exit code 3.
struct BlowUpError : std::runtime_error {
    double time;
    explicit BlowUpError(double t, const std::string& what)
        : std::runtime_error(what), time(t) {}
};

// Thrown when an analysis precondition fails (vanishing block norm,
// insufficient time horizon, ...). CLI maps this to exit code 4.
struct AnalysisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed checkpoint files.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace betaplane

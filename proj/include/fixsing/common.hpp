#pragma once

#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fixsing {

inline constexpr double pi = std::numbers::pi;

using RealFn = std::function<double(double)>;
using KernelFn = std::function<double(double, double)>;

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Truncated linear system too ill-conditioned to trust.
struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root finder could not bracket a sign change.
struct NoBracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Non-fatal numerical diagnostics go through one process-wide sink.
// Default writes "warning: ..." to stderr; an empty sink restores it.
using WarningSink = std::function<void(std::string_view)>;
void set_warning_sink(WarningSink sink);
void warn(std::string_view message);

}  // namespace fixsing

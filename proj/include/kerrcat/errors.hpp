#pragma once

#include <stdexcept>
#include <string>

namespace kerrcat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Integration step size above the stability bound.
struct StabilityViolation : Error {
    using Error::Error;
};

// Population piled up against the top of the truncated space.
struct TruncationLeak : Error {
    using Error::Error;
};

// Trace, hermiticity or positivity outside tolerance.
struct SanityViolation : Error {
    using Error::Error;
};

struct ExtentTooSmall : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Non-fatal warnings (truncation adequacy) go through a process-wide sink;
// by default they are printed to stderr.
void emit_warning(const std::string& message);
void set_warnings_enabled(bool enabled);
bool warnings_enabled();

}  // namespace kerrcat

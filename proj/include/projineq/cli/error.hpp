#pragma once

#include <stdexcept>
#include <string>

namespace projineq::cli {

/// Process exit statuses. Input problems and property violations never share a code.
enum class ExitCode : int {
    Ok = 0,
    Violation = 1,          ///< a checked inequality or identity failed beyond tolerance
    Usage = 2,              ///< bad command line or environment
    MalformedInput = 3,     ///< unparsable JSON/CSV, missing fields or columns
    DimensionMismatch = 4,
    ZeroDirection = 5,
    InvalidValue = 6,       ///< value outside its domain (p <= 1, bad weights, non-finite)
    Io = 7,
};

class InputError : public std::runtime_error {
public:
    InputError(ExitCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

inline int to_int(ExitCode c) { return static_cast<int>(c); }

} // namespace projineq::cli

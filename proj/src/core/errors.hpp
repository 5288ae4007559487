#pragma once

#include <stdexcept>
#include <string>

namespace bo2d {

// Error taxonomy shared by the C++ core, the C API status codes and the CLI
// exit codes. Validation-type errors map to exit code 1, NonFiniteState to 2.
enum class ErrorCode {
    Ok = 0,
    InvalidArgument,
    ParseError,
    UnknownKey,
    MissingKey,
    RangeError,
    BadICParams,
    NonHermitianInput,
    NegativePowerOnNonzeroMean,
    NonFiniteState,
    NonUniformSeries,
    OffLatticeFrequency,
    TimesNotOnGrid,
    EdgeMassError,
    InvalidOrders,
    ThetaOutOfRange,
    BOutOfRange,
    LatticeTooLarge,
    IoError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace bo2d

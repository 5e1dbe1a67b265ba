#ifndef CHAINRING_ERRORS_HPP
#define CHAINRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chainring {

enum class ErrorCode {
    NonPrimeP,
    ReduciblePolynomial,
    UnsupportedSize,
    MixedRings,
    EmptyVector,
    IndexOutOfRange,
    SizeCapExceeded,
    EnumerationCapExceeded,
    InvalidTypeVector,
    UnsupportedK,
    VerificationMismatch,
    DegenerateDistribution,
    ZeroCodeword,
    NotZps,
    InvalidSpec,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace chainring

#endif

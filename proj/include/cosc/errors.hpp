// errors.hpp — Error codes and the exception type shared by all modules

#pragma once

#include <stdexcept>
#include <string>

namespace cosc {

enum class ErrorCode {
    NonPositiveParameter,
    NegativeCoupling,
    Supercritical,
    SingularTransform,
    ZeroFrequency,
    NonRealG,
    NonRealLambda,
    SingularSystem,
    UnphysicalCovariance,
    PoleAtZero,
    QuadratureNonConvergence,
    DimensionTooLarge,
    TruncationInadequate,
    NonUniqueSteadyState,
    OracleNonConvergence,
    UnknownPreset,
    ConfigInvalid,
    OutputUnwritable,
    InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace cosc

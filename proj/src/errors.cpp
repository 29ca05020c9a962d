// errors.cpp — Error code names

#include "cosc/errors.hpp"

namespace cosc {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::NegativeCoupling: return "NegativeCoupling";
    case ErrorCode::Supercritical: return "Supercritical";
    case ErrorCode::SingularTransform: return "SingularTransform";
    case ErrorCode::ZeroFrequency: return "ZeroFrequency";
    case ErrorCode::NonRealG: return "NonRealG";
    case ErrorCode::NonRealLambda: return "NonRealLambda";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::UnphysicalCovariance: return "UnphysicalCovariance";
    case ErrorCode::PoleAtZero: return "PoleAtZero";
    case ErrorCode::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::TruncationInadequate: return "TruncationInadequate";
    case ErrorCode::NonUniqueSteadyState: return "NonUniqueSteadyState";
    case ErrorCode::OracleNonConvergence: return "OracleNonConvergence";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::OutputUnwritable: return "OutputUnwritable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace cosc

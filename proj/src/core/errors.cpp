#include "core/errors.hpp"

namespace bo2d {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Ok: return "Ok";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownKey: return "UnknownKey";
        case ErrorCode::MissingKey: return "MissingKey";
        case ErrorCode::RangeError: return "RangeError";
        case ErrorCode::BadICParams: return "BadICParams";
        case ErrorCode::NonHermitianInput: return "NonHermitianInput";
        case ErrorCode::NegativePowerOnNonzeroMean: return "NegativePowerOnNonzeroMean";
        case ErrorCode::NonFiniteState: return "NonFiniteState";
        case ErrorCode::NonUniformSeries: return "NonUniformSeries";
        case ErrorCode::OffLatticeFrequency: return "OffLatticeFrequency";
        case ErrorCode::TimesNotOnGrid: return "TimesNotOnGrid";
        case ErrorCode::EdgeMassError: return "EdgeMassError";
        case ErrorCode::InvalidOrders: return "InvalidOrders";
        case ErrorCode::ThetaOutOfRange: return "ThetaOutOfRange";
        case ErrorCode::BOutOfRange: return "BOutOfRange";
        case ErrorCode::LatticeTooLarge: return "LatticeTooLarge";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace bo2d

#include <crownlab/error.hpp>

namespace crownlab
{
    auto to_string(ErrorCode code) -> std::string_view
    {
        switch (code) {
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::DuplicatePoint: return "DuplicatePoint";
        case ErrorCode::UnknownPoint: return "UnknownPoint";
        case ErrorCode::TooManyPoints: return "TooManyPoints";
        case ErrorCode::EmptySubset: return "EmptySubset";
        case ErrorCode::EmptyCarrier: return "EmptyCarrier";
        case ErrorCode::TargetMismatch: return "TargetMismatch";
        case ErrorCode::NotACrown: return "NotACrown";
        case ErrorCode::NotFlat: return "NotFlat";
        case ErrorCode::NotAnEdge: return "NotAnEdge";
        case ErrorCode::NotATwoClique: return "NotATwoClique";
        case ErrorCode::CrownNotInE: return "CrownNotInE";
        case ErrorCode::TooFewExtremalPoints: return "TooFewExtremalPoints";
        case ErrorCode::InvalidPartition: return "InvalidPartition";
        case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::TargetHas4Crown: return "TargetHas4Crown";
        case ErrorCode::TargetNotFlat: return "TargetNotFlat";
        case ErrorCode::EdgeMissing: return "EdgeMissing";
        case ErrorCode::MinimalityViolated: return "MinimalityViolated";
        case ErrorCode::EdgeInImproperCrown: return "EdgeInImproperCrown";
        case ErrorCode::NoCrownThroughEdge: return "NoCrownThroughEdge";
        case ErrorCode::EmptyFamily: return "EmptyFamily";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::MalformedDocument: return "MalformedDocument";
        }
        return "Unknown";
    }

    Error::Error(ErrorCode code, const std::string & message) :
        std::runtime_error(std::string{to_string(code)} + ": " + message),
        _code(code)
    {
    }
}

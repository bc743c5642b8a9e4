#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crownlab
{
    enum class ErrorCode
    {
        CycleDetected,
        DuplicatePoint,
        UnknownPoint,
        TooManyPoints,
        EmptySubset,
        EmptyCarrier,
        TargetMismatch,
        NotACrown,
        NotFlat,
        NotAnEdge,
        NotATwoClique,
        CrownNotInE,
        TooFewExtremalPoints,
        InvalidPartition,
        NotAHomomorphism,
        HypothesisViolated,
        TargetHas4Crown,
        TargetNotFlat,
        EdgeMissing,
        MinimalityViolated,
        EdgeInImproperCrown,
        NoCrownThroughEdge,
        EmptyFamily,
        BudgetExceeded,
        NotConnected,
        MalformedDocument
    };

    auto to_string(ErrorCode code) -> std::string_view;

    /// Every failure raised by the library carries one of the codes above; the
    /// message names the offending points where there are any.
    class Error : public std::runtime_error
    {
        ErrorCode _code;

    public:
        Error(ErrorCode code, const std::string & message);

        auto code() const -> ErrorCode { return _code; }
    };
}

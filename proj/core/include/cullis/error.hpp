#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cullis {

enum class Errc {
    DivisionByZero,
    MixedFields,
    DuplicateAbscissa,
    FieldTooSmall,
    InsufficientPoints,
    NotPrime,
    BadDimensions,
    BadShape,
    BadColumn,
    IndexOutOfRange,
    EmptyResult,
    ShapeMismatch,
    ConditionViolated,
    BudgetExceeded,
    NotTwoSided,
    ZeroOperator,
    NotAPreserver,
    HypothesisViolated,
    VerificationFailed,
    Parse,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace cullis

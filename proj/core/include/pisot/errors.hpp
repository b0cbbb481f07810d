#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pisot {

enum class ErrorKind {
    NotPisot,
    Reducible,
    UnsupportedDegree,
    SpecMismatch,
    DivisionByZero,
    Divergent,
    BudgetExhausted,
    NegativeInput,
    NotFinite,
    InfiniteRenyi,
    UnsupportedSpec,
    OutOfRange,
    NoTransition,
    PeriodInterference,
    NotAdmissible,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Domain error carrying a typed kind; the CLI prints `kind: message`.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace pisot

#include <pisot/errors.hpp>

namespace pisot {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotPisot: return "NotPisot";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Divergent: return "Divergent";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::InfiniteRenyi: return "InfiniteRenyi";
    case ErrorKind::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NoTransition: return "NoTransition";
    case ErrorKind::PeriodInterference: return "PeriodInterference";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace pisot

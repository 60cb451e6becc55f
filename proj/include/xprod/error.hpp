#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xprod {

enum class ErrorKind {
    NotPrime,
    TooLarge,
    ZeroInput,
    InvalidAction,
    InvalidParams,
    NotInvariant,
    NotCyclic,
    Incompatible,
    ActionMismatch,
    NotAlternating,
    IndexOutOfRange,
    Unsupported,
    InvalidCocycle,
    Parse,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::ActionMismatch: return "ActionMismatch";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InvalidCocycle: return "InvalidCocycle";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every recoverable failure in the library is raised as an Error carrying its kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace xprod

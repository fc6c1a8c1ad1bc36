#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toricic {

enum class ErrorKind {
    MalformedInput,
    NotFullDimensional,
    NotStronglyConvex,
    DegenerateSelection,
    NotComparable,
    NotSimplicialResult,
    NotPure,
    NotAShelling,
    NoShellingFound,
    ShellingSearchFailed,
    DegreeMismatch,
    NegativeCoefficient,
    InvariantViolation,
    NonIntegralExponent,
    CrossCheckMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `index` is set for errors that point
/// at a position (the failing step of a shelling order).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(message), kind_(kind), index_(index) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> index_;
};

}  // namespace toricic

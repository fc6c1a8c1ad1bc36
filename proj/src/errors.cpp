#include "toricic/error.hpp"
#include "toricic/rational.hpp"

namespace toricic {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedInput: return "MalformedInput";
        case ErrorKind::NotFullDimensional: return "NotFullDimensional";
        case ErrorKind::NotStronglyConvex: return "NotStronglyConvex";
        case ErrorKind::DegenerateSelection: return "DegenerateSelection";
        case ErrorKind::NotComparable: return "NotComparable";
        case ErrorKind::NotSimplicialResult: return "NotSimplicialResult";
        case ErrorKind::NotPure: return "NotPure";
        case ErrorKind::NotAShelling: return "NotAShelling";
        case ErrorKind::NoShellingFound: return "NoShellingFound";
        case ErrorKind::ShellingSearchFailed: return "ShellingSearchFailed";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::NonIntegralExponent: return "NonIntegralExponent";
        case ErrorKind::CrossCheckMismatch: return "CrossCheckMismatch";
    }
    return "Unknown";
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) {
        throw Error(ErrorKind::MalformedInput, "not a rational number: '" + text + "'");
    }
    if (r.get_den() == 0) {
        throw Error(ErrorKind::MalformedInput, "zero denominator: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

}  // namespace toricic

#pragma once

#include "toricic/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace toricic::detail {

/// Joins (coefficient, monomial) pairs into "a + 2*b - c". An empty monomial
/// string stands for the constant term.
inline std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [coeff, mono] : terms) {
        Rational mag = abs(coeff);
        const bool negative = sgn(coeff) < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

}  // namespace toricic::detail

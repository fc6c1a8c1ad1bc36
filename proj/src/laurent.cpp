#include "toricic/laurent.hpp"

#include "render_detail.hpp"
#include "toricic/error.hpp"

namespace toricic {

LaurentPolynomial::LaurentPolynomial(Terms terms) {
    for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, int exponent) {
    LaurentPolynomial p;
    p.add_term(exponent, c);
    return p;
}

void LaurentPolynomial::add_term(int exponent, const Rational& c) {
    if (c == 0) return;
    // mpq arithmetic assumes canonical operands; callers may not provide them.
    Rational v = c;
    v.canonicalize();
    auto [it, inserted] = terms_.try_emplace(exponent, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational LaurentPolynomial::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPolynomial::min_degree() const {
    if (terms_.empty()) throw Error(ErrorKind::InvariantViolation, "degree of the zero polynomial");
    return terms_.begin()->first;
}

int LaurentPolynomial::max_degree() const {
    if (terms_.empty()) throw Error(ErrorKind::InvariantViolation, "degree of the zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::shifted(int shift) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
    return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
    LaurentPolynomial result = constant(1);
    LaurentPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

bool LaurentPolynomial::is_palindromic() const { return *this == laurent_mirror(*this); }

bool LaurentPolynomial::has_nonnegative_integer_coefficients() const {
    for (const auto& [e, c] : terms_) {
        if (c < 0 || !is_integer(c)) return false;
    }
    return true;
}

bool LaurentPolynomial::has_parity(int residue) const {
    for (const auto& [e, c] : terms_) {
        if (((e - residue) % 2 + 2) % 2 != 0) return false;
    }
    return true;
}

std::string LaurentPolynomial::to_string(std::string_view variable) const {
    std::vector<std::pair<Rational, std::string>> parts;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        if (e == 1) {
            mono = std::string(variable);
        } else if (e != 0) {
            mono = std::string(variable) + "^" + std::to_string(e);
        }
        parts.emplace_back(c, std::move(mono));
    }
    return detail::join_terms(parts);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
    LaurentPolynomial product;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) product.add_term(ea + eb, ca * cb);
    }
    terms_ = std::move(product.terms_);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    Rational s = scalar;
    s.canonicalize();
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

LaurentPolynomial laurent_mirror(const LaurentPolynomial& p) {
    LaurentPolynomial::Terms mirrored;
    for (const auto& [e, c] : p.terms()) mirrored.emplace(-e, c);
    return LaurentPolynomial(std::move(mirrored));
}

}  // namespace toricic

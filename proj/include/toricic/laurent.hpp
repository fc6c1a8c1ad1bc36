#pragma once

#include "toricic/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace toricic {

/// Sparse one-variable Laurent polynomial with exact rational coefficients.
/// Zero coefficients are never stored, so the zero polynomial has no terms.
class LaurentPolynomial {
public:
    using Terms = std::map<int, Rational>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(Terms terms);

    static LaurentPolynomial constant(const Rational& c) { return monomial(c, 0); }
    static LaurentPolynomial monomial(const Rational& c, int exponent);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(int exponent) const;
    // Both require a nonzero polynomial.
    int min_degree() const;
    int max_degree() const;

    /// Multiplication by q^shift.
    LaurentPolynomial shifted(int shift) const;
    LaurentPolynomial pow(unsigned exponent) const;

    bool is_palindromic() const;
    bool has_nonnegative_integer_coefficients() const;
    /// True when every exponent e with a nonzero coefficient has e ≡ residue (mod 2).
    bool has_parity(int residue) const;

    /// Ascending exponents, e.g. "q^-3 + 2*q^-1 + q".
    std::string to_string(std::string_view variable = "q") const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const Rational& scalar);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) { return a *= s; }
    friend LaurentPolynomial operator*(const Rational& s, LaurentPolynomial a) { return a *= s; }
    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    void add_term(int exponent, const Rational& c);

    Terms terms_;
};

/// q ↦ q^{-1}.
LaurentPolynomial laurent_mirror(const LaurentPolynomial& p);

/// The variable q itself.
inline LaurentPolynomial q_var() { return LaurentPolynomial::monomial(1, 1); }

}  // namespace toricic

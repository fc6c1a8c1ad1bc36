#pragma once

#include "toricic/laurent.hpp"
#include "toricic/rational.hpp"

#include <compare>
#include <map>
#include <string>

namespace toricic {

/// Exponent of K^{k_twice/2} L^{l}. K exponents are stored doubled so that
/// half-integral powers stay exact.
struct BiExponent {
    int k_twice = 0;
    int l = 0;

    friend auto operator<=>(const BiExponent&, const BiExponent&) = default;
};

/// c · K^{k_twice/2} L^{l}
struct BiMonomial {
    Rational coeff{1};
    int k_twice = 0;
    int l = 0;
};

class BiLaurentPolynomial {
public:
    using Terms = std::map<BiExponent, Rational>;

    BiLaurentPolynomial() = default;
    explicit BiLaurentPolynomial(Terms terms);
    BiLaurentPolynomial(const BiMonomial& m);  // NOLINT(google-explicit-constructor)

    static BiLaurentPolynomial constant(const Rational& c) { return BiMonomial{c, 0, 0}; }
    /// K^{k_twice/2}
    static BiLaurentPolynomial k_power(int k_twice) { return BiMonomial{1, k_twice, 0}; }
    static BiLaurentPolynomial l_power(int l) { return BiMonomial{1, 0, l}; }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(int k_twice, int l) const;

    /// All K exponents are integers.
    bool is_integral() const;
    bool has_nonnegative_integer_coefficients() const;

    BiLaurentPolynomial pow(unsigned exponent) const;

    /// Terms by descending K exponent, then ascending L exponent,
    /// e.g. "L^-3 + K^-1*L^-1" or "K^(-1/2)*L".
    std::string to_string() const;

    BiLaurentPolynomial operator-() const;
    BiLaurentPolynomial& operator+=(const BiLaurentPolynomial& rhs);
    BiLaurentPolynomial& operator-=(const BiLaurentPolynomial& rhs);
    BiLaurentPolynomial& operator*=(const BiLaurentPolynomial& rhs);
    BiLaurentPolynomial& operator*=(const Rational& scalar);

    friend BiLaurentPolynomial operator+(BiLaurentPolynomial a, const BiLaurentPolynomial& b) { return a += b; }
    friend BiLaurentPolynomial operator-(BiLaurentPolynomial a, const BiLaurentPolynomial& b) { return a -= b; }
    friend BiLaurentPolynomial operator*(BiLaurentPolynomial a, const BiLaurentPolynomial& b) { return a *= b; }
    friend BiLaurentPolynomial operator*(BiLaurentPolynomial a, const Rational& s) { return a *= s; }
    friend bool operator==(const BiLaurentPolynomial&, const BiLaurentPolynomial&) = default;

private:
    void add_term(const BiExponent& e, const Rational& c);

    Terms terms_;
};

/// Substitutes the monomial `image_of_q` for q: q^j ↦ c^j K^{j·k/2} L^{j·l}.
/// Throws MalformedInput when the monomial coefficient is zero.
BiLaurentPolynomial laurent_eval_substitute(const LaurentPolynomial& p, const BiMonomial& image_of_q);

/// "2", "-1", or "(-1/2)" for a doubled K exponent.
std::string render_exponent_k(int k_twice);

}  // namespace toricic

#include "toricic/bilaurent.hpp"

#include "render_detail.hpp"
#include "toricic/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace toricic {

BiLaurentPolynomial::BiLaurentPolynomial(Terms terms) {
    for (auto& [e, c] : terms) add_term(e, c);
}

BiLaurentPolynomial::BiLaurentPolynomial(const BiMonomial& m) { add_term({m.k_twice, m.l}, m.coeff); }

void BiLaurentPolynomial::add_term(const BiExponent& e, const Rational& c) {
    if (c == 0) return;
    // mpq arithmetic assumes canonical operands; callers may not provide them.
    Rational v = c;
    v.canonicalize();
    auto [it, inserted] = terms_.try_emplace(e, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational BiLaurentPolynomial::coefficient(int k_twice, int l) const {
    auto it = terms_.find({k_twice, l});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool BiLaurentPolynomial::is_integral() const {
    for (const auto& [e, c] : terms_) {
        if (e.k_twice % 2 != 0) return false;
    }
    return true;
}

bool BiLaurentPolynomial::has_nonnegative_integer_coefficients() const {
    for (const auto& [e, c] : terms_) {
        if (c < 0 || !is_integer(c)) return false;
    }
    return true;
}

BiLaurentPolynomial BiLaurentPolynomial::pow(unsigned exponent) const {
    BiLaurentPolynomial result = constant(1);
    BiLaurentPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::string render_exponent_k(int k_twice) {
    if (k_twice % 2 == 0) return std::to_string(k_twice / 2);
    return "(" + std::to_string(k_twice) + "/2)";
}

std::string BiLaurentPolynomial::to_string() const {
    std::vector<const Terms::value_type*> ordered;
    ordered.reserve(terms_.size());
    for (const auto& kv : terms_) ordered.push_back(&kv);
    std::stable_sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) {
        if (a->first.k_twice != b->first.k_twice) return a->first.k_twice > b->first.k_twice;
        return a->first.l < b->first.l;
    });

    std::vector<std::pair<Rational, std::string>> parts;
    for (const auto* kv : ordered) {
        const auto& [e, c] = *kv;
        std::string mono;
        if (e.k_twice != 0) mono = e.k_twice == 2 ? "K" : "K^" + render_exponent_k(e.k_twice);
        if (e.l != 0) {
            if (!mono.empty()) mono += "*";
            mono += e.l == 1 ? "L" : "L^" + std::to_string(e.l);
        }
        parts.emplace_back(c, std::move(mono));
    }
    return detail::join_terms(parts);
}

BiLaurentPolynomial BiLaurentPolynomial::operator-() const {
    BiLaurentPolynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

BiLaurentPolynomial& BiLaurentPolynomial::operator+=(const BiLaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

BiLaurentPolynomial& BiLaurentPolynomial::operator-=(const BiLaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

BiLaurentPolynomial& BiLaurentPolynomial::operator*=(const BiLaurentPolynomial& rhs) {
    BiLaurentPolynomial product;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            product.add_term({ea.k_twice + eb.k_twice, ea.l + eb.l}, ca * cb);
        }
    }
    terms_ = std::move(product.terms_);
    return *this;
}

BiLaurentPolynomial& BiLaurentPolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    Rational s = scalar;
    s.canonicalize();
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

namespace {

Rational rational_pow(const Rational& base, int exponent) {
    Rational result = 1;
    const Rational factor = exponent >= 0 ? base : Rational(1) / base;
    for (int i = 0; i < std::abs(exponent); ++i) result *= factor;
    return result;
}

}  // namespace

BiLaurentPolynomial laurent_eval_substitute(const LaurentPolynomial& p, const BiMonomial& image_of_q) {
    if (image_of_q.coeff == 0) {
        throw Error(ErrorKind::MalformedInput, "substitution monomial has zero coefficient");
    }
    BiLaurentPolynomial::Terms out;
    for (const auto& [j, c] : p.terms()) {
        // Distinct j give distinct images unless the monomial is constant.
        out[{j * image_of_q.k_twice, j * image_of_q.l}] += c * rational_pow(image_of_q.coeff, j);
    }
    return BiLaurentPolynomial(std::move(out));
}

}  // namespace toricic

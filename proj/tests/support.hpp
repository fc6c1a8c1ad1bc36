#pragma once

#include "toricic/bilaurent.hpp"
#include "toricic/corpus.hpp"
#include "toricic/laurent.hpp"

#include <initializer_list>
#include <random>
#include <string>
#include <tuple>

namespace testing {

using namespace toricic;

// {exponent, coefficient} pairs.
inline LaurentPolynomial lp(std::initializer_list<std::pair<int, long>> terms) {
    LaurentPolynomial p;
    for (auto [e, c] : terms) p += LaurentPolynomial::monomial(Rational(c), e);
    return p;
}

// {doubled K exponent, L exponent, coefficient}.
inline BiLaurentPolynomial bl(std::initializer_list<std::tuple<int, int, long>> terms) {
    BiLaurentPolynomial p;
    for (auto [k, l, c] : terms) p += BiMonomial{Rational(c), k, l};
    return p;
}

inline LaurentPolynomial random_laurent(std::mt19937& rng, int span = 4, int terms = 4) {
    std::uniform_int_distribution<int> exp(-span, span);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    LaurentPolynomial p;
    for (int i = 0; i < terms; ++i) p += LaurentPolynomial::monomial(Rational(num(rng), den(rng)), exp(rng));
    return p;
}

inline BiLaurentPolynomial random_bilaurent(std::mt19937& rng, int span = 3, int terms = 4) {
    std::uniform_int_distribution<int> exp(-span, span);
    std::uniform_int_distribution<int> num(-9, 9);
    BiLaurentPolynomial p;
    for (int i = 0; i < terms; ++i) p += BiMonomial{Rational(num(rng)), exp(rng), exp(rng)};
    return p;
}

inline ConeSpec corpus_cone(const std::string& name) {
    for (auto& s : builtin_corpus()) {
        if (s.name == name) return s;
    }
    throw std::runtime_error("no corpus cone " + name);
}

}  // namespace testing

#include "support.hpp"

#include "toricic/decomposition.hpp"
#include "toricic/error.hpp"

#include <catch_amalgamated.hpp>

using namespace testing;

TEST_CASE("rationals parse and reject garbage") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK(to_string(Rational(5, 2)) == "5/2");
}

TEST_CASE("laurent polynomials drop zero terms and render ascending") {
    const auto p = lp({{1, 1}, {-1, 2}, {-3, 1}});
    CHECK(p.to_string() == "q^-3 + 2*q^-1 + q");
    CHECK((p - p).is_zero());
    CHECK(p.min_degree() == -3);
    CHECK(p.max_degree() == 1);
    CHECK(lp({{2, -1}, {0, 1}}).to_string("y") == "1 - y^2");
    CHECK(LaurentPolynomial().to_string() == "0");
}

TEST_CASE("mirror negates exponents") {
    CHECK(laurent_mirror(lp({{1, 1}, {-1, 1}})) == lp({{1, 1}, {-1, 1}}));
    CHECK(laurent_mirror(lp({{-3, 1}, {-1, 1}})) == lp({{3, 1}, {1, 1}}));
    CHECK(laurent_mirror(LaurentPolynomial()).is_zero());
}

TEST_CASE("laurent ring axioms on random inputs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == LaurentPolynomial());
        CHECK(laurent_mirror(a * b) == laurent_mirror(a) * laurent_mirror(b));
        CHECK(a.pow(3) == a * a * a);
        CHECK(a.shifted(2) == a * lp({{2, 1}}));
    }
}

TEST_CASE("palindromic and parity predicates") {
    CHECK(lp({{2, 1}, {0, 5}, {-2, 1}}).is_palindromic());
    CHECK_FALSE(lp({{2, 1}, {0, 5}}).is_palindromic());
    CHECK(lp({{-3, 1}, {-1, 4}}).has_parity(1));
    CHECK_FALSE(lp({{-3, 1}, {-2, 4}}).has_parity(1));
    CHECK(lp({{0, 2}, {1, 3}}).has_nonnegative_integer_coefficients());
    CHECK_FALSE(lp({{0, -2}}).has_nonnegative_integer_coefficients());
}

TEST_CASE("bivariate products and powers") {
    const auto s = bl({{-2, 0, 1}, {0, -1, 1}});  // K^-1 + L^-1
    CHECK(s.pow(2) == bl({{-4, 0, 1}, {-2, -1, 2}, {0, -2, 1}}));
    CHECK(s.pow(0) == BiLaurentPolynomial::constant(1));
    CHECK(bl({{0, -3, 1}}) * bl({{0, 0, 1}, {-2, 1, 1}}) == bl({{0, -3, 1}, {-2, -2, 1}}));
}

TEST_CASE("bivariate rendering orders K descending then L ascending") {
    CHECK(bl({{0, -3, 1}, {-2, -1, 1}}).to_string() == "L^-3 + K^-1*L^-1");
    CHECK(bl({{-4, 1, 1}, {-2, -1, 6}, {0, -3, 1}}).to_string() == "L^-3 + 6*K^-1*L^-1 + K^-2*L");
    CHECK(bl({{-1, 1, 1}}).to_string() == "K^(-1/2)*L");
    CHECK(bl({{3, -3, 1}}).to_string() == "K^(3/2)*L^-3");
    CHECK_FALSE(bl({{-1, 1, 1}}).is_integral());
}

TEST_CASE("substitution q -> monomial") {
    CHECK(laurent_eval_substitute(lp({{0, 1}}), BiMonomial{1, -1, 1}) == BiLaurentPolynomial::constant(1));
    CHECK(laurent_eval_substitute(lp({{-3, 1}, {-1, 1}}), BiMonomial{1, -1, 1}) == bl({{3, -3, 1}, {1, -1, 1}}));
    CHECK(laurent_eval_substitute(lp({{1, 1}, {-1, 1}}), BiMonomial{1, 1, -1}) == bl({{1, -1, 1}, {-1, 1, 1}}));
    CHECK_THROWS_AS(laurent_eval_substitute(lp({{1, 1}}), BiMonomial{0, 1, 0}), Error);
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(11);
    const BiMonomial image{Rational(-2), -1, 1};
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_laurent(rng), b = random_laurent(rng);
        CHECK(laurent_eval_substitute(a * b, image) ==
              laurent_eval_substitute(a, image) * laurent_eval_substitute(b, image));
        CHECK(laurent_eval_substitute(a + b, image) ==
              laurent_eval_substitute(a, image) + laurent_eval_substitute(b, image));
    }
}

TEST_CASE("bivariate ring axioms on random inputs") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_bilaurent(rng), b = random_bilaurent(rng), c = random_bilaurent(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("palindromic split examples") {
    auto s = split_palindromic_negative(lp({{1, 1}, {-1, 2}, {-3, 1}}));
    CHECK(s.palindromic == lp({{1, 1}, {-1, 1}}));
    CHECK(s.negative == lp({{-1, 1}, {-3, 1}}));
    s = split_palindromic_negative(lp({{-2, 1}}));
    CHECK(s.palindromic.is_zero());
    CHECK(s.negative == lp({{-2, 1}}));
    s = split_palindromic_negative(lp({{2, 1}, {0, 5}, {-2, 5}, {-4, 1}}));
    CHECK(s.palindromic == lp({{2, 1}, {0, 5}, {-2, 1}}));
    CHECK(s.negative == lp({{-2, 4}, {-4, 1}}));
}

TEST_CASE("palindromic split is the unique decomposition") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_laurent(rng, 5, 6);
        const auto s = split_palindromic_negative(p);
        CHECK(s.negative + s.palindromic == p);
        CHECK(s.palindromic.is_palindromic());
        if (!s.negative.is_zero()) CHECK(s.negative.max_degree() < 0);
    }
}

TEST_CASE("error kinds have names") {
    CHECK(to_string(ErrorKind::NotStronglyConvex) == "NotStronglyConvex");
    const Error e(ErrorKind::NotAShelling, "step", 3);
    CHECK(e.index() == 3);
}

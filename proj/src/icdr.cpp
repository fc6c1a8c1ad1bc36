#include "toricic/icdr.hpp"

#include "toricic/error.hpp"

#include <string>

namespace toricic {

namespace {

BiLaurentPolynomial k_inv_plus_l_inv() { return BiLaurentPolynomial(BiMonomial{1, -2, 0}) + BiMonomial{1, 0, -1}; }

}  // namespace

BiLaurentPolynomial dr_from_H(const FaceLattice& lattice, const DecompositionResult& dec, int mu, int tau, int n) {
    if (!lattice.contains(mu, tau)) {
        throw Error(ErrorKind::NotComparable,
                    "face " + std::to_string(mu) + " is not contained in face " + std::to_string(tau));
    }
    const int dm = lattice.face(mu).dim;
    const int dt = lattice.face(tau).dim;
    BiLaurentPolynomial out = laurent_eval_substitute(dec.H(mu, tau), BiMonomial{1, -1, 1}) *
                              BiLaurentPolynomial::k_power(dm - dt) *
                              k_inv_plus_l_inv().pow(static_cast<unsigned>(n - dt));
    if (!out.is_integral()) {
        throw Error(ErrorKind::NonIntegralExponent, "dR for pair (" + std::to_string(mu) + ", " + std::to_string(tau) +
                                                        ") has a half-integral K exponent: " + out.to_string());
    }
    return out;
}

BiLaurentPolynomial dr_crosscheck(const FaceLattice& lattice, const DecompositionResult& dec,
                                  const BiLaurentPolynomial& omega, int tau, int n) {
    BiLaurentPolynomial rest = omega;
    for (int mu : lattice.faces_below(tau)) {
        if (mu == lattice.bottom()) continue;
        const int dm = lattice.face(mu).dim;
        rest -= dr_from_H(lattice, dec, mu, tau, n) *
                laurent_eval_substitute(dec.D[static_cast<std::size_t>(mu)], BiMonomial{1, 1, -1}) *
                BiLaurentPolynomial::k_power(-dm);
    }
    const BiLaurentPolynomial expected = dr_from_H(lattice, dec, lattice.bottom(), tau, n);
    if (rest != expected) {
        throw Error(ErrorKind::CrossCheckMismatch, "face " + std::to_string(tau) + ": Omega gives " + rest.to_string() +
                                                       ", H~ gives " + expected.to_string() +
                                                       ", difference " + (rest - expected).to_string());
    }
    return rest;
}

LaurentPolynomial chi_y_specialize(const BiLaurentPolynomial& dr) {
    LaurentPolynomial::Terms out;
    for (const auto& [e, c] : dr.terms()) {
        if (e.k_twice % 2 != 0) {
            throw Error(ErrorKind::NonIntegralExponent, "half-integral K exponent in " + dr.to_string());
        }
        const int k = e.k_twice / 2;
        const bool odd = ((k + e.l) % 2 + 2) % 2 != 0;
        out[-k] += odd ? Rational(-c) : c;
    }
    return LaurentPolynomial(std::move(out));
}

LaurentPolynomial chi_y_from_H(const LaurentPolynomial& htilde, int face_dim, int n) {
    LaurentPolynomial::Terms sub;
    const LaurentPolynomial shifted = htilde.shifted(face_dim);
    for (const auto& [e, c] : shifted.terms()) {
        if (e % 2 != 0) throw Error(ErrorKind::NonIntegralExponent, "odd power of q in " + htilde.to_string());
        const int j = e / 2;  // q^{2j} = (-y)^j
        sub[j] += (j % 2 != 0) ? Rational(-c) : c;
    }
    const LaurentPolynomial one_plus_y = LaurentPolynomial::constant(1) + q_var();
    LaurentPolynomial out = LaurentPolynomial(std::move(sub)) * one_plus_y.pow(static_cast<unsigned>(n - face_dim));
    if (n % 2 != 0) out = -out;
    return out;
}

}  // namespace toricic

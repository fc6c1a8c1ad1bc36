#pragma once

#include "toricic/bilaurent.hpp"
#include "toricic/decomposition.hpp"
#include "toricic/face_lattice.hpp"

namespace toricic {

/// H~_{mu,tau}(K^{-1/2}L) K^{(d_mu - d_tau)/2} (K^{-1} + L^{-1})^{n - d_tau}.
/// Throws NonIntegralExponent if a half-integral K power survives.
BiLaurentPolynomial dr_from_H(const FaceLattice& lattice, const DecompositionResult& dec, int mu, int tau, int n);

/// dR_{0,tau} recovered from Omega_tau by subtracting
/// dR_{mu,tau} D_mu(L^{-1}K^{1/2}) K^{-d_mu/2} over 0 ≠ mu ⊆ tau, with the
/// dR_{mu,tau} from dr_from_H. Throws CrossCheckMismatch (with the
/// difference in the message) unless it equals dr_from_H(0, tau).
BiLaurentPolynomial dr_crosscheck(const FaceLattice& lattice, const DecompositionResult& dec,
                                  const BiLaurentPolynomial& omega, int tau, int n);

/// Evaluation at L = -1, K = (-y)^{-1}: c K^k L^l -> c (-1)^{k+l} y^{-k}.
/// Throws NonIntegralExponent.
LaurentPolynomial chi_y_specialize(const BiLaurentPolynomial& dr);

/// H~(q) q^{d} (1 + y)^{n-d} (-1)^n with q^2 = -y; the value chi_y_specialize
/// must produce for dR_{0,tau}. Throws NonIntegralExponent on odd powers of q.
LaurentPolynomial chi_y_from_H(const LaurentPolynomial& htilde, int face_dim, int n);

}  // namespace toricic

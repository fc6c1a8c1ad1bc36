#pragma once

#include "toricic/exact_linalg.hpp"
#include "toricic/face_lattice.hpp"
#include "toricic/laurent.hpp"
#include "toricic/subdivision.hpp"

#include <map>
#include <utility>
#include <vector>

namespace toricic {

/// F_tau(q) = Σ_l d_l(tau)(q^2 - 1)^{d_tau - l}. Throws NegativeCoefficient
/// if the result has a negative coefficient.
LaurentPolynomial fiber_poincare(const MultiplicityTable& d, int face);

struct PalindromicSplit {
    LaurentPolynomial negative;     // supported in degrees < 0
    LaurentPolynomial palindromic;  // invariant under q -> 1/q
};

/// The unique P = negative + palindromic.
PalindromicSplit split_palindromic_negative(const LaurentPolynomial& p);

struct DecompositionResult {
    std::vector<LaurentPolynomial> F;                       // per face
    std::vector<LaurentPolynomial> D;                       // per face
    std::map<std::pair<int, int>, LaurentPolynomial> Htilde;  // (mu, tau), mu ⊆ tau

    const LaurentPolynomial& H(int mu, int tau) const { return Htilde.at({mu, tau}); }
};

/// Solves F~_tau = Σ_{mu ⊆ tau} H~_{mu,tau} D_mu face by face. The stalks with
/// mu ≠ 0 come from the intervals [mu, tau] with their own chain counts; the
/// row mu = 0 and D use the given multiplicities. Nonnegativity, parity and
/// palindromicity are checked afterwards and reported as InvariantViolation.
DecompositionResult solve_decomposition(const FaceLattice& lattice, const MultiplicityTable& d,
                                        ExecutionPolicy policy = ExecutionPolicy::Serial);

/// Stalk polynomial H~_{0,top} and multiplicity D_top of every interval
/// [a, b], computed from chain counts alone. Indexed [a][b]; entries with
/// a ⊄ b are empty.
struct IntervalTable {
    std::vector<std::vector<LaurentPolynomial>> H;
    std::vector<std::vector<LaurentPolynomial>> D;
};

IntervalTable solve_intervals_serial(const FaceLattice& lattice);
/// Same table; intervals of equal length are solved concurrently.
IntervalTable solve_intervals_parallel(const FaceLattice& lattice);

/// F~_tau - Σ_{mu ⊆ tau} H~_{mu,tau} D_mu, which is zero after a successful solve.
LaurentPolynomial stalk_identity_residual(const FaceLattice& lattice, const DecompositionResult& r, int tau);

/// Faces whose H~_{0,tau} has lowest coefficient different from 1 at q^{-d_tau}.
std::vector<int> lowest_coefficient_exceptions(const FaceLattice& lattice, const DecompositionResult& r);

}  // namespace toricic

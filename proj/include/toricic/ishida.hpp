#pragma once

#include "toricic/bilaurent.hpp"
#include "toricic/cone.hpp"
#include "toricic/exact_linalg.hpp"
#include "toricic/subdivision.hpp"

#include <optional>
#include <vector>

namespace toricic {

/// Cochain complex C^0 -> C^1 -> ... with exact rational differentials.
/// differentials[i] maps C^i to C^{i+1} and has shape dims[i+1] x dims[i].
struct RationalChainComplex {
    std::vector<std::size_t> dims;
    std::vector<RationalMatrix> differentials;
};

/// Degree-u piece of the pushforward Ishida complex for p-forms. Position l
/// holds the sum over cones nu of dimension l whose rays all pair to zero
/// with u of the wedge power of nu-perp of degree p - l. The differential
/// component nu -> nu + rho is contraction with rho (times a sign depending
/// only on l). Throws DegreeMismatch for an invalid degree and
/// InvariantViolation if d∘d ≠ 0.
RationalChainComplex build_degree_u_complex(const SubdivisionMap& sub, int p, const DegreeVector& u);

/// h^i = dim C^i - rank d_i - rank d_{i-1}.
std::vector<std::size_t> cohomology_dims(const RationalChainComplex& c,
                                         ExecutionPolicy policy = ExecutionPolicy::Serial);

/// Sum over p and i of h^i(p) K^{-p} L^{i-n+p}, at the given degree or at
/// pick_degree(face) when none is given. The parallel policy splits the form
/// degrees across threads and uses the parallel rank kernel.
BiLaurentPolynomial omega_oracle(const SubdivisionMap& sub, int face,
                                 ExecutionPolicy policy = ExecutionPolicy::Serial,
                                 const std::optional<DegreeVector>& u = std::nullopt);

/// L^{-n}(1+K^{-1}L)^{n-d} Σ_{mu ⊆ tau} Σ_j d_j(mu)(1-K^{-1}L^2)^{d-j}(K^{-1}L^2)^j.
BiLaurentPolynomial omega_closed_form(const FaceLattice& lattice, const MultiplicityTable& d, int face, int n);

/// L^{-n}(1+K^{-1}L)^{n-d} F(L K^{-1/2}).
BiLaurentPolynomial omega_from_fiber(const LaurentPolynomial& fiber, int face_dim, int n);

}  // namespace toricic

#pragma once

#include "toricic/face_lattice.hpp"
#include "toricic/subdivision.hpp"

#include <vector>

namespace toricic {

using Simplex = std::vector<int>;  // sorted vertex ids

/// Pure abstract simplicial complex given by its facets.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Throws NotPure if the facets have different sizes.
    explicit SimplicialComplex(std::vector<Simplex> facets);

    const std::vector<Simplex>& facets() const noexcept { return facets_; }
    /// Number of vertices per facet.
    std::size_t facet_size() const { return facets_.empty() ? 0 : facets_.front().size(); }

private:
    std::vector<Simplex> facets_;
};

/// Maximal cones of the fan as facets (the cone point is dropped).
SimplicialComplex complex_from_fan(const SimplicialFan& fan);

struct ShellingOrder {
    std::vector<Simplex> order;
    std::vector<int> types;
    std::vector<Simplex> restriction_faces;  // empty simplex for the first facet
};

/// Checks each step through the unique minimal new face. Throws
/// NotAShelling carrying the first failing position.
ShellingOrder verify_shelling(const SimplicialComplex& complex, const std::vector<Simplex>& order);

/// Backtracking search. Throws NoShellingFound.
ShellingOrder find_shelling(const SimplicialComplex& complex);

/// Facets of the barycentric complex of the lattice: full flags of nonzero
/// faces, with vertex id = face id - 1.
SimplicialComplex barycentric_complex(const FaceLattice& lattice);

/// Lexicographic order on flags built from nested boundary shellings of the
/// faces, then verified. Throws ShellingSearchFailed if a boundary shelling
/// with the required initial segment cannot be found.
ShellingOrder lexicographic_shelling(const FaceLattice& lattice);

}  // namespace toricic

#pragma once

#include "toricic/face_lattice.hpp"
#include "toricic/rational.hpp"

#include <vector>

namespace toricic {

/// Element of N or M, depending on context.
using LatticeVector = std::vector<Integer>;

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
LatticeVector primitive(LatticeVector v);
Integer pairing(const LatticeVector& a, const LatticeVector& b);
std::size_t integer_rank(const std::vector<LatticeVector>& vectors);

/// Primitive facet normals of the cone generated by `rays`, sorted
/// lexicographically. For a full-dimensional strongly convex cone they
/// generate the dual cone. Computed by the double description method.
/// Throws NotFullDimensional or NotStronglyConvex.
std::vector<LatticeVector> dual_cone(int rank, const std::vector<LatticeVector>& rays);

/// Full-dimensional strongly convex rational cone with its face lattice.
class PolyhedralCone {
public:
    /// Generators are made primitive and deduplicated; generators that are not
    /// extremal are dropped. Extremal rays keep their input order.
    static PolyhedralCone from_rays(int rank, const std::vector<LatticeVector>& generators);

    int rank() const noexcept { return rank_; }
    const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
    const std::vector<LatticeVector>& facet_normals() const noexcept { return normals_; }
    const FaceLattice& lattice() const noexcept { return lattice_; }

    /// Normals vanishing on every ray of the face (the facets containing it).
    std::vector<int> normals_containing(int face) const;
    /// Smallest face containing `point`, which must lie in the cone.
    int minimal_face_containing(const LatticeVector& point) const;

private:
    int rank_ = 0;
    std::vector<LatticeVector> rays_;
    std::vector<LatticeVector> normals_;
    FaceLattice lattice_;
};

/// u in M pairing to zero with the rays of `face` and positively with the rest.
struct DegreeVector {
    LatticeVector u;
    int face = 0;
};

/// Sum of the facet normals containing the face, validated by direct pairing;
/// falls back to a search over small combinations of the normals.
/// Throws DegenerateSelection if no valid degree is found.
DegreeVector pick_degree(const PolyhedralCone& cone, int face);

/// Several distinct valid degrees for the same face (just one when the face is
/// the whole cone).
std::vector<DegreeVector> pick_degrees(const PolyhedralCone& cone, int face);

/// The face whose relative interior of the dual face contains u.
/// Throws DegreeMismatch if u is not in the dual cone.
int face_of_degree(const PolyhedralCone& cone, const LatticeVector& u);

bool is_valid_degree(const PolyhedralCone& cone, const DegreeVector& degree);

}  // namespace toricic

#pragma once

#include "toricic/cone.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace toricic {

/// Simplicial fan refining a cone. Rays carry the face of the cone whose
/// relative interior contains them.
struct SimplicialFan {
    int rank = 0;
    std::vector<LatticeVector> rays;
    std::vector<int> ray_face;
    std::vector<std::vector<int>> maximal_cones;  // sorted ray sets, sorted

    /// Every cone (all subsets of maximal cones, including the empty cone),
    /// ordered by (size, ray set).
    std::vector<std::vector<int>> cones() const;
};

/// Fan produced by stellar subdivisions of a cone. Each cone is the join of a
/// face of the original cone with some added rays; that keeps faces
/// combinatorial even before the fan becomes simplicial.
class StellarFan {
public:
    struct JoinCone {
        int base = 0;            // face id of the original cone
        std::vector<int> added;  // indices into added_rays(), sorted
        friend auto operator<=>(const JoinCone&, const JoinCone&) = default;
    };

    explicit StellarFan(const PolyhedralCone& cone);

    const PolyhedralCone& cone() const noexcept { return cone_; }
    const std::vector<JoinCone>& maximal_cones() const noexcept { return maximal_; }
    const std::vector<LatticeVector>& added_rays() const noexcept { return added_; }
    const std::vector<int>& added_ray_faces() const noexcept { return added_face_; }

    /// Star subdivision at the barycenter of a face of the original cone.
    /// A ray face is left alone.
    void subdivide(int face);

    /// Original rays come first, then the added rays in the order they were
    /// added. Throws NotSimplicialResult if some maximal cone is not simplicial.
    SimplicialFan to_simplicial() const;

private:
    PolyhedralCone cone_;
    std::vector<JoinCone> maximal_;
    std::vector<LatticeVector> added_;
    std::vector<int> added_face_;
};

/// A simplicial fan together with the map sending each of its cones to the
/// smallest face of the target cone containing it.
struct SubdivisionMap {
    PolyhedralCone target;
    SimplicialFan source;
    std::vector<std::vector<int>> cones;  // SimplicialFan::cones()
    std::vector<int> pushforward;         // per cone, a face id of target

    static SubdivisionMap build(PolyhedralCone target, SimplicialFan source);

    /// Index into `cones`, or -1.
    int find_cone(const std::vector<int>& rays) const;

private:
    std::map<std::vector<int>, int> index_;
};

enum class Barycenter {
    Sum,        // primitive sum of the face's primitive rays
    Perturbed,  // weights 1, 2, 3, ... on the face's rays in order
};

/// One ray per nonzero face, maximal cones indexed by full flags of faces.
/// Ray i is the barycenter of face i + 1 (face ids skip the zero face).
SubdivisionMap barycentric_subdivision(const PolyhedralCone& cone, Barycenter choice = Barycenter::Sum);

/// Star subdivisions at every face of dimension at least 3, largest first.
SubdivisionMap appendix_subdivision(const PolyhedralCone& cone);

/// d_l(tau) = number of cones of dimension l pushed forward to tau.
class MultiplicityTable {
public:
    MultiplicityTable() = default;
    explicit MultiplicityTable(const SubdivisionMap& sub);
    /// Chain counts of a face lattice; equals the table of a barycentric
    /// subdivision of any cone with that lattice.
    static MultiplicityTable from_chain_counts(const FaceLattice& lattice);

    std::int64_t count(int face, int l) const;
    std::size_t num_faces() const noexcept { return counts_.size(); }
    int face_dim(int face) const { return dims_.at(static_cast<std::size_t>(face)); }
    friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;

private:
    std::vector<int> dims_;
    std::vector<std::vector<std::int64_t>> counts_;  // [face][l], l = 0..dim
};

/// Number of chains mu_1 ⊊ ... ⊊ mu_l = tau of nonzero faces (l = 0 counts
/// only the empty chain at the zero face).
std::int64_t chain_count_oracle(const FaceLattice& lattice, int tau, int l);

}  // namespace toricic

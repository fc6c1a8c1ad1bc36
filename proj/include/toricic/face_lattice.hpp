#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace toricic {

/// A face of a cone, identified by the set of extremal rays it contains.
struct Face {
    int id = 0;
    int dim = 0;
    std::vector<int> rays;  // sorted atom indices
};

/// Graded, atomic poset of faces. Ids are assigned by (dim, ray set in
/// lexicographic order), so id 0 is the zero face and the last id is the top.
/// The same type describes intervals [mu, tau] of a larger lattice; `origin`
/// then maps local ids back to the ids of the lattice they were cut from.
class FaceLattice {
public:
    FaceLattice() = default;

    /// `faces` lists (ray set, dimension) pairs; ray sets must be distinct
    /// and include the empty set.
    static FaceLattice from_ray_sets(int num_atoms, std::vector<std::pair<std::vector<int>, int>> faces,
                                     std::vector<int> origin = {});

    std::size_t size() const noexcept { return faces_.size(); }
    const std::vector<Face>& faces() const noexcept { return faces_; }
    const Face& face(int id) const { return faces_.at(static_cast<std::size_t>(id)); }
    int num_atoms() const noexcept { return num_atoms_; }
    int rank() const { return faces_.back().dim; }
    int bottom() const noexcept { return 0; }
    int top() const noexcept { return static_cast<int>(faces_.size()) - 1; }

    bool contains(int lo, int hi) const { return below_[idx(hi)][idx(lo)]; }
    const std::vector<int>& covers_up(int id) const { return up_[idx(id)]; }
    const std::vector<int>& covers_down(int id) const { return down_[idx(id)]; }
    /// All (lo, hi) cover pairs in ascending order.
    std::vector<std::pair<int, int>> cover_pairs() const;

    std::optional<int> find(const std::vector<int>& rays) const;
    int meet(int a, int b) const;
    std::vector<int> faces_of_dim(int dim) const;
    /// Faces contained in `id` (including itself), ascending ids.
    std::vector<int> faces_below(int id) const;
    /// Face whose only ray is atom `atom`.
    int ray_face(int atom) const;

    int origin(int id) const { return origin_[idx(id)]; }

private:
    static std::size_t idx(int id) { return static_cast<std::size_t>(id); }

    int num_atoms_ = 0;
    std::vector<Face> faces_;
    std::map<std::vector<int>, int> by_rays_;
    std::vector<std::vector<bool>> below_;
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<int>> down_;
    std::vector<int> origin_;
};

/// The interval [mu, tau] re-graded so mu has rank 0. Its atoms are the faces
/// covering mu inside tau; as a graded poset it is the face lattice of the
/// image of tau in <tau>/<mu>. Throws NotComparable unless mu ⊆ tau.
FaceLattice quotient_interval(const FaceLattice& lattice, int mu, int tau);

}  // namespace toricic

#include "toricic/face_lattice.hpp"

#include "toricic/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace toricic {

namespace {

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

FaceLattice FaceLattice::from_ray_sets(int num_atoms, std::vector<std::pair<std::vector<int>, int>> faces,
                                       std::vector<int> origin) {
    for (auto& [rays, dim] : faces) std::sort(rays.begin(), rays.end());

    std::vector<std::size_t> order(faces.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (faces[a].second != faces[b].second) return faces[a].second < faces[b].second;
        return faces[a].first < faces[b].first;
    });

    FaceLattice lat;
    lat.num_atoms_ = num_atoms;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& [rays, dim] = faces[order[k]];
        const int id = static_cast<int>(k);
        if (!lat.by_rays_.emplace(rays, id).second) {
            throw Error(ErrorKind::InvariantViolation, "duplicate face in lattice construction");
        }
        lat.faces_.push_back(Face{id, dim, rays});
        lat.origin_.push_back(origin.empty() ? id : origin[order[k]]);
    }
    if (lat.faces_.empty() || !lat.faces_.front().rays.empty()) {
        throw Error(ErrorKind::InvariantViolation, "face lattice without a zero face");
    }
    if (lat.faces_.size() > 1 && lat.faces_[lat.faces_.size() - 2].dim == lat.faces_.back().dim) {
        throw Error(ErrorKind::InvariantViolation, "face lattice without a unique top face");
    }

    const std::size_t n = lat.faces_.size();
    lat.below_.assign(n, std::vector<bool>(n, false));
    lat.up_.assign(n, {});
    lat.down_.assign(n, {});
    for (std::size_t hi = 0; hi < n; ++hi) {
        for (std::size_t lo = 0; lo < n; ++lo) {
            if (lat.faces_[lo].dim > lat.faces_[hi].dim) continue;
            if (!is_subset(lat.faces_[lo].rays, lat.faces_[hi].rays)) continue;
            lat.below_[hi][lo] = true;
            if (lat.faces_[lo].dim + 1 == lat.faces_[hi].dim) {
                lat.up_[lo].push_back(static_cast<int>(hi));
                lat.down_[hi].push_back(static_cast<int>(lo));
            }
        }
    }
    return lat;
}

std::vector<std::pair<int, int>> FaceLattice::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& f : faces_) {
        for (int hi : up_[idx(f.id)]) out.emplace_back(f.id, hi);
    }
    return out;
}

std::optional<int> FaceLattice::find(const std::vector<int>& rays) const {
    auto it = by_rays_.find(rays);
    if (it == by_rays_.end()) return std::nullopt;
    return it->second;
}

int FaceLattice::meet(int a, int b) const {
    std::vector<int> common;
    const auto& ra = face(a).rays;
    const auto& rb = face(b).rays;
    std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(common));
    auto id = find(common);
    if (!id) throw Error(ErrorKind::InvariantViolation, "face lattice is not closed under intersection");
    return *id;
}

std::vector<int> FaceLattice::faces_of_dim(int dim) const {
    std::vector<int> out;
    for (const auto& f : faces_) {
        if (f.dim == dim) out.push_back(f.id);
    }
    return out;
}

std::vector<int> FaceLattice::faces_below(int id) const {
    std::vector<int> out;
    for (std::size_t lo = 0; lo < faces_.size(); ++lo) {
        if (below_[idx(id)][lo]) out.push_back(static_cast<int>(lo));
    }
    return out;
}

int FaceLattice::ray_face(int atom) const {
    auto id = find({atom});
    if (!id) throw Error(ErrorKind::InvariantViolation, "atom " + std::to_string(atom) + " is not a ray face");
    return *id;
}

FaceLattice quotient_interval(const FaceLattice& lattice, int mu, int tau) {
    if (!lattice.contains(mu, tau)) {
        throw Error(ErrorKind::NotComparable,
                    "face " + std::to_string(mu) + " is not contained in face " + std::to_string(tau));
    }
    const int base_dim = lattice.face(mu).dim;

    std::vector<int> members;
    for (const auto& f : lattice.faces()) {
        if (lattice.contains(mu, f.id) && lattice.contains(f.id, tau)) members.push_back(f.id);
    }
    std::vector<int> atoms;
    for (int f : members) {
        if (lattice.face(f).dim == base_dim + 1) atoms.push_back(f);
    }

    std::vector<std::pair<std::vector<int>, int>> faces;
    std::vector<int> origin;
    for (int f : members) {
        std::vector<int> local_rays;
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            if (lattice.contains(atoms[a], f)) local_rays.push_back(static_cast<int>(a));
        }
        faces.emplace_back(std::move(local_rays), lattice.face(f).dim - base_dim);
        origin.push_back(lattice.origin(f));
    }
    return FaceLattice::from_ray_sets(static_cast<int>(atoms.size()), std::move(faces), std::move(origin));
}

}  // namespace toricic

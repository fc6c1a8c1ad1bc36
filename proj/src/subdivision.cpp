#include "toricic/subdivision.hpp"

#include "toricic/error.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace toricic {

std::vector<std::vector<int>> SimplicialFan::cones() const {
    std::set<std::vector<int>> all;
    for (const auto& m : maximal_cones) {
        const std::size_t k = m.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask >> i & 1U) sub.push_back(m[i]);
            }
            all.insert(std::move(sub));
        }
    }
    std::vector<std::vector<int>> out(all.begin(), all.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

namespace {

LatticeVector weighted_sum(const PolyhedralCone& cone, const std::vector<int>& rays, bool perturbed) {
    LatticeVector s(static_cast<std::size_t>(cone.rank()), Integer(0));
    for (std::size_t k = 0; k < rays.size(); ++k) {
        const Integer w = perturbed ? Integer(static_cast<long>(k + 1)) : Integer(1);
        const auto& r = cone.rays()[static_cast<std::size_t>(rays[k])];
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += w * r[i];
    }
    return primitive(std::move(s));
}

}  // namespace

StellarFan::StellarFan(const PolyhedralCone& cone) : cone_(cone) {
    maximal_.push_back(JoinCone{cone_.lattice().top(), {}});
}

void StellarFan::subdivide(int face) {
    const auto& lat = cone_.lattice();
    if (lat.face(face).dim <= 1) return;
    for (int f : added_face_) {
        if (f == face) throw Error(ErrorKind::InvariantViolation, "face already subdivided");
    }
    const int a = static_cast<int>(added_.size());
    added_.push_back(weighted_sum(cone_, lat.face(face).rays, false));
    added_face_.push_back(face);

    std::set<JoinCone> next;
    for (const auto& c : maximal_) {
        if (!lat.contains(face, c.base)) {
            next.insert(c);
            continue;
        }
        for (int g : lat.covers_down(c.base)) {
            if (lat.contains(face, g)) continue;
            JoinCone j{g, c.added};
            j.added.push_back(a);
            std::sort(j.added.begin(), j.added.end());
            next.insert(std::move(j));
        }
    }
    maximal_.assign(next.begin(), next.end());
}

SimplicialFan StellarFan::to_simplicial() const {
    const auto& lat = cone_.lattice();
    SimplicialFan fan;
    fan.rank = cone_.rank();
    fan.rays = cone_.rays();
    for (std::size_t i = 0; i < cone_.rays().size(); ++i) fan.ray_face.push_back(lat.ray_face(static_cast<int>(i)));
    const int offset = static_cast<int>(fan.rays.size());
    for (std::size_t i = 0; i < added_.size(); ++i) {
        fan.rays.push_back(added_[i]);
        fan.ray_face.push_back(added_face_[i]);
    }
    for (const auto& c : maximal_) {
        std::vector<int> rays = lat.face(c.base).rays;
        for (int a : c.added) rays.push_back(offset + a);
        std::sort(rays.begin(), rays.end());
        std::vector<LatticeVector> vs;
        for (int r : rays) vs.push_back(fan.rays[static_cast<std::size_t>(r)]);
        if (rays.size() != static_cast<std::size_t>(fan.rank) || integer_rank(vs) != rays.size()) {
            throw Error(ErrorKind::NotSimplicialResult,
                        "maximal cone with " + std::to_string(rays.size()) + " rays is not simplicial");
        }
        fan.maximal_cones.push_back(std::move(rays));
    }
    std::sort(fan.maximal_cones.begin(), fan.maximal_cones.end());
    return fan;
}

SubdivisionMap SubdivisionMap::build(PolyhedralCone target, SimplicialFan source) {
    SubdivisionMap sub;
    sub.cones = source.cones();
    for (std::size_t i = 0; i < sub.cones.size(); ++i) {
        sub.index_.emplace(sub.cones[i], static_cast<int>(i));
        LatticeVector s(static_cast<std::size_t>(source.rank), Integer(0));
        for (int r : sub.cones[i]) {
            for (std::size_t j = 0; j < s.size(); ++j) s[j] += source.rays[static_cast<std::size_t>(r)][j];
        }
        sub.pushforward.push_back(target.minimal_face_containing(s));
    }
    sub.target = std::move(target);
    sub.source = std::move(source);
    return sub;
}

int SubdivisionMap::find_cone(const std::vector<int>& rays) const {
    auto it = index_.find(rays);
    return it == index_.end() ? -1 : it->second;
}

SubdivisionMap barycentric_subdivision(const PolyhedralCone& cone, Barycenter choice) {
    const auto& lat = cone.lattice();
    SimplicialFan fan;
    fan.rank = cone.rank();
    for (std::size_t f = 1; f < lat.size(); ++f) {
        fan.rays.push_back(weighted_sum(cone, lat.face(static_cast<int>(f)).rays, choice == Barycenter::Perturbed));
        fan.ray_face.push_back(static_cast<int>(f));
    }

    std::vector<int> chain;
    std::function<void(int)> descend = [&](int f) {
        if (lat.face(f).dim == 0) {
            std::vector<int> c = chain;
            std::sort(c.begin(), c.end());
            fan.maximal_cones.push_back(std::move(c));
            return;
        }
        chain.push_back(f - 1);
        for (int g : lat.covers_down(f)) descend(g);
        chain.pop_back();
    };
    descend(lat.top());
    std::sort(fan.maximal_cones.begin(), fan.maximal_cones.end());
    return SubdivisionMap::build(cone, std::move(fan));
}

SubdivisionMap appendix_subdivision(const PolyhedralCone& cone) {
    StellarFan fan(cone);
    const auto& lat = cone.lattice();
    for (int dim = lat.rank(); dim >= 3; --dim) {
        for (int f : lat.faces_of_dim(dim)) fan.subdivide(f);
    }
    return SubdivisionMap::build(cone, fan.to_simplicial());
}

MultiplicityTable::MultiplicityTable(const SubdivisionMap& sub) {
    const auto& lat = sub.target.lattice();
    for (const auto& f : lat.faces()) {
        dims_.push_back(f.dim);
        counts_.emplace_back(static_cast<std::size_t>(f.dim) + 1, 0);
    }
    for (std::size_t i = 0; i < sub.cones.size(); ++i) {
        const auto tau = static_cast<std::size_t>(sub.pushforward[i]);
        const std::size_t l = sub.cones[i].size();
        if (l >= counts_[tau].size()) {
            throw Error(ErrorKind::InvariantViolation, "cone is larger than the face it maps to");
        }
        ++counts_[tau][l];
    }
}

MultiplicityTable MultiplicityTable::from_chain_counts(const FaceLattice& lattice) {
    MultiplicityTable t;
    for (const auto& f : lattice.faces()) {
        t.dims_.push_back(f.dim);
        std::vector<std::int64_t> row(static_cast<std::size_t>(f.dim) + 1, 0);
        if (f.id == 0) {
            row[0] = 1;
        } else {
            row[1] = 1;
            // Faces come in increasing dimension, so lower rows are final.
            for (int mu : lattice.faces_below(f.id)) {
                if (mu == 0 || mu == f.id) continue;
                const auto& lower = t.counts_[static_cast<std::size_t>(mu)];
                for (std::size_t j = 1; j < lower.size(); ++j) row[j + 1] += lower[j];
            }
        }
        t.counts_.push_back(std::move(row));
    }
    return t;
}

std::int64_t MultiplicityTable::count(int face, int l) const {
    const auto& row = counts_.at(static_cast<std::size_t>(face));
    if (l < 0 || static_cast<std::size_t>(l) >= row.size()) return 0;
    return row[static_cast<std::size_t>(l)];
}

std::int64_t chain_count_oracle(const FaceLattice& lattice, int tau, int l) {
    if (tau == lattice.bottom()) return l == 0 ? 1 : 0;
    if (l <= 0) return 0;
    if (l == 1) return 1;
    std::int64_t total = 0;
    for (int mu : lattice.faces_below(tau)) {
        if (mu == lattice.bottom() || mu == tau) continue;
        total += chain_count_oracle(lattice, mu, l - 1);
    }
    return total;
}

}  // namespace toricic

#include "toricic/shelling.hpp"

#include "toricic/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace toricic {

SimplicialComplex::SimplicialComplex(std::vector<Simplex> facets) : facets_(std::move(facets)) {
    for (auto& f : facets_) std::sort(f.begin(), f.end());
    std::sort(facets_.begin(), facets_.end());
    for (const auto& f : facets_) {
        if (f.size() != facets_.front().size()) {
            throw Error(ErrorKind::NotPure, "facets of sizes " + std::to_string(facets_.front().size()) + " and " +
                                                std::to_string(f.size()));
        }
    }
}

SimplicialComplex complex_from_fan(const SimplicialFan& fan) { return SimplicialComplex(fan.maximal_cones); }

namespace {

bool subset_of(const Simplex& a, const Simplex& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Simplex without(const Simplex& f, int v) {
    Simplex out;
    for (int x : f) {
        if (x != v) out.push_back(x);
    }
    return out;
}

// Vertices v of f such that f \ {v} lies in an earlier facet; nullopt when the
// intersection of f with the earlier facets is not a nonempty union of ridges.
std::optional<Simplex> restriction(const Simplex& f, const std::vector<const Simplex*>& earlier) {
    Simplex r;
    for (int v : f) {
        const Simplex ridge = without(f, v);
        for (const auto* e : earlier) {
            if (subset_of(ridge, *e)) {
                r.push_back(v);
                break;
            }
        }
    }
    if (r.empty()) return std::nullopt;
    for (const auto* e : earlier) {
        bool hit = false;
        for (int v : r) {
            if (!std::binary_search(e->begin(), e->end(), v)) {
                hit = true;
                break;
            }
        }
        if (!hit) return std::nullopt;
    }
    return r;
}

}  // namespace

ShellingOrder verify_shelling(const SimplicialComplex& complex, const std::vector<Simplex>& order) {
    std::vector<Simplex> sorted;
    for (auto f : order) {
        std::sort(f.begin(), f.end());
        sorted.push_back(std::move(f));
    }
    {
        auto check = sorted;
        std::sort(check.begin(), check.end());
        if (check != complex.facets()) {
            throw Error(ErrorKind::MalformedInput, "order is not a permutation of the facets");
        }
    }

    ShellingOrder out;
    std::vector<const Simplex*> earlier;
    for (std::size_t j = 0; j < sorted.size(); ++j) {
        const Simplex& f = sorted[j];
        if (j == 0) {
            out.types.push_back(0);
            out.restriction_faces.emplace_back();
        } else {
            auto r = restriction(f, earlier);
            if (!r) {
                throw Error(ErrorKind::NotAShelling,
                            "step " + std::to_string(j) + " does not meet earlier facets in a union of ridges", j);
            }
            out.types.push_back(static_cast<int>(r->size()));
            out.restriction_faces.push_back(std::move(*r));
        }
        out.order.push_back(f);
        earlier.push_back(&sorted[j]);
    }
    return out;
}

ShellingOrder find_shelling(const SimplicialComplex& complex) {
    const auto& facets = complex.facets();
    const std::size_t s = facets.size();
    std::vector<char> placed(s, 0);
    std::vector<std::size_t> order;
    std::set<std::vector<char>> failed;

    std::function<bool()> extend = [&]() -> bool {
        if (order.size() == s) return true;
        if (failed.contains(placed)) return false;
        std::vector<const Simplex*> earlier;
        for (auto i : order) earlier.push_back(&facets[i]);
        for (std::size_t i = 0; i < s; ++i) {
            if (placed[i]) continue;
            if (!order.empty() && !restriction(facets[i], earlier)) continue;
            placed[i] = 1;
            order.push_back(i);
            if (extend()) return true;
            order.pop_back();
            placed[i] = 0;
        }
        failed.insert(placed);
        return false;
    };
    if (!extend()) throw Error(ErrorKind::NoShellingFound, "no shelling order exists");

    std::vector<Simplex> seq;
    for (auto i : order) seq.push_back(facets[i]);
    return verify_shelling(complex, seq);
}

SimplicialComplex barycentric_complex(const FaceLattice& lattice) {
    std::vector<Simplex> facets;
    Simplex chain;
    std::function<void(int)> descend = [&](int f) {
        if (lattice.face(f).dim == 0) {
            facets.push_back(chain);
            return;
        }
        chain.push_back(f - 1);
        for (int g : lattice.covers_down(f)) descend(g);
        chain.pop_back();
    };
    descend(lattice.top());
    return SimplicialComplex(std::move(facets));
}

namespace {

// Shellings of boundary complexes of faces, viewed as polytopes of one
// dimension less. A facet order of face q is a shelling when each new facet
// meets the earlier ones in a nonempty set of its own facets that is itself
// the start of a shelling of its boundary.
class BoundaryShellings {
public:
    explicit BoundaryShellings(const FaceLattice& lattice) : lat_(lattice) {}

    // Shelling of the facets of q whose first |prefix| entries are the facets
    // in `prefix` (sorted ids), in some order.
    std::optional<std::vector<int>> shell(int q, const std::vector<int>& prefix) {
        const auto key = std::make_pair(q, prefix);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;

        std::optional<std::vector<int>> result;
        const auto& facets = lat_.covers_down(q);
        if (lat_.face(q).dim <= 2) {
            // Points: every order shells.
            std::vector<int> order = prefix;
            for (int g : facets) {
                if (!std::binary_search(prefix.begin(), prefix.end(), g)) order.push_back(g);
            }
            result = std::move(order);
        } else {
            std::vector<int> order;
            std::set<std::vector<int>> failed;
            if (search(q, prefix, order, failed)) result = std::move(order);
        }
        cache_.emplace(key, result);
        return result;
    }

    // Facets of g lying in some facet in `earlier`, or nullopt when placing g
    // after `earlier` breaks the shelling condition.
    std::optional<std::vector<int>> new_prefix(int g, const std::vector<int>& earlier) {
        std::vector<int> s;
        for (int r : lat_.covers_down(g)) {
            for (int e : earlier) {
                if (lat_.contains(r, e)) {
                    s.push_back(r);
                    break;
                }
            }
        }
        std::sort(s.begin(), s.end());
        if (earlier.empty()) return s;
        if (s.empty()) return std::nullopt;
        for (int e : earlier) {
            const int m = lat_.meet(g, e);
            if (m == lat_.bottom()) continue;
            if (std::none_of(s.begin(), s.end(), [&](int r) { return lat_.contains(m, r); })) return std::nullopt;
        }
        if (!shell(g, s)) return std::nullopt;
        return s;
    }

private:
    bool search(int q, const std::vector<int>& prefix, std::vector<int>& order, std::set<std::vector<int>>& failed) {
        const auto& facets = lat_.covers_down(q);
        if (order.size() == facets.size()) return true;
        std::vector<int> placed = order;
        std::sort(placed.begin(), placed.end());
        if (failed.contains(placed)) return false;
        const bool in_prefix = order.size() < prefix.size();
        for (int g : facets) {
            if (std::find(order.begin(), order.end(), g) != order.end()) continue;
            if (in_prefix != std::binary_search(prefix.begin(), prefix.end(), g)) continue;
            if (!new_prefix(g, order)) continue;
            order.push_back(g);
            if (search(q, prefix, order, failed)) return true;
            order.pop_back();
        }
        failed.insert(std::move(placed));
        return false;
    }

    const FaceLattice& lat_;
    std::map<std::pair<int, std::vector<int>>, std::optional<std::vector<int>>> cache_;
};

}  // namespace

ShellingOrder lexicographic_shelling(const FaceLattice& lattice) {
    const SimplicialComplex complex = barycentric_complex(lattice);
    if (lattice.rank() <= 1) return verify_shelling(complex, complex.facets());

    BoundaryShellings shellings(lattice);
    std::vector<Simplex> order;
    Simplex chain;

    // Emits the flags below `q` given the order of its facets.
    std::function<void(int, const std::vector<int>&)> emit = [&](int q, const std::vector<int>& facet_order) {
        chain.push_back(q - 1);
        std::vector<int> earlier;
        for (int g : facet_order) {
            if (lattice.face(g).dim == 0) {
                Simplex s = chain;
                std::sort(s.begin(), s.end());
                order.push_back(std::move(s));
                continue;
            }
            auto prefix = shellings.new_prefix(g, earlier);
            if (!prefix) {
                throw Error(ErrorKind::ShellingSearchFailed,
                            "face " + std::to_string(g) + " does not continue the boundary shelling");
            }
            auto sub = shellings.shell(g, *prefix);
            if (!sub) {
                throw Error(ErrorKind::ShellingSearchFailed,
                            "no boundary shelling of face " + std::to_string(g) + " with the required start");
            }
            emit(g, *sub);
            earlier.push_back(g);
        }
        chain.pop_back();
    };

    auto top = shellings.shell(lattice.top(), {});
    if (!top) throw Error(ErrorKind::ShellingSearchFailed, "no shelling of the boundary of the top face");
    emit(lattice.top(), *top);
    return verify_shelling(complex, order);
}

}  // namespace toricic

#include "toricic/cone.hpp"

#include "toricic/error.hpp"
#include "toricic/exact_linalg.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace toricic {

LatticeVector primitive(LatticeVector v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0 || g == 1) return v;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

Integer pairing(const LatticeVector& a, const LatticeVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::size_t integer_rank(const std::vector<LatticeVector>& vectors) {
    if (vectors.empty()) return 0;
    IntMatrix m(vectors.size(), vectors.front().size());
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = vectors[r][c];
    }
    return m.cols() == 0 ? 0 : rank_serial(std::move(m));
}

namespace {

// Columns of the inverse of the square matrix whose rows are `rows`, scaled to
// primitive integer vectors.
std::vector<LatticeVector> inverse_columns(const std::vector<LatticeVector>& rows) {
    const std::size_t n = rows.size();
    RationalMatrix m(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
        m(r, n + r) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (m(p, c) == 0) ++p;
        m.swap_rows(p, c);
        const Rational inv = 1 / m(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) m(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    std::vector<LatticeVector> cols;
    for (std::size_t j = 0; j < n; ++j) {
        Integer den = 1;
        for (std::size_t i = 0; i < n; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, n + j).get_den_mpz_t());
        LatticeVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = m(i, n + j).get_num() * (den / m(i, n + j).get_den());
        cols.push_back(primitive(std::move(v)));
    }
    return cols;
}

struct Generator {
    LatticeVector v;
    std::vector<char> zero;  // zero[k]: vanishes on constraint k
};

}  // namespace

std::vector<LatticeVector> dual_cone(int rank, const std::vector<LatticeVector>& rays) {
    const auto n = static_cast<std::size_t>(rank);
    for (const auto& r : rays) {
        if (r.size() != n) throw Error(ErrorKind::MalformedInput, "ray length does not match the rank");
    }
    if (n == 0) return {};
    if (integer_rank(rays) < n) {
        throw Error(ErrorKind::NotFullDimensional,
                    "rays span a proper subspace; restrict the lattice to their span first");
    }

    // Greedy choice of n independent rays; they are processed first.
    std::vector<std::size_t> order;
    std::vector<LatticeVector> basis;
    for (std::size_t i = 0; i < rays.size() && basis.size() < n; ++i) {
        basis.push_back(rays[i]);
        if (integer_rank(basis) < basis.size()) {
            basis.pop_back();
        } else {
            order.push_back(i);
        }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
    }

    const std::size_t m = rays.size();
    std::vector<Generator> gens;
    for (auto& col : inverse_columns(basis)) {
        Generator g{std::move(col), std::vector<char>(m, 0)};
        for (std::size_t k = 0; k < n; ++k) g.zero[k] = pairing(g.v, rays[order[k]]) == 0;
        gens.push_back(std::move(g));
    }

    for (std::size_t k = n; k < m; ++k) {
        const auto& r = rays[order[k]];
        std::vector<Integer> val(gens.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Generator> next;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            val[i] = pairing(gens[i].v, r);
            const int s = sgn(val[i]);
            if (s > 0) pos.push_back(i);
            if (s < 0) neg.push_back(i);
            if (s >= 0) {
                Generator g = gens[i];
                g.zero[k] = s == 0;
                next.push_back(std::move(g));
            }
        }
        for (auto p : pos) {
            for (auto q : neg) {
                std::vector<char> common(m, 0);
                for (std::size_t c = 0; c < k; ++c) common[c] = gens[p].zero[c] && gens[q].zero[c];
                bool adjacent = true;
                for (std::size_t g = 0; g < gens.size() && adjacent; ++g) {
                    if (g == p || g == q) continue;
                    bool covers = true;
                    for (std::size_t c = 0; c < k && covers; ++c) {
                        if (common[c] && !gens[g].zero[c]) covers = false;
                    }
                    if (covers) adjacent = false;
                }
                if (!adjacent) continue;
                LatticeVector w(n);
                for (std::size_t j = 0; j < n; ++j) w[j] = val[p] * gens[q].v[j] - val[q] * gens[p].v[j];
                Generator g{primitive(std::move(w)), std::move(common)};
                g.zero[k] = 1;
                next.push_back(std::move(g));
            }
        }
        gens = std::move(next);
    }

    std::vector<LatticeVector> normals;
    for (auto& g : gens) normals.push_back(std::move(g.v));
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    if (integer_rank(normals) < n) {
        throw Error(ErrorKind::NotStronglyConvex, "the cone contains a line");
    }
    return normals;
}

PolyhedralCone PolyhedralCone::from_rays(int rank, const std::vector<LatticeVector>& generators) {
    if (rank < 0) throw Error(ErrorKind::MalformedInput, "negative rank");
    std::vector<LatticeVector> prim;
    for (const auto& g : generators) {
        if (g.size() != static_cast<std::size_t>(rank)) {
            throw Error(ErrorKind::MalformedInput, "ray length does not match the rank");
        }
        auto p = primitive(g);
        if (std::all_of(p.begin(), p.end(), [](const Integer& x) { return x == 0; })) {
            throw Error(ErrorKind::MalformedInput, "zero ray generator");
        }
        if (std::find(prim.begin(), prim.end(), p) == prim.end()) prim.push_back(std::move(p));
    }

    PolyhedralCone cone;
    cone.rank_ = rank;
    if (rank == 0) {
        cone.lattice_ = FaceLattice::from_ray_sets(0, {{{}, 0}});
        return cone;
    }
    cone.normals_ = dual_cone(rank, prim);

    // A generator is extremal when the normals vanishing on it have rank n - 1.
    for (const auto& p : prim) {
        std::vector<LatticeVector> vanishing;
        for (const auto& u : cone.normals_) {
            if (pairing(u, p) == 0) vanishing.push_back(u);
        }
        if (integer_rank(vanishing) + 1 == static_cast<std::size_t>(rank)) cone.rays_.push_back(p);
    }

    const std::size_t m = cone.rays_.size();
    std::vector<int> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<int>(i);

    std::vector<std::vector<int>> facets;
    for (const auto& u : cone.normals_) {
        std::vector<int> f;
        for (std::size_t i = 0; i < m; ++i) {
            if (pairing(u, cone.rays_[i]) == 0) f.push_back(static_cast<int>(i));
        }
        facets.push_back(std::move(f));
    }

    // Every face is an intersection of facets.
    std::set<std::vector<int>> seen{all};
    std::deque<std::vector<int>> queue{all};
    while (!queue.empty()) {
        auto cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& f : facets) {
            std::vector<int> meet;
            std::set_intersection(cur.begin(), cur.end(), f.begin(), f.end(), std::back_inserter(meet));
            if (seen.insert(meet).second) queue.push_back(std::move(meet));
        }
    }

    std::vector<std::pair<std::vector<int>, int>> faces;
    for (const auto& s : seen) {
        std::vector<LatticeVector> vs;
        for (int i : s) vs.push_back(cone.rays_[static_cast<std::size_t>(i)]);
        faces.emplace_back(s, static_cast<int>(integer_rank(vs)));
    }
    cone.lattice_ = FaceLattice::from_ray_sets(static_cast<int>(m), std::move(faces));
    return cone;
}

std::vector<int> PolyhedralCone::normals_containing(int face) const {
    std::vector<int> out;
    const auto& rays = lattice_.face(face).rays;
    for (std::size_t j = 0; j < normals_.size(); ++j) {
        bool vanishes = true;
        for (int r : rays) {
            if (pairing(normals_[j], rays_[static_cast<std::size_t>(r)]) != 0) {
                vanishes = false;
                break;
            }
        }
        if (vanishes) out.push_back(static_cast<int>(j));
    }
    return out;
}

int PolyhedralCone::minimal_face_containing(const LatticeVector& point) const {
    std::vector<int> rays;
    for (std::size_t i = 0; i < rays_.size(); ++i) rays.push_back(static_cast<int>(i));
    for (const auto& u : normals_) {
        const Integer v = pairing(u, point);
        if (v < 0) throw Error(ErrorKind::InvariantViolation, "point lies outside the cone");
        if (v != 0) continue;
        std::erase_if(rays, [&](int r) { return pairing(u, rays_[static_cast<std::size_t>(r)]) != 0; });
    }
    auto id = lattice_.find(rays);
    if (!id) throw Error(ErrorKind::InvariantViolation, "zero set of normals is not a face");
    return *id;
}

bool is_valid_degree(const PolyhedralCone& cone, const DegreeVector& degree) {
    if (degree.u.size() != static_cast<std::size_t>(cone.rank())) return false;
    const auto& in_face = cone.lattice().face(degree.face).rays;
    for (std::size_t i = 0; i < cone.rays().size(); ++i) {
        const int s = sgn(pairing(degree.u, cone.rays()[i]));
        const bool inside = std::binary_search(in_face.begin(), in_face.end(), static_cast<int>(i));
        if (inside ? s != 0 : s <= 0) return false;
    }
    return true;
}

DegreeVector pick_degree(const PolyhedralCone& cone, int face) {
    const auto n = static_cast<std::size_t>(cone.rank());
    const auto containing = cone.normals_containing(face);
    DegreeVector d{LatticeVector(n, Integer(0)), face};
    for (int j : containing) {
        for (std::size_t i = 0; i < n; ++i) d.u[i] += cone.facet_normals()[static_cast<std::size_t>(j)][i];
    }
    if (is_valid_degree(cone, d)) return d;

    // Fallback: coefficients 0..3 on the containing normals.
    std::vector<int> coeff(containing.size(), 0);
    while (true) {
        std::size_t k = 0;
        while (k < coeff.size() && coeff[k] == 3) coeff[k++] = 0;
        if (k == coeff.size()) break;
        ++coeff[k];
        DegreeVector c{LatticeVector(n, Integer(0)), face};
        for (std::size_t j = 0; j < containing.size(); ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                c.u[i] += coeff[j] * cone.facet_normals()[static_cast<std::size_t>(containing[j])][i];
            }
        }
        if (is_valid_degree(cone, c)) return c;
    }
    throw Error(ErrorKind::DegenerateSelection, "no valid degree found for face " + std::to_string(face));
}

std::vector<DegreeVector> pick_degrees(const PolyhedralCone& cone, int face) {
    std::vector<DegreeVector> out{pick_degree(cone, face)};
    const LatticeVector base = out.front().u;
    for (int j : cone.normals_containing(face)) {
        DegreeVector d{base, face};
        for (std::size_t i = 0; i < d.u.size(); ++i) d.u[i] += cone.facet_normals()[static_cast<std::size_t>(j)][i];
        if (is_valid_degree(cone, d) &&
            std::none_of(out.begin(), out.end(), [&](const DegreeVector& e) { return e.u == d.u; })) {
            out.push_back(std::move(d));
        }
    }
    return out;
}

int face_of_degree(const PolyhedralCone& cone, const LatticeVector& u) {
    if (u.size() != static_cast<std::size_t>(cone.rank())) {
        throw Error(ErrorKind::DegreeMismatch, "degree has the wrong length");
    }
    std::vector<int> zero;
    for (std::size_t i = 0; i < cone.rays().size(); ++i) {
        const int s = sgn(pairing(u, cone.rays()[i]));
        if (s < 0) throw Error(ErrorKind::DegreeMismatch, "degree is negative on a ray of the cone");
        if (s == 0) zero.push_back(static_cast<int>(i));
    }
    auto id = cone.lattice().find(zero);
    if (!id) throw Error(ErrorKind::DegreeMismatch, "degree does not cut out a face");
    return *id;
}

}  // namespace toricic

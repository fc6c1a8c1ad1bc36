#include "support.hpp"

#include "toricic/decomposition.hpp"
#include "toricic/error.hpp"
#include "toricic/ishida.hpp"
#include "toricic/subdivision.hpp"

#include <catch_amalgamated.hpp>

using namespace testing;

namespace {

// Number of chains 0 ≠ mu_1 ⊊ ... ⊊ mu_l = tau, recounted by enumerating
// strictly increasing face sequences (ids grow with dimension).
std::int64_t enumerate_chains(const FaceLattice& lat, int tau, int l) {
    if (l == 0) return tau == lat.bottom() ? 1 : 0;
    std::int64_t total = 0;
    std::vector<int> chain;
    auto rec = [&](auto&& self, int last) -> void {
        if (static_cast<int>(chain.size()) == l - 1) {
            if (last == -1 || (last != tau && lat.contains(last, tau))) ++total;
            return;
        }
        for (int f = last + 1; f < tau; ++f) {
            if (f == lat.bottom()) continue;
            if (last != -1 && !lat.contains(last, f)) continue;
            if (!lat.contains(f, tau)) continue;
            chain.push_back(f);
            self(self, f);
            chain.pop_back();
        }
    };
    if (tau == lat.bottom()) return 0;
    rec(rec, -1);
    return total;
}

}  // namespace

TEST_CASE("barycentric subdivision of the cone over a square") {
    const auto sub = barycentric_subdivision(cone_of(corpus_cone("square")));
    CHECK(sub.source.rays.size() == 9);
    CHECK(sub.source.maximal_cones.size() == 8);
    const MultiplicityTable d(sub);
    const int top = sub.target.lattice().top();
    CHECK(d.count(top, 1) == 1);
    CHECK(d.count(top, 2) == 8);
    CHECK(d.count(top, 3) == 8);
}

TEST_CASE("barycentric subdivision of a simplicial 2-cone") {
    const auto sub = barycentric_subdivision(cone_of(orthant(2)));
    CHECK(sub.source.rays.size() == 3);
    CHECK(sub.source.maximal_cones.size() == 2);
}

TEST_CASE("barycentric multiplicities on low-dimensional faces") {
    const auto cone = cone_of(cube_cone());
    const MultiplicityTable d(barycentric_subdivision(cone));
    for (const auto& f : cone.lattice().faces()) {
        if (f.dim == 1) {
            CHECK(d.count(f.id, 0) == 0);
            CHECK(d.count(f.id, 1) == 1);
        }
        if (f.dim == 2) {
            CHECK(d.count(f.id, 1) == 1);
            CHECK(d.count(f.id, 2) == 2);
        }
    }
    CHECK(d.count(cone.lattice().top(), 2) == 26);
}

TEST_CASE("chain counts by three methods") {
    for (const auto& spec : builtin_corpus()) {
        INFO(spec.name);
        const auto cone = cone_of(spec);
        const auto& lat = cone.lattice();
        const MultiplicityTable d(barycentric_subdivision(cone));
        CHECK(d == MultiplicityTable::from_chain_counts(lat));
        for (const auto& f : lat.faces()) {
            for (int l = 0; l <= f.dim; ++l) {
                CHECK(chain_count_oracle(lat, f.id, l) == enumerate_chains(lat, f.id, l));
                CHECK(d.count(f.id, l) == enumerate_chains(lat, f.id, l));
            }
        }
    }
}

TEST_CASE("barycentric recursion d_j(tau) = sum of d_{j-1}(mu) over proper nonzero mu") {
    for (const auto& spec : builtin_corpus()) {
        const auto cone = cone_of(spec);
        const auto& lat = cone.lattice();
        const MultiplicityTable d(barycentric_subdivision(cone));
        for (const auto& f : lat.faces()) {
            if (f.id == lat.bottom()) continue;
            CHECK(d.count(f.id, 1) == 1);
            for (int j = 2; j <= f.dim; ++j) {
                std::int64_t sum = 0;
                for (int mu : lat.faces_below(f.id)) {
                    if (mu != lat.bottom() && mu != f.id) sum += d.count(mu, j - 1);
                }
                CHECK(d.count(f.id, j) == sum);
            }
        }
    }
}

TEST_CASE("star subdivisions") {
    const auto square = cone_of(corpus_cone("square"));
    StellarFan fan(square);
    fan.subdivide(square.lattice().top());
    const auto simplicial = fan.to_simplicial();
    CHECK(simplicial.maximal_cones.size() == 4);
    CHECK(simplicial.rays.size() == 5);

    StellarFan unchanged(square);
    unchanged.subdivide(square.lattice().ray_face(0));
    CHECK(unchanged.added_rays().empty());
    CHECK(unchanged.maximal_cones().size() == 1);

    StellarFan raw(square);
    CHECK_THROWS_AS(raw.to_simplicial(), Error);
}

TEST_CASE("star subdivision of 3-dim cones has d = (1, v, v)") {
    for (int m = 3; m <= 8; ++m) {
        const auto cone = cone_of(m_gon_cone(m));
        const MultiplicityTable d(appendix_subdivision(cone));
        const int top = cone.lattice().top();
        CHECK(d.count(top, 0) == 0);
        CHECK(d.count(top, 1) == 1);
        CHECK(d.count(top, 2) == m);
        CHECK(d.count(top, 3) == m);
    }
}

TEST_CASE("star subdivision of 4-dim cones") {
    for (const auto& spec : {cube_cone(), octahedron_cone(), square_pyramid_cone(), triangular_prism_cone(), orthant(4)}) {
        INFO(spec.name);
        const auto cone = cone_of(spec);
        const auto& lat = cone.lattice();
        const MultiplicityTable d(appendix_subdivision(cone));
        const std::int64_t e = static_cast<std::int64_t>(lat.faces_of_dim(2).size());
        std::int64_t sum_n = 0;
        for (int t : lat.faces_of_dim(3)) sum_n += static_cast<std::int64_t>(lat.face(t).rays.size());
        CHECK(sum_n == 2 * e);
        const int top = lat.top();
        CHECK(d.count(top, 1) == 1);
        CHECK(d.count(top, 2) == e + 2);
        CHECK(d.count(top, 3) == sum_n + e);
        CHECK(d.count(top, 4) == 2 * e);
    }
}

TEST_CASE("pushforward sends each cone to the smallest face containing it") {
    for (const auto& spec : builtin_corpus()) {
        const auto cone = cone_of(spec);
        for (const auto& sub : {barycentric_subdivision(cone), appendix_subdivision(cone)}) {
            const auto& lat = sub.target.lattice();
            for (std::size_t i = 0; i < sub.cones.size(); ++i) {
                LatticeVector sum(static_cast<std::size_t>(sub.target.rank()), Integer(0));
                for (int r : sub.cones[i]) {
                    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += sub.source.rays[static_cast<std::size_t>(r)][k];
                }
                CHECK(sub.pushforward[i] == sub.target.minimal_face_containing(sum));
                for (int r : sub.cones[i]) CHECK(lat.contains(sub.source.ray_face[static_cast<std::size_t>(r)], sub.pushforward[i]));
            }
        }
    }
}

TEST_CASE("perturbed barycenters change the fan but not its invariants") {
    for (const auto& name : {"square", "pentagon", "cube", "square_pyramid"}) {
        INFO(name);
        const auto cone = cone_of(corpus_cone(name));
        const auto plain = barycentric_subdivision(cone, Barycenter::Sum);
        const auto perturbed = barycentric_subdivision(cone, Barycenter::Perturbed);
        CHECK(plain.source.rays != perturbed.source.rays);
        CHECK(MultiplicityTable(plain) == MultiplicityTable(perturbed));
        const auto& lat = cone.lattice();
        const auto a = solve_decomposition(lat, MultiplicityTable(plain));
        const auto b = solve_decomposition(lat, MultiplicityTable(perturbed));
        CHECK(a.D == b.D);
        CHECK(a.Htilde == b.Htilde);
        for (const auto& f : lat.faces()) {
            CHECK(omega_oracle(plain, f.id) == omega_oracle(perturbed, f.id));
        }
    }
}

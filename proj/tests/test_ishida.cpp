#include "support.hpp"

#include "toricic/error.hpp"
#include "toricic/ishida.hpp"

#include <catch_amalgamated.hpp>

using namespace testing;

namespace {

std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Term dimensions from the definition: cones of dimension l inside the face
// cut out by u, each carrying the (p - l)-th exterior power of an
// (n - l)-dimensional space.
std::vector<std::size_t> expected_dims(const SubdivisionMap& sub, int p, const DegreeVector& u) {
    const int n = sub.target.rank();
    std::vector<std::size_t> dims(static_cast<std::size_t>(p) + 1, 0);
    for (const auto& c : sub.cones) {
        const int l = static_cast<int>(c.size());
        if (l > p) continue;
        bool inside = true;
        for (int r : c) inside = inside && pairing(u.u, sub.source.rays[static_cast<std::size_t>(r)]) == 0;
        if (inside) dims[static_cast<std::size_t>(l)] += static_cast<std::size_t>(binom(n - l, p - l));
    }
    return dims;
}

// L^{-n}(1+K^{-1}L)^{n-d} F(L K^{-1/2}) with F from chain counts.
BiLaurentPolynomial omega_reference(const FaceLattice& lat, int tau, int n) {
    const int d = lat.face(tau).dim;
    BiLaurentPolynomial fiber;
    // q^2 - 1 -> L^2 K^{-1} - 1
    const auto x = bl({{-2, 2, 1}, {0, 0, -1}});
    for (int l = 0; l <= d; ++l) fiber += x.pow(static_cast<unsigned>(d - l)) * Rational(chain_count_oracle(lat, tau, l));
    return bl({{0, -n, 1}}) * bl({{0, 0, 1}, {-2, 1, 1}}).pow(static_cast<unsigned>(n - d)) * fiber;
}

}  // namespace

TEST_CASE("form degree zero is a single scalar term") {
    const auto sub = barycentric_subdivision(cone_of(corpus_cone("square")));
    for (const auto& f : sub.target.lattice().faces()) {
        const auto c = build_degree_u_complex(sub, 0, pick_degree(sub.target, f.id));
        REQUIRE(c.dims.size() >= 1);
        CHECK(c.dims[0] == 1);
        for (std::size_t i = 1; i < c.dims.size(); ++i) CHECK(c.dims[i] == 0);
    }
}

TEST_CASE("term dimensions for the square cone") {
    const auto sub = barycentric_subdivision(cone_of(corpus_cone("square")));
    const auto& lat = sub.target.lattice();
    const auto c = build_degree_u_complex(sub, 1, pick_degree(sub.target, lat.top()));
    CHECK(c.dims == std::vector<std::size_t>{3, 9});
    CHECK(cohomology_dims(c) == std::vector<std::size_t>{0, 6});

    const auto two_face = *lat.find({0, 1});
    CHECK(build_degree_u_complex(sub, 1, pick_degree(sub.target, two_face)).dims == std::vector<std::size_t>{3, 3});
}

TEST_CASE("term dimensions match the definition") {
    for (const auto& name : {"orthant3", "square", "hexagon", "cube", "octahedron"}) {
        const auto sub = barycentric_subdivision(cone_of(corpus_cone(name)));
        const int n = sub.target.rank();
        for (const auto& f : sub.target.lattice().faces()) {
            const auto u = pick_degree(sub.target, f.id);
            for (int p = 0; p <= n; ++p) {
                const auto c = build_degree_u_complex(sub, p, u);
                auto dims = c.dims;
                dims.resize(static_cast<std::size_t>(p) + 1, 0);
                CHECK(dims == expected_dims(sub, p, u));
            }
        }
    }
}

TEST_CASE("differentials compose to zero") {
    for (const auto& name : {"square", "cube"}) {
        const auto sub = barycentric_subdivision(cone_of(corpus_cone(name)));
        const auto u = pick_degree(sub.target, 0);
        for (int p = 1; p <= sub.target.rank(); ++p) {
            const auto c = build_degree_u_complex(sub, p, u);
            for (std::size_t i = 0; i + 1 < c.differentials.size(); ++i) {
                CHECK(multiply(c.differentials[i + 1], c.differentials[i]).is_zero());
            }
        }
    }
}

TEST_CASE("cohomology of a complex with zero maps") {
    RationalChainComplex c;
    c.dims = {3, 9};
    c.differentials = {RationalMatrix(9, 3)};
    CHECK(cohomology_dims(c) == std::vector<std::size_t>{3, 9});
}

TEST_CASE("invalid degree is rejected") {
    const auto sub = barycentric_subdivision(cone_of(corpus_cone("square")));
    DegreeVector bad{{Integer(-1), Integer(0), Integer(0)}, 0};
    try {
        build_degree_u_complex(sub, 1, bad);
        FAIL("accepted a degree outside the dual cone");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegreeMismatch);
    }
}

TEST_CASE("grading-zero complexes are exact outside position p") {
    for (const auto& spec : builtin_corpus()) {
        INFO(spec.name);
        const auto sub = barycentric_subdivision(cone_of(spec));
        const int n = sub.target.rank();
        const auto u = pick_degree(sub.target, sub.target.lattice().top());
        for (int p = 1; p <= n; ++p) {
            const auto h = cohomology_dims(build_degree_u_complex(sub, p, u));
            for (std::size_t i = 0; i < h.size(); ++i) {
                if (static_cast<int>(i) != p) CHECK(h[i] == 0);
            }
        }
    }
}

TEST_CASE("omega examples") {
    const auto square = barycentric_subdivision(cone_of(corpus_cone("square")));
    const int top = square.target.lattice().top();
    CHECK(omega_oracle(square, 0) == bl({{0, -3, 1}}) * bl({{0, 0, 1}, {-2, 1, 1}}).pow(3));
    CHECK(omega_oracle(square, top) == bl({{-4, 1, 1}, {-2, -1, 6}, {0, -3, 1}}));

    const auto simplex = barycentric_subdivision(cone_of(orthant(3)));
    const auto q2m1 = lp({{2, 1}, {0, -1}});
    const auto fiber = q2m1.pow(2) + q2m1 * Rational(6) + LaurentPolynomial::constant(6);
    CHECK(omega_oracle(simplex, simplex.target.lattice().top()) ==
          bl({{0, -3, 1}}) * laurent_eval_substitute(fiber, BiMonomial{1, -1, 1}));
}

TEST_CASE("oracle and both closed forms agree on every corpus face") {
    for (const auto& spec : builtin_corpus()) {
        INFO(spec.name);
        const auto sub = barycentric_subdivision(cone_of(spec));
        const auto& lat = sub.target.lattice();
        const int n = sub.target.rank();
        const MultiplicityTable d(sub);
        for (const auto& f : lat.faces()) {
            const auto reference = omega_reference(lat, f.id, n);
            CHECK(omega_closed_form(lat, d, f.id, n) == reference);
            CHECK(omega_oracle(sub, f.id) == reference);
        }
    }
}

TEST_CASE("omega does not depend on the chosen degree") {
    for (const auto& name : {"square", "hexagon", "cube"}) {
        const auto sub = barycentric_subdivision(cone_of(corpus_cone(name)));
        for (const auto& f : sub.target.lattice().faces()) {
            const auto degrees = pick_degrees(sub.target, f.id);
            if (f.id != sub.target.lattice().top()) CHECK(degrees.size() >= 2);
            for (const auto& u : degrees) CHECK(omega_oracle(sub, f.id, ExecutionPolicy::Serial, u) == omega_oracle(sub, f.id));
        }
    }
}

TEST_CASE("serial and parallel oracles agree") {
    for (const auto& name : {"octagon", "cube", "triangular_prism"}) {
        const auto sub = barycentric_subdivision(cone_of(corpus_cone(name)));
        for (const auto& f : sub.target.lattice().faces()) {
            CHECK(omega_oracle(sub, f.id, ExecutionPolicy::Serial) == omega_oracle(sub, f.id, ExecutionPolicy::Parallel));
        }
    }
}

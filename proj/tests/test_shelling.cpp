#include "support.hpp"

#include "toricic/error.hpp"
#include "toricic/shelling.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace testing;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::MalformedInput;
}

// Shelling in the intersection sense: for j > 0 the maximal members of
// {F_i ∩ F_j : i < j} all have one vertex fewer than F_j.
bool is_shelling_by_intersections(const std::vector<Simplex>& order) {
    for (std::size_t j = 1; j < order.size(); ++j) {
        std::vector<Simplex> meets;
        for (std::size_t i = 0; i < j; ++i) {
            Simplex m;
            std::set_intersection(order[i].begin(), order[i].end(), order[j].begin(), order[j].end(), std::back_inserter(m));
            meets.push_back(m);
        }
        for (const auto& m : meets) {
            const bool maximal = std::none_of(meets.begin(), meets.end(), [&](const Simplex& o) {
                return o.size() > m.size() && std::includes(o.begin(), o.end(), m.begin(), m.end());
            });
            if (maximal && m.size() + 1 != order[j].size()) return false;
        }
    }
    return true;
}

const std::vector<Simplex> bowtie{{0, 1, 2}, {2, 3, 4}};

}  // namespace

TEST_CASE("complexes from fans") {
    const auto square = cone_of(corpus_cone("square"));
    const auto bary = complex_from_fan(barycentric_subdivision(square).source);
    CHECK(bary.facets().size() == 8);
    CHECK(bary.facet_size() == 3);
    std::set<int> vertices;
    for (const auto& f : bary.facets()) vertices.insert(f.begin(), f.end());
    CHECK(vertices.size() == 9);

    CHECK(complex_from_fan(barycentric_subdivision(cone_of(orthant(3))).source).facets().size() == 6);
    CHECK(complex_from_fan(appendix_subdivision(square).source).facets().size() == 4);
    CHECK(barycentric_complex(cone_of(cube_cone()).lattice()).facets().size() == 48);
}

TEST_CASE("mixed facet sizes are rejected") {
    CHECK(kind_of([] { SimplicialComplex({{0, 1, 2}, {3, 4}}); }) == ErrorKind::NotPure);
}

TEST_CASE("verification of given orders") {
    const SimplicialComplex single({{0, 1, 2}});
    CHECK(verify_shelling(single, {{0, 1, 2}}).types == std::vector<int>{0});

    const SimplicialComplex bow(bowtie);
    try {
        verify_shelling(bow, bowtie);
        FAIL("accepted a non-shelling");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAShelling);
        CHECK(e.index() == 1);
    }
    try {
        verify_shelling(bow, {bowtie[1], bowtie[0]});
        FAIL("accepted a non-shelling");
    } catch (const Error& e) {
        CHECK(e.index() == 1);
    }
    CHECK(kind_of([&] { verify_shelling(bow, {bowtie[0]}); }) == ErrorKind::MalformedInput);
    CHECK(kind_of([&] { verify_shelling(bow, {bowtie[0], bowtie[0]}); }) == ErrorKind::MalformedInput);
}

TEST_CASE("verifier agrees with the intersection definition on random orders") {
    std::mt19937 rng(31);
    for (const auto& name : {"square", "pentagon", "orthant3"}) {
        const auto complex = complex_from_fan(barycentric_subdivision(cone_of(corpus_cone(name))).source);
        auto order = complex.facets();
        int rejected = 0;
        for (int trial = 0; trial < 300; ++trial) {
            std::shuffle(order.begin(), order.end(), rng);
            bool ok = true;
            try {
                verify_shelling(complex, order);
            } catch (const Error& e) {
                REQUIRE(e.kind() == ErrorKind::NotAShelling);
                ok = false;
            }
            CHECK(ok == is_shelling_by_intersections(order));
            if (!ok) ++rejected;
        }
        CHECK(rejected > 0);
        // Accepting side: a known shelling.
        const auto sh = find_shelling(complex);
        CHECK_NOTHROW(verify_shelling(complex, sh.order));
        CHECK(is_shelling_by_intersections(sh.order));
    }
}

TEST_CASE("types count earlier neighbors and restriction faces are new") {
    const auto sh = lexicographic_shelling(cone_of(corpus_cone("square")).lattice());
    REQUIRE(sh.order.size() == 8);
    CHECK(std::count(sh.types.begin(), sh.types.end(), 0) == 1);
    for (std::size_t j = 0; j < sh.order.size(); ++j) {
        CHECK(sh.types[j] >= 0);
        CHECK(sh.types[j] <= 2);
        CHECK(static_cast<int>(sh.restriction_faces[j].size()) == sh.types[j]);
    }
    CHECK(sh.restriction_faces[0].empty());
}

TEST_CASE("search finds shellings") {
    const SimplicialComplex tetra({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(find_shelling(tetra).order.size() == 4);
    const auto bary = complex_from_fan(barycentric_subdivision(cone_of(corpus_cone("square"))).source);
    const auto sh = find_shelling(bary);
    CHECK(is_shelling_by_intersections(sh.order));
    CHECK(kind_of([] { find_shelling(SimplicialComplex(bowtie)); }) == ErrorKind::NoShellingFound);
}

TEST_CASE("lexicographic order shells every corpus barycentric complex") {
    for (const auto& spec : builtin_corpus()) {
        INFO(spec.name);
        const auto cone = cone_of(spec);
        const auto& lat = cone.lattice();
        if (lat.rank() == 0) continue;
        const auto sh = lexicographic_shelling(lat);
        CHECK(sh.order.size() == barycentric_complex(lat).facets().size());
        CHECK(is_shelling_by_intersections(sh.order));
        CHECK(std::count(sh.types.begin(), sh.types.end(), 0) == 1);
    }
}

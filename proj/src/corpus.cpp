#include "toricic/corpus.hpp"

#include "toricic/error.hpp"

namespace toricic {

namespace {

LatticeVector vec(std::initializer_list<long> xs) {
    LatticeVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

ConeSpec orthant(int n) {
    ConeSpec s{"orthant" + std::to_string(n), n, {}, std::nullopt};
    for (int i = 0; i < n; ++i) {
        LatticeVector e(static_cast<std::size_t>(n), Integer(0));
        e[static_cast<std::size_t>(i)] = 1;
        s.rays.push_back(std::move(e));
    }
    // Cones over a triangle and a tetrahedron.
    if (n == 3) s.expected = ExpectedCounts{3, 0, 0, {}};
    if (n == 4) s.expected = ExpectedCounts{4, 6, 4, {3, 3, 3, 3}};
    return s;
}

ConeSpec polygon_cone(const std::string& name, const std::vector<std::pair<int, int>>& vertices) {
    ConeSpec s{name, 3, {}, ExpectedCounts{static_cast<int>(vertices.size()), 0, 0, {}}};
    for (auto [x, y] : vertices) s.rays.push_back(vec({x, y, 1}));
    return s;
}

ConeSpec m_gon_cone(int m) {
    static const std::vector<std::pair<int, int>> spiral{{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 3}, {0, 3}, {-1, 2}, {-1, 1}};
    switch (m) {
        case 3: return polygon_cone("triangle", {{0, 0}, {1, 0}, {0, 1}});
        case 4: return polygon_cone("square", {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
        case 5: return polygon_cone("pentagon", {{0, 0}, {1, 0}, {2, 1}, {1, 2}, {0, 1}});
        case 6: return polygon_cone("hexagon", {{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}});
        case 7: return polygon_cone("heptagon", {spiral.begin(), spiral.begin() + 7});
        case 8: return polygon_cone("octagon", spiral);
        default: throw Error(ErrorKind::MalformedInput, "polygon corpus covers 3 to 8 vertices");
    }
}

ConeSpec cube_cone() {
    ConeSpec s{"cube", 4, {}, ExpectedCounts{8, 12, 6, {4, 4, 4, 4, 4, 4}}};
    for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= 1; ++b) {
            for (int c = 0; c <= 1; ++c) s.rays.push_back(vec({a, b, c, 1}));
        }
    }
    return s;
}

ConeSpec octahedron_cone() {
    ConeSpec s{"octahedron", 4, {}, ExpectedCounts{6, 12, 8, std::vector<int>(8, 3)}};
    for (int i = 0; i < 3; ++i) {
        for (int sign : {1, -1}) {
            LatticeVector v(4, Integer(0));
            v[static_cast<std::size_t>(i)] = sign;
            v[3] = 1;
            s.rays.push_back(std::move(v));
        }
    }
    return s;
}

ConeSpec square_pyramid_cone() {
    ConeSpec s{"square_pyramid", 4, {}, ExpectedCounts{5, 8, 5, {4, 3, 3, 3, 3}}};
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}) s.rays.push_back(vec({a, b, 0, 1}));
    s.rays.push_back(vec({0, 0, 1, 1}));
    return s;
}

ConeSpec triangular_prism_cone() {
    ConeSpec s{"triangular_prism", 4, {}, ExpectedCounts{6, 9, 5, {3, 3, 4, 4, 4}}};
    for (int c = 0; c <= 1; ++c) {
        for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}}) s.rays.push_back(vec({a, b, c, 1}));
    }
    return s;
}

std::vector<ConeSpec> builtin_corpus() {
    std::vector<ConeSpec> out;
    for (int n = 0; n <= 4; ++n) out.push_back(orthant(n));
    out.push_back(ConeSpec{"wedge_1_3", 2, {vec({1, 0}), vec({1, 3})}, std::nullopt});
    for (int m = 3; m <= 8; ++m) out.push_back(m_gon_cone(m));
    out.push_back(cube_cone());
    out.push_back(octahedron_cone());
    out.push_back(square_pyramid_cone());
    out.push_back(triangular_prism_cone());
    return out;
}

PolyhedralCone cone_of(const ConeSpec& spec) { return PolyhedralCone::from_rays(spec.rank, spec.rays); }

}  // namespace toricic

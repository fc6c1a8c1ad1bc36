#pragma once

#include "toricic/cone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricic {

/// Golden values attached to a cone: combinatorial counts used by the closed
/// formulas for cones over polygons and 3-polytopes.
struct ExpectedCounts {
    int v = 0;                   // rays
    int e = 0;                   // 2-faces (dim 4 only)
    int f = 0;                   // facets (dim 4 only)
    std::vector<int> facet_rays; // rays per facet (dim 4 only)
};

struct ConeSpec {
    std::string name;
    int rank = 0;
    std::vector<LatticeVector> rays;
    std::optional<ExpectedCounts> expected;
};

ConeSpec orthant(int n);
/// Cone over a lattice polygon placed at height 1.
ConeSpec polygon_cone(const std::string& name, const std::vector<std::pair<int, int>>& vertices);
/// Cone over the polygon with m vertices used by the corpus (3 ≤ m ≤ 8).
ConeSpec m_gon_cone(int m);
ConeSpec cube_cone();
ConeSpec octahedron_cone();
ConeSpec square_pyramid_cone();
ConeSpec triangular_prism_cone();

/// Orthants of rank 0..4, a two-dimensional non-unimodular cone, cones over
/// m-gons for m = 3..8, and the cones over the cube, octahedron, square
/// pyramid and triangular prism.
std::vector<ConeSpec> builtin_corpus();

PolyhedralCone cone_of(const ConeSpec& spec);

}  // namespace toricic

#pragma once

#include "toricic/bilaurent.hpp"
#include "toricic/corpus.hpp"
#include "toricic/decomposition.hpp"
#include "toricic/laurent.hpp"

#include <string>
#include <vector>

namespace toricic {

/// One closed-form value compared against a computed one, both rendered.
struct GoldenComparison {
    std::string label;
    std::string expected;
    std::string actual;
    bool passed() const { return expected == actual; }
};

/// Closed forms for cones of dimension at most 4: the stalk polynomials and
/// multiplicities of the star subdivision pipeline, and the dR table.
/// `dec` must come from appendix_subdivision. Cones of dimension 3 and 4
/// need ConeSpec::expected; those counts are compared with the face lattice
/// as well.
std::vector<GoldenComparison> golden_comparisons(const ConeSpec& spec, const PolyhedralCone& cone,
                                                 const DecompositionResult& dec);

}  // namespace toricic

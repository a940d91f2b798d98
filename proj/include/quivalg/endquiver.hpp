#pragma once

#include "quivalg/module.hpp"

namespace quivalg {

// Gabriel quiver of End(T_1 ⊕ ... ⊕ T_n). Vertex k is T_k (1-based); an arrow
// i -> j stands for an irreducible map T_i -> T_j. When every summand is graded
// the arrows carry the degree of the maps realizing them.
struct EndQuiver {
    Quiver quiver;
    std::optional<DegreeMap> degrees;
    std::vector<std::vector<std::size_t>> hom_dims;  // hom_dims[i][j] = dim Hom(T_i, T_j), 0-based
    std::size_t end_dim = 0;
    std::size_t radical_dim = 0;
};

// Throws NotLocal(i) and IsomorphicSummands(i, j).
EndQuiver end_gabriel_quiver(const std::vector<FDModule>& summands);

}  // namespace quivalg

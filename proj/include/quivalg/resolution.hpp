#pragma once

#include "quivalg/module.hpp"

#include <optional>

namespace quivalg {

// Jacobson radical as the kernel of the trace form tr(L_{xy}) (characteristic zero).
// Each basis vector lies in a single block e_t A e_s.
std::vector<SparseVector> algebra_radical(const FDAlgebra& a);

// M · rad(A).
Submodule module_radical(const FDAlgebra& a, const FDModule& m, const std::vector<SparseVector>& rad);

struct ProjectiveCover {
    DirectSum projective;          // one summand e_v A per top generator
    std::vector<int> generator_vertices;
    ModuleMap map;                 // onto M
};
ProjectiveCover projective_cover(const FDAlgebra& a, const FDModule& m, const std::vector<SparseVector>& rad);

struct Resolution {
    std::vector<std::map<int, std::size_t>> terms;  // terms[k][v]: multiplicity of e_v A in P_k
    std::optional<int> projective_dimension;       // nullopt when above the bound
};

// Minimal projective resolution, computed up to P_bound.
Resolution projective_resolution(const FDAlgebra& a, const FDModule& m, int bound);
// Max over simples of pd(S_v); nullopt if some pd exceeds the bound.
std::optional<int> global_dimension(const FDAlgebra& a, int bound);

// e_i A / e_i A e_F A.
FDModule idempotent_quotient(const FDAlgebra& a, int i, const VertexSet& frozen);

}  // namespace quivalg

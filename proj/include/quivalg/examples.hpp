#pragma once

#include "quivalg/birs.hpp"
#include "quivalg/endquiver.hpp"
#include "quivalg/json_io.hpp"
#include "quivalg/preprojective.hpp"
#include "quivalg/resolution.hpp"

#include <string>
#include <vector>

namespace quivalg {

Quiver triangle_graph();  // edges 1-2, 1-3, 2-3
Quiver a_graph(int n);    // path 1 - 2 - ... - n
Word triangle_word();     // s1 s2 s3 s1 s3 s2 s1
Word a3_longest_word();   // s1 s2 s3 s1 s2 s1

// The frozen QP with W = acb + dbe + dhgf, F0 = {3,5,6}, φ(a) = φ(d) = 1.
FrozenQP mutated_a3_qp();

// Frozen Jacobian algebra kQ / <∂_a W : a not frozen>.
AlgebraPresentation jacobian_presentation(const FrozenQP& qp);

struct ComplexData {
    std::vector<FDModule> modules;
    std::vector<ModuleMap> maps;
};

// 0 -> e_iB -> ⊕_{s(b)=i} e_{t(b)}B -> ⊕_{t(a)=i} e_{s(a)}B -> e_iB -> S_i -> 0 for non-frozen i.
ComplexData simple_resolution_complex(const FDAlgebra& b, const FrozenQP& qp, int i);

// 0 -> T2* -> T1 ⊕ T5 -> T3 ⊕ T4 -> T2* -> 0 over the A3 preprojective algebra.
ComplexData almost_split_sequence_a3(int max_len = 32);

// Minimal A-resolution of e_i Ā: length <= 2, P_0 = e_i A, higher terms in add(e_F A).
struct RestrictionShape {
    int vertex = 0;
    Resolution resolution;
    bool ok = false;
};
RestrictionShape restriction_shape(const FDAlgebra& a, const VertexSet& frozen, int i);

// Same arrows with multiplicity, matched on (source, target, degree).
bool same_graded_multigraph(const Quiver& q1, const std::optional<DegreeMap>& d1, const Quiver& q2,
                            const std::optional<DegreeMap>& d2);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ExampleReport {
    std::string example;
    std::vector<Check> checks;
    std::vector<std::string> flags;  // discrepancies reported, not corrected
    bool pass() const;
    Json to_json() const;
};

ExampleReport verify_triangle_example(int max_len = 32);
ExampleReport verify_mutated_a3_example(int max_len = 32);

}  // namespace quivalg

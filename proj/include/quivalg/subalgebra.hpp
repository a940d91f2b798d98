#pragma once

#include "quivalg/potential.hpp"

#include <vector>

namespace quivalg {

// A presentation built from cyclic derivatives, remembering which degree-1
// arrow produced each relation and which derivatives vanished.
struct DerivedPresentation {
    AlgebraPresentation pres;
    std::vector<int> relation_arrows;
    std::vector<int> zero_relation_arrows;
};

// A = B_0: degree-0 arrows, relations ∂_a W for non-frozen a with φ(a) = 1.
DerivedPresentation degree_zero_presentation(const FrozenQP& qp);
// Ā = A / A e_F A: as above on Q̄ with W̄.
DerivedPresentation bar_quotient_presentation(const FrozenQP& qp);
// (Q̄, W̄): delete F0, keep only terms avoiding it; no frozen vertices; φ restricted.
FrozenQP bar_jacobian_qp(const FrozenQP& qp);

struct GradedSubalgebraBundle {
    DerivedPresentation a;
    DerivedPresentation abar;
    FrozenQP bbar;
};
GradedSubalgebraBundle graded_subalgebras(const FrozenQP& qp);

bool path_meets(const Quiver& q, const Path& p, const VertexSet& vertices);
// Deletes vertices from a presentation: terms through them vanish, zero relations dropped.
AlgebraPresentation delete_vertices(const AlgebraPresentation& pres, const VertexSet& vertices);

}  // namespace quivalg

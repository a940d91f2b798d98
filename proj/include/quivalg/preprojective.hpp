#pragma once

#include "quivalg/coxeter.hpp"
#include "quivalg/module.hpp"

namespace quivalg {

// Double quiver of an oriented graph: a* : t(a) -> s(a) gets id max_id + k for
// the k-th arrow, name "<name>*". Graded by deg a = 0, deg a* = 1.
struct DoubleQuiver {
    Quiver quiver;
    std::map<int, int> star;    // a -> a*
    std::map<int, int> unstar;  // a* -> a
    DegreeMap degrees;
};
DoubleQuiver double_quiver(const Quiver& oriented);

// Relations are the vertex components of sum_a (a a* - a* a). Throws OrientedCycle.
AlgebraPresentation preprojective_presentation(const Quiver& oriented);

// Λ_w = Λ / I_w and the modules T_p = e_{u_p}(Λ / I_{w_p}), computed layer by
// layer in the path-length grading of Λ. A T_p is certified once a whole layer
// of e_{u_p}Λ lies in I_{w_p}; everything above it then does too.
struct LambdaW {
    DoubleQuiver dq;
    Word word;
    FDAlgebra algebra;
    std::vector<FDModule> summands;  // T_1 .. T_l, graded by number of starred letters
    std::vector<int> vanishing_layer;  // first layer of e_{u_p}Λ inside I_{w_p}
    int layers = 0;                    // layers of Λ computed
    std::size_t dim() const { return algebra.dim(); }
};

// Throws NotReduced, OrientedCycle, NotStabilized(max_len).
LambdaW lambda_w(const Quiver& oriented, const Word& word, int max_len = 32);
FDAlgebra lambda_w_algebra(const Quiver& oriented, const Word& word, int max_len = 32);
std::vector<FDModule> tw_summands(const Quiver& oriented, const Word& word, int max_len = 32);

// Λ_w as a right module over the double quiver.
FDModule regular_module(const LambdaW& lw);

}  // namespace quivalg

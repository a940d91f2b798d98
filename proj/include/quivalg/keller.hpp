#pragma once

#include "quivalg/potential.hpp"
#include "quivalg/subalgebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quivalg {

struct KellerExtension {
    Quiver quiver;                 // Q̃
    std::vector<int> added_arrows;  // added_arrows[i] : t(r_i) -> s(r_i)
    Potential potential;           // W_A = Σ a_i r_i
};

KellerExtension keller_extend(const AlgebraPresentation& pres);

struct KellerReport {
    HypothesisReport hypotheses;
    bool quiver_match = false;
    bool potential_match = false;
    std::vector<std::string> ambiguities;
    std::map<int, int> renaming;  // added arrow -> arrow of Q̄
    std::optional<int> abar_global_dimension;  // nullopt: above the bound checked
    std::vector<std::string> warnings;
    bool match() const { return quiver_match && potential_match; }
};

// Throws HypothesisViolated if (H1)-(H4) fail; PI-set defaults to F0.
KellerReport verify_endomorphism_match(const FrozenQP& qp, const std::optional<VertexSet>& projective_injective = {},
                                       int max_len = 32);

}  // namespace quivalg

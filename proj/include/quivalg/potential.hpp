#pragma once

#include "quivalg/path_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quivalg {

// A linear combination of cycles. Equal cycle words are merged; rotations are not.
struct Potential {
    PathElement element;

    void add(const Path& cycle, const Rational& c);  // throws InvalidRelation if not a cycle
    bool is_zero() const { return element.is_zero(); }
    bool operator==(const Potential&) const = default;
};

struct FrozenQP {
    Quiver quiver;
    Potential potential;
    FrozenData frozen;
    std::optional<DegreeMap> phi;
};

// Validates cycles, frozen vertices and that phi (if any) covers every arrow with values in {0,1}.
FrozenQP make_qp(Quiver q, Potential w, const VertexSet& frozen_vertices, std::optional<DegreeMap> phi = {});

PathElement cyclic_derivative(const Quiver& q, const Potential& w, int arrow);

Path rotate_to_minimal(const Quiver& q, const Path& cycle);
Potential rotation_normal_form(const Quiver& q, const Potential& w);
bool cyclically_equivalent(const Quiver& q, const Potential& w1, const Potential& w2);

struct ReducedReport {
    bool reduced = true;
    std::vector<std::string> reasons;  // "<term>: length<3" or "<term>: all arrows frozen"
};
ReducedReport is_reduced_qp(const FrozenQP& qp);

struct JacobianRelation {
    int arrow;
    PathElement derivative;
    bool zero;
};
// (a, ∂_a W) for every non-frozen arrow a, in arrow-id order.
std::vector<JacobianRelation> jacobian_relations(const FrozenQP& qp);

struct HypothesisResult {
    bool pass = true;
    std::string witness;
};

struct HypothesisReport {
    HypothesisResult h1, h2, h3, h4;
    bool leading_terms_distinct = true;
    bool all_pass() const { return h1.pass && h2.pass && h3.pass && h4.pass; }
};

HypothesisReport check_hypotheses(const FrozenQP& qp, const VertexSet& projective_injective);

}  // namespace quivalg

#include "quivalg/subalgebra.hpp"

#include "quivalg/errors.hpp"

namespace quivalg {

bool path_meets(const Quiver& q, const Path& p, const VertexSet& vertices) {
    if (vertices.count(p.source) || vertices.count(p.target)) return true;
    for (int a : p.arrows) {
        const Arrow& ar = q.arrow(a);
        if (vertices.count(ar.src) || vertices.count(ar.tgt)) return true;
    }
    return false;
}

namespace {

const DegreeMap& require_phi(const FrozenQP& qp) {
    if (!qp.phi) throw MissingDegreeMap("graded subalgebras need a degree map");
    return *qp.phi;
}

Quiver degree_zero_quiver(const Quiver& q, const DegreeMap& phi) {
    std::vector<Arrow> keep;
    for (const auto& a : q.arrows())
        if (phi.at(a.id) == 0) keep.push_back(a);
    return build_quiver(q.vertices(), std::move(keep));
}

DerivedPresentation derivatives_along_degree_one(const Quiver& full, const Potential& w, const DegreeMap& phi,
                                                 const ArrowSet& frozen_arrows, const Quiver& target) {
    DerivedPresentation out;
    out.pres.quiver = target;
    DegreeMap zero;
    for (const auto& a : target.arrows()) zero[a.id] = 0;
    out.pres.degrees = zero;
    for (const auto& a : full.arrows()) {
        if (phi.at(a.id) != 1 || frozen_arrows.count(a.id)) continue;
        PathElement d = cyclic_derivative(full, w, a.id);
        if (d.is_zero()) {
            out.zero_relation_arrows.push_back(a.id);
            continue;
        }
        for (const auto& [p, c] : d.terms)
            for (int b : p.arrows)
                if (!target.has_arrow(b))
                    throw HypothesisViolated("H3: derivative along " + full.label(a.id) + " uses arrow " +
                                             full.label(b) + " outside the degree-0 quiver");
        out.pres.relations.push_back(std::move(d));
        out.relation_arrows.push_back(a.id);
    }
    return out;
}

Potential drop_terms_meeting(const Quiver& q, const Potential& w, const VertexSet& vertices) {
    Potential out;
    for (const auto& [p, c] : w.element.terms)
        if (!path_meets(q, p, vertices)) out.element.add(p, c);
    return out;
}

}  // namespace

DerivedPresentation degree_zero_presentation(const FrozenQP& qp) {
    const DegreeMap& phi = require_phi(qp);
    return derivatives_along_degree_one(qp.quiver, qp.potential, phi, qp.frozen.arrows,
                                        degree_zero_quiver(qp.quiver, phi));
}

FrozenQP bar_jacobian_qp(const FrozenQP& qp) {
    Quiver qbar = full_subquiver(qp.quiver, qp.frozen.vertices);
    Potential wbar = drop_terms_meeting(qp.quiver, qp.potential, qp.frozen.vertices);
    std::optional<DegreeMap> phi;
    if (qp.phi) {
        phi.emplace();
        for (const auto& a : qbar.arrows()) (*phi)[a.id] = qp.phi->at(a.id);
    }
    return make_qp(std::move(qbar), std::move(wbar), {}, std::move(phi));
}

DerivedPresentation bar_quotient_presentation(const FrozenQP& qp) {
    require_phi(qp);
    FrozenQP bar = bar_jacobian_qp(qp);
    return derivatives_along_degree_one(bar.quiver, bar.potential, *bar.phi, {},
                                        degree_zero_quiver(bar.quiver, *bar.phi));
}

GradedSubalgebraBundle graded_subalgebras(const FrozenQP& qp) {
    return {degree_zero_presentation(qp), bar_quotient_presentation(qp), bar_jacobian_qp(qp)};
}

AlgebraPresentation delete_vertices(const AlgebraPresentation& pres, const VertexSet& vertices) {
    AlgebraPresentation out;
    out.quiver = full_subquiver(pres.quiver, vertices);
    for (const auto& r : pres.relations) {
        PathElement kept;
        for (const auto& [p, c] : r.terms)
            if (!path_meets(pres.quiver, p, vertices)) kept.add(p, c);
        if (!kept.is_zero()) out.relations.push_back(std::move(kept));
    }
    if (pres.degrees) {
        out.degrees.emplace();
        for (const auto& a : out.quiver.arrows()) (*out.degrees)[a.id] = pres.degrees->at(a.id);
    }
    return out;
}

}  // namespace quivalg

#include "quivalg/potential.hpp"

#include "quivalg/errors.hpp"

#include <algorithm>

namespace quivalg {

void Potential::add(const Path& cycle, const Rational& c) {
    if (!cycle.is_cycle()) throw InvalidRelation("potential term is not a cycle");
    element.add(cycle, c);
}

FrozenQP make_qp(Quiver q, Potential w, const VertexSet& frozen_vertices, std::optional<DegreeMap> phi) {
    for (const auto& [p, c] : w.element.terms) {
        if (!p.is_cycle()) throw InvalidRelation("potential term is not a cycle");
        Path check = Path::from_word(q, p.arrows);
        if (check.source != check.target || check.source != p.source)
            throw InvalidRelation("potential term " + to_string(q, p) + " is not a cycle in the quiver");
    }
    if (phi) {
        for (const auto& a : q.arrows()) {
            auto it = phi->find(a.id);
            if (it == phi->end()) throw MissingDegreeMap("no degree for arrow " + q.label(a.id));
            if (it->second != 0 && it->second != 1)
                throw SchemaViolation("degree of arrow " + q.label(a.id) + " must be 0 or 1");
        }
        for (const auto& [id, d] : *phi)
            if (!q.has_arrow(id)) throw UnknownArrow("degree map mentions arrow " + std::to_string(id));
    }
    FrozenData f = freeze(q, frozen_vertices);
    return FrozenQP{std::move(q), std::move(w), std::move(f), std::move(phi)};
}

PathElement cyclic_derivative(const Quiver& q, const Potential& w, int arrow) {
    const Arrow& a = q.arrow(arrow);
    PathElement out;
    for (const auto& [p, c] : w.element.terms) {
        const auto& word = p.arrows;
        const std::size_t k = word.size();
        for (std::size_t j = 0; j < k; ++j) {
            if (word[j] != arrow) continue;
            Path r{a.tgt, a.src, {}};
            for (std::size_t i = j + 1; i < k; ++i) r.arrows.push_back(word[i]);
            for (std::size_t i = 0; i < j; ++i) r.arrows.push_back(word[i]);
            out.add(r, c);
        }
    }
    return out;
}

Path rotate_to_minimal(const Quiver& q, const Path& cycle) {
    Path best = cycle;
    const std::size_t k = cycle.arrows.size();
    for (std::size_t r = 1; r < k; ++r) {
        Path p;
        p.arrows.assign(cycle.arrows.begin() + static_cast<std::ptrdiff_t>(r), cycle.arrows.end());
        p.arrows.insert(p.arrows.end(), cycle.arrows.begin(), cycle.arrows.begin() + static_cast<std::ptrdiff_t>(r));
        p.source = p.target = q.arrow(p.arrows.front()).tgt;
        if (p < best) best = std::move(p);
    }
    return best;
}

Potential rotation_normal_form(const Quiver& q, const Potential& w) {
    Potential out;
    for (const auto& [p, c] : w.element.terms) out.element.add(rotate_to_minimal(q, p), c);
    return out;
}

bool cyclically_equivalent(const Quiver& q, const Potential& w1, const Potential& w2) {
    return rotation_normal_form(q, w1) == rotation_normal_form(q, w2);
}

ReducedReport is_reduced_qp(const FrozenQP& qp) {
    ReducedReport rep;
    for (const auto& [p, c] : qp.potential.element.terms) {
        const std::string name = to_string(qp.quiver, p);
        if (p.length() < 3) {
            rep.reduced = false;
            rep.reasons.push_back(name + ": length<3");
        }
        const bool all_frozen = std::all_of(p.arrows.begin(), p.arrows.end(),
                                            [&](int a) { return qp.frozen.arrows.count(a) != 0; });
        if (all_frozen) {
            rep.reduced = false;
            rep.reasons.push_back(name + ": all arrows frozen");
        }
    }
    return rep;
}

std::vector<JacobianRelation> jacobian_relations(const FrozenQP& qp) {
    std::vector<JacobianRelation> out;
    for (const auto& a : qp.quiver.arrows()) {
        if (qp.frozen.arrows.count(a.id)) continue;
        PathElement d = cyclic_derivative(qp.quiver, qp.potential, a.id);
        const bool zero = d.is_zero();
        out.push_back({a.id, std::move(d), zero});
    }
    return out;
}

HypothesisReport check_hypotheses(const FrozenQP& qp, const VertexSet& projective_injective) {
    if (!qp.phi) throw MissingDegreeMap("hypothesis check needs a degree map");
    const Quiver& q = qp.quiver;
    const DegreeMap& phi = *qp.phi;
    HypothesisReport rep;

    if (qp.frozen.vertices != projective_injective) {
        rep.h1.pass = false;
        std::string w;
        for (int v : qp.frozen.vertices)
            if (!projective_injective.count(v)) w += " frozen-not-PI:" + std::to_string(v);
        for (int v : projective_injective)
            if (!qp.frozen.vertices.count(v)) w += " PI-not-frozen:" + std::to_string(v);
        rep.h1.witness = w.substr(1);
    }

    const auto rels = jacobian_relations(qp);
    std::map<Path, std::size_t> coords;
    for (const auto& r : rels)
        for (const auto& [p, c] : r.derivative.terms) coords.emplace(p, 0);
    std::size_t n = 0;
    for (auto& [p, i] : coords) i = n++;
    Subspace span(n);
    std::set<Path> leads;
    std::vector<const JacobianRelation*> seen;
    for (const auto& r : rels) {
        if (r.zero) {
            if (rep.h2.pass) rep.h2 = {false, "derivative along " + q.label(r.arrow) + " vanishes"};
            continue;
        }
        for (const auto* s : seen)
            if (s->derivative == r.derivative && rep.h2.pass)
                rep.h2 = {false, "derivatives along " + q.label(s->arrow) + " and " + q.label(r.arrow) + " coincide"};
        seen.push_back(&r);
        Vector v(n);
        for (const auto& [p, c] : r.derivative.terms) v[coords.at(p)] = c;
        if (!span.insert(v) && rep.h2.pass)
            rep.h2 = {false, "derivative along " + q.label(r.arrow) + " is linearly dependent on earlier ones"};
        if (!leads.insert(std::prev(r.derivative.terms.end())->first).second) rep.leading_terms_distinct = false;
    }

    for (const auto& [p, c] : qp.potential.element.terms) {
        int d = 0;
        for (int a : p.arrows) d += phi.at(a);
        if (d != 1) {
            rep.h3 = {false, "term " + to_string(q, p) + " has degree " + std::to_string(d)};
            break;
        }
    }

    for (const auto& a : q.arrows()) {
        if (!qp.frozen.vertices.count(a.src) && qp.frozen.vertices.count(a.tgt) && phi.at(a.id) != 1) {
            rep.h4 = {false, "arrow " + q.label(a.id) + " enters a frozen vertex with degree 0"};
            break;
        }
    }
    return rep;
}

}  // namespace quivalg

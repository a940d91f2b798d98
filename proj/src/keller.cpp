#include "quivalg/keller.hpp"

#include "quivalg/errors.hpp"
#include "quivalg/resolution.hpp"

#include <algorithm>
#include <functional>

namespace quivalg {

KellerExtension keller_extend(const AlgebraPresentation& pres) {
    KellerExtension ext;
    std::vector<Arrow> arrows = pres.quiver.arrows();
    int next_id = pres.quiver.max_arrow_id() + 1;
    struct Pending {
        int id;
        const PathElement* rel;
    };
    std::vector<Pending> pending;
    for (std::size_t i = 0; i < pres.relations.size(); ++i) {
        const PathElement& r = pres.relations[i];
        const auto ends = r.endpoint_pairs();
        if (ends.size() != 1)
            throw NonHomogeneousRelation("relation " + std::to_string(i + 1) + " does not have a single source and target");
        const auto [t, s] = ends.front();
        arrows.push_back(Arrow{next_id, t, s, "k" + std::to_string(i + 1)});
        ext.added_arrows.push_back(next_id);
        pending.push_back({next_id, &r});
        ++next_id;
    }
    ext.quiver = build_quiver(pres.quiver.vertices(), std::move(arrows));
    for (const auto& [id, rel] : pending)
        for (const auto& [p, c] : rel->terms) {
            Path cyc{p.source, p.source, {id}};
            cyc.arrows.insert(cyc.arrows.end(), p.arrows.begin(), p.arrows.end());
            ext.potential.add(cyc, c);
        }
    return ext;
}

namespace {

Potential rename(const Potential& w, const std::map<int, int>& renaming) {
    Potential out;
    for (const auto& [p, c] : w.element.terms) {
        Path r = p;
        for (int& a : r.arrows)
            if (auto it = renaming.find(a); it != renaming.end()) a = it->second;
        out.add(r, c);
    }
    return out;
}

}  // namespace

KellerReport verify_endomorphism_match(const FrozenQP& qp, const std::optional<VertexSet>& projective_injective,
                                       int max_len) {
    KellerReport rep;
    rep.hypotheses = check_hypotheses(qp, projective_injective.value_or(qp.frozen.vertices));
    if (!rep.hypotheses.all_pass()) {
        std::string w;
        for (auto [name, h] : {std::pair{"H1", &rep.hypotheses.h1}, {"H2", &rep.hypotheses.h2},
                               {"H3", &rep.hypotheses.h3}, {"H4", &rep.hypotheses.h4}})
            if (!h->pass) w += std::string(w.empty() ? "" : "; ") + name + ": " + h->witness;
        throw HypothesisViolated(w);
    }

    const DerivedPresentation abar = bar_quotient_presentation(qp);
    const KellerExtension ext = keller_extend(abar.pres);
    const FrozenQP bar = bar_jacobian_qp(qp);

    try {
        const FDAlgebra alg = quotient_basis(abar.pres, max_len);
        rep.abar_global_dimension = global_dimension(alg, 2);
        if (!rep.abar_global_dimension) rep.warnings.push_back("global dimension of the quotient exceeds 2");
    } catch (const NotStabilized& e) {
        rep.warnings.push_back(std::string("quotient not certified finite dimensional: ") + e.what());
    }

    // Added arrows against degree-1 arrows of Q̄, grouped by endpoints.
    std::map<std::pair<int, int>, std::vector<int>> added, wanted;
    for (int id : ext.added_arrows) {
        const Arrow& a = ext.quiver.arrow(id);
        added[{a.src, a.tgt}].push_back(id);
    }
    for (const auto& a : bar.quiver.arrows())
        if (bar.phi->at(a.id) == 1) wanted[{a.src, a.tgt}].push_back(a.id);

    bool base_same = ext.quiver.vertices() == bar.quiver.vertices();
    for (const auto& a : bar.quiver.arrows())
        if (bar.phi->at(a.id) == 0) base_same = base_same && ext.quiver.has_arrow(a.id) && ext.quiver.arrow(a.id) == a;
    bool counts_same = added.size() == wanted.size();
    for (const auto& [ends, ids] : added) {
        auto it = wanted.find(ends);
        counts_same = counts_same && it != wanted.end() && it->second.size() == ids.size();
        if (ids.size() > 1)
            rep.ambiguities.push_back(std::to_string(ids.size()) + " added arrows " + std::to_string(ends.first) +
                                      "->" + std::to_string(ends.second));
    }
    rep.quiver_match = base_same && counts_same;
    if (!rep.quiver_match) return rep;

    // Try every bijection inside ambiguous groups (small in practice).
    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
    for (const auto& [ends, ids] : added) groups.emplace_back(ids, wanted.at(ends));
    std::size_t attempts = 0;
    std::function<bool(std::size_t, std::map<int, int>&)> search = [&](std::size_t g, std::map<int, int>& ren) {
        if (g == groups.size()) {
            ++attempts;
            if (cyclically_equivalent(bar.quiver, rename(ext.potential, ren), bar.potential)) {
                rep.renaming = ren;
                return true;
            }
            return false;
        }
        std::vector<int> targets = groups[g].second;
        std::sort(targets.begin(), targets.end());
        do {
            for (std::size_t i = 0; i < targets.size(); ++i) ren[groups[g].first[i]] = targets[i];
            if (search(g + 1, ren)) return true;
            if (attempts > 100000) return false;
        } while (std::next_permutation(targets.begin(), targets.end()));
        return false;
    };
    std::map<int, int> ren;
    rep.potential_match = search(0, ren);
    if (!rep.potential_match && attempts > 100000) rep.warnings.push_back("renaming search truncated");
    return rep;
}

}  // namespace quivalg

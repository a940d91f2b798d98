#include "quivalg/resolution.hpp"
#include "quivalg/subalgebra.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace quivalg;
using namespace testsupport;

namespace {

bool has_relation(const std::vector<PathElement>& rels, const PathElement& want) {
    for (const auto& r : rels)
        if (r == want || r == want.scaled(-1)) return true;
    return false;
}

}  // namespace

TEST_CASE("degree-zero subalgebra of the mutated A3 QP") {
    FrozenQP qp = mutated_a3_qp();
    const Quiver& q = qp.quiver;
    DerivedPresentation a = degree_zero_presentation(qp);
    std::set<int> arrows;
    for (const Arrow& x : a.pres.quiver.arrows()) arrows.insert(x.id);
    std::set<int> want;
    for (const char* n : {"b", "c", "e", "f", "g", "h"}) want.insert(named(q, n));
    CHECK(arrows == want);
    CHECK(a.pres.quiver.vertices().size() == 6);
    REQUIRE(a.pres.relations.size() == 2);
    CHECK(has_relation(a.pres.relations, word_elem(q, {named(q, "c"), named(q, "b")})));
    CHECK(has_relation(a.pres.relations, word_elem(q, {named(q, "b"), named(q, "e")}) +
                                             word_elem(q, {named(q, "h"), named(q, "g"), named(q, "f")})));
}

TEST_CASE("all arrows in degree zero with no potential gives the path algebra") {
    Quiver q = a_graph(3);
    DegreeMap phi{{1, 0}, {2, 0}};
    DerivedPresentation a = degree_zero_presentation(make_qp(q, Potential{}, {}, phi));
    CHECK(a.pres.quiver == q);
    CHECK(a.pres.relations.empty());
}

TEST_CASE("triangle B-QP degree-zero part") {
    BirsQP b = build_birs_qp(triangle_graph(), triangle_word());
    DerivedPresentation a = degree_zero_presentation(b.qp);
    CHECK(a.pres.quiver.arrows().size() == 9);
    // One relation per degree-1 arrow outside F1; all five degree-1 arrows qualify.
    CHECK(a.relation_arrows.size() == 5);
    for (int r : a.relation_arrows) CHECK(b.qp.phi->at(r) == 1);
}

TEST_CASE("bar quotient of the triangle example") {
    BirsQP b = build_birs_qp(triangle_graph(), triangle_word());
    DerivedPresentation abar = bar_quotient_presentation(b.qp);
    const Quiver& q = abar.pres.quiver;
    CHECK(q.vertices() == std::vector<int>{1, 2, 3, 4});
    CHECK(endpoints(q) == std::multiset<std::pair<int, int>>{{2, 4}, {3, 4}, {4, 1}});
    int e = arrow_between(q, 4, 1);
    CHECK(has_relation(abar.pres.relations, word_elem(q, {e, arrow_between(q, 2, 4)})));
    CHECK(has_relation(abar.pres.relations, word_elem(q, {e, arrow_between(q, 3, 4)})));
    CHECK(abar.pres.relations.size() == 2);
}

TEST_CASE("bar quotient of the mutated A3 QP is hereditary") {
    FrozenQP qp = mutated_a3_qp();
    DerivedPresentation abar = bar_quotient_presentation(qp);
    CHECK(abar.pres.quiver.vertices() == std::vector<int>{1, 2, 4});
    CHECK(endpoints(abar.pres.quiver) == std::multiset<std::pair<int, int>>{{2, 1}, {4, 2}});
    CHECK(abar.pres.relations.empty());
    CHECK(global_dimension(quotient_basis(abar.pres), 4) == 1);
}

TEST_CASE("bar Jacobian QP") {
    BirsQP b = build_birs_qp(triangle_graph(), triangle_word());
    FrozenQP bar = bar_jacobian_qp(b.qp);
    const Quiver& q = bar.quiver;
    Potential want;
    want.add(Path::from_word(q, {arrow_between(q, 2, 4), arrow_between(q, 1, 2), arrow_between(q, 4, 1)}), 1);
    want.add(Path::from_word(q, {arrow_between(q, 3, 4), arrow_between(q, 1, 3), arrow_between(q, 4, 1)}), 1);
    CHECK(cyclic_oracle_equal(bar.potential.element, want.element));
    CHECK(bar.frozen.vertices.empty());

    FrozenQP m = bar_jacobian_qp(mutated_a3_qp());
    CHECK(m.potential.is_zero());
    CHECK(m.quiver.vertices() == std::vector<int>{1, 2, 4});

    FrozenQP nf = mutated_a3_qp();
    FrozenQP unfrozen = make_qp(nf.quiver, nf.potential, {}, nf.phi);
    FrozenQP same = bar_jacobian_qp(unfrozen);
    CHECK(same.quiver == unfrozen.quiver);
    CHECK(same.potential == unfrozen.potential);
}

TEST_CASE("deleting every vertex leaves an empty presentation") {
    FrozenQP qp = make_qp(mutated_a3_qp().quiver, Potential{}, {1, 2, 3, 4, 5, 6});
    AlgebraPresentation p = delete_vertices(jacobian_presentation(qp), {1, 2, 3, 4, 5, 6});
    CHECK(p.quiver.vertices().empty());
    CHECK(p.relations.empty());
}

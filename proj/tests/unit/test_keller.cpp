#include "quivalg/errors.hpp"
#include "quivalg/keller.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace quivalg;
using namespace testsupport;

TEST_CASE("Keller extension of the triangle A-bar") {
    BirsQP b = build_birs_qp(triangle_graph(), triangle_word());
    AlgebraPresentation abar = bar_quotient_presentation(b.qp).pres;
    KellerExtension k = keller_extend(abar);
    REQUIRE(k.added_arrows.size() == 2);
    std::set<std::pair<int, int>> added;
    for (int a : k.added_arrows) added.insert({k.quiver.arrow(a).src, k.quiver.arrow(a).tgt});
    CHECK(added == std::set<std::pair<int, int>>{{1, 2}, {1, 3}});
    CHECK(k.quiver.arrows().size() == 5);
    // W_A = Σ a_i r_i, term by term.
    PathElement expected;
    for (std::size_t i = 0; i < k.added_arrows.size(); ++i)
        expected = expected + PathElement(Path::of_arrow(k.quiver, k.added_arrows[i])) * abar.relations[i];
    CHECK(k.potential.element == expected);
    for (const auto& [p, c] : k.potential.element.terms) CHECK(p.length() == 3);
}

TEST_CASE("hereditary presentations gain nothing") {
    Quiver q = build_quiver({1, 2, 4}, {{3, 2, 1, "c"}, {8, 4, 2, "h"}});
    KellerExtension k = keller_extend({q, {}, std::nullopt});
    CHECK(k.quiver == q);
    CHECK(k.potential.is_zero());
}

TEST_CASE("a commutativity relation adds one arrow") {
    Quiver q = build_quiver({1, 2, 3, 4}, {{1, 1, 2, "p1"}, {2, 2, 4, "p2"}, {3, 1, 3, "q1"}, {4, 3, 4, "q2"}});
    PathElement rel = word_elem(q, {2, 1}) - word_elem(q, {4, 3});
    KellerExtension k = keller_extend({q, {rel}, std::nullopt});
    REQUIRE(k.added_arrows.size() == 1);
    const Arrow& a = k.quiver.arrow(k.added_arrows[0]);
    CHECK(a.src == 4);
    CHECK(a.tgt == 1);
    CHECK(k.potential.element == PathElement(Path::of_arrow(k.quiver, a.id)) * rel);
}

TEST_CASE("endomorphism match on both worked examples") {
    BirsQP b = build_birs_qp(triangle_graph(), triangle_word());
    KellerReport r1 = verify_endomorphism_match(b.qp);
    CHECK(r1.quiver_match);
    CHECK(r1.potential_match);
    CHECK(r1.abar_global_dimension == 2);

    KellerReport r2 = verify_endomorphism_match(mutated_a3_qp());
    CHECK(r2.match());
    CHECK(r2.abar_global_dimension == 1);
}

TEST_CASE("a degree-0 arrow into a frozen vertex fails H4 before any match") {
    FrozenQP qp = mutated_a3_qp();
    DegreeMap phi = *qp.phi;
    phi[named(qp.quiver, "a")] = 0;  // a : 1 -> 3 enters frozen 3
    phi[named(qp.quiver, "c")] = 1;  // keeps acb of degree 1
    FrozenQP bad = make_qp(qp.quiver, qp.potential, {3, 5, 6}, phi);
    CHECK_FALSE(check_hypotheses(bad, {3, 5, 6}).h4.pass);
    CHECK_THROWS_AS(verify_endomorphism_match(bad), HypothesisViolated);
}

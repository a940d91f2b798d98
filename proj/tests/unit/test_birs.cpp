#include "quivalg/birs.hpp"
#include "quivalg/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace quivalg;
using namespace testsupport;

namespace {

Quiver edge_graph() { return a_graph(2); }

// Compares build_birs_qp with the clause-by-clause oracle: same arrows by
// (kind, ends, graph arrow) and the same potential up to rotation.
void check_against_oracle(const Quiver& graph, const Word& w) {
    CAPTURE(w);
    BirsQP b = build_birs_qp(graph, w);
    OracleQw o = birs_oracle(b.orientation, w);

    std::multiset<OracleArrow> got, want(o.arrows.begin(), o.arrows.end());
    for (const Arrow& a : b.qp.quiver.arrows()) {
        ArrowKind k = b.kinds.at(a.id);
        int g = k == ArrowKind::Left ? -1 : b.graph_arrow.at(a.id);
        got.insert({k, a.src, a.tgt, g});
    }
    CHECK(got == want);

    // Oracle arrows are identified with built arrows by their key (unique here).
    std::map<OracleArrow, int> id_of;
    for (const Arrow& a : b.qp.quiver.arrows()) {
        ArrowKind k = b.kinds.at(a.id);
        id_of[{k, a.src, a.tgt, k == ArrowKind::Left ? -1 : b.graph_arrow.at(a.id)}] = a.id;
    }
    PathElement pot;
    for (const auto& [term, sign] : o.terms) {
        std::vector<int> ids;
        for (std::size_t k : term) ids.push_back(id_of.at(o.arrows[k]));
        pot.add(Path::from_word(b.qp.quiver, ids), sign);
    }
    CHECK(cyclic_oracle_equal(b.qp.potential.element, pot));

    for (const Arrow& a : b.qp.quiver.arrows())
        CHECK(b.qp.phi->at(a.id) == (b.kinds.at(a.id) == ArrowKind::QStar ? 1 : 0));
    VertexSet f;
    for (auto [i, t] : last_occurrences(w)) f.insert(t);
    CHECK(b.qp.frozen.vertices == f);
}

}  // namespace

TEST_CASE("last occurrences") {
    CHECK(last_occurrences(triangle_word()) == std::map<int, int>{{1, 7}, {2, 6}, {3, 5}});
    CHECK(last_occurrences({1}) == std::map<int, int>{{1, 1}});
    CHECK(last_occurrences(a3_longest_word()) == std::map<int, int>{{1, 6}, {2, 5}, {3, 3}});
}

TEST_CASE("admissible orientations") {
    CHECK(endpoints(admissible_orientation(triangle_graph(), triangle_word())) ==
          std::multiset<std::pair<int, int>>{{3, 2}, {2, 1}, {3, 1}});
    CHECK(endpoints(admissible_orientation(edge_graph(), {1, 2})) == std::multiset<std::pair<int, int>>{{1, 2}});
    CHECK(endpoints(admissible_orientation(a_graph(3), a3_longest_word())) ==
          std::multiset<std::pair<int, int>>{{3, 2}, {2, 1}});
    CHECK_THROWS_AS(admissible_orientation(a_graph(3), {1, 1}), NotReduced);
    CHECK_THROWS_AS(admissible_orientation(a_graph(3), {1, 2}), UnusedVertex);
}

TEST_CASE("Q_w of the triangle word") {
    BirsQP b = build_birs_qp(triangle_graph(), triangle_word());
    const FrozenQP& qp = b.qp;
    CHECK(qp.quiver.vertices().size() == 7);
    CHECK(qp.frozen.vertices == VertexSet{5, 6, 7});
    std::set<std::pair<int, int>> left, star;
    for (const auto& [id, k] : b.kinds) {
        auto e = std::pair{qp.quiver.arrow(id).src, qp.quiver.arrow(id).tgt};
        if (k == ArrowKind::Left) {
            left.insert(e);
            CHECK(qp.phi->at(id) == 0);
        }
        if (k == ArrowKind::QStar) star.insert(e);
    }
    CHECK(left == std::set<std::pair<int, int>>{{4, 1}, {7, 4}, {6, 2}, {5, 3}});
    CHECK(star.count({1, 2}));
    CHECK(star.count({1, 3}));
    CHECK(b.hypotheses.all_pass());
}

TEST_CASE("single letter") {
    BirsQP b = build_birs_qp(build_quiver({1}, {}), {1});
    CHECK(b.qp.quiver.vertices() == std::vector<int>{1});
    CHECK(b.qp.quiver.arrows().empty());
    CHECK(b.qp.potential.is_zero());
    CHECK(b.qp.frozen.vertices == VertexSet{1});
}

TEST_CASE("s1 s2 s1 on one edge") {
    BirsQP b = build_birs_qp(edge_graph(), {1, 2, 1});
    CHECK(b.position_type == std::map<int, int>{{1, 1}, {2, 2}, {3, 1}});
    std::map<ArrowKind, int> counts;
    for (const auto& [id, k] : b.kinds) ++counts[k];
    CHECK(counts[ArrowKind::Left] == 1);
    CHECK(counts[ArrowKind::Q] == 1);
    CHECK(counts[ArrowKind::QStar] == 1);
    int left = arrow_between(b.qp.quiver, 3, 1);
    REQUIRE(left > 0);
    CHECK(b.kinds.at(left) == ArrowKind::Left);
    check_against_oracle(edge_graph(), {1, 2, 1});
}

TEST_CASE("clause oracle on assorted reduced words") {
    check_against_oracle(triangle_graph(), triangle_word());
    check_against_oracle(a_graph(3), a3_longest_word());
    CoxeterSystem tri = coxeter_system(triangle_graph());
    for (const Word& w : std::vector<Word>{{1, 2, 3}, {2, 1, 3, 2}, {3, 1, 2, 3, 1}, {1, 2, 3, 1, 2, 3, 1, 2}})
        if (is_reduced(tri, w)) check_against_oracle(triangle_graph(), w);
    for (const Word& w : enumerate_group(coxeter_system(a_graph(3)), 100))
        if (!w.empty()) check_against_oracle(a_graph(3), w);
}

TEST_CASE("structural invariants") {
    CoxeterSystem a3 = coxeter_system(a_graph(3));
    for (const Word& w : enumerate_group(a3, 100)) {
        if (w.empty()) continue;
        BirsQP b = build_birs_qp(a_graph(3), w);
        std::size_t letters = last_occurrences(w).size();
        std::size_t lefts = 0;
        for (const auto& [id, k] : b.kinds) lefts += k == ArrowKind::Left;
        CHECK(b.qp.quiver.vertices().size() == w.size());
        CHECK(b.qp.frozen.vertices.size() == letters);
        CHECK(lefts == w.size() - letters);
        for (const Arrow& a : b.qp.quiver.arrows()) CHECK(a.src != a.tgt);
        CHECK(check_hypotheses(b.qp, b.qp.frozen.vertices).all_pass());
        BirsQP again = build_birs_qp(a_graph(3), w);
        CHECK(again.qp.quiver == b.qp.quiver);
    }
    CHECK_THROWS_AS(build_birs_qp(a_graph(3), {2, 2}), NotReduced);
}

#include "quivalg/coxeter.hpp"
#include "quivalg/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace quivalg;
using namespace testsupport;

namespace {

// S_{n+1} with s_i swapping i and i+1; length = number of inversions.
std::vector<int> perm_of(int n, const Word& w) {
    std::vector<int> p(static_cast<std::size_t>(n + 1));
    std::iota(p.begin(), p.end(), 0);
    for (int s : w) std::swap(p[static_cast<std::size_t>(s - 1)], p[static_cast<std::size_t>(s)]);
    return p;
}

std::size_t inversions(const std::vector<int>& p) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
    return n;
}

void all_words(int letters, std::size_t len, Word& cur, std::vector<Word>& out) {
    out.push_back(cur);
    if (cur.size() == len) return;
    for (int s = 1; s <= letters; ++s) {
        cur.push_back(s);
        all_words(letters, len, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("Coxeter matrices") {
    CoxeterSystem a3 = coxeter_system(a_graph(3));
    CHECK(a3.order(1, 2) == 3);
    CHECK(a3.order(2, 3) == 3);
    CHECK(a3.order(1, 3) == 2);
    CHECK(a3.order(2, 2) == 1);
    CoxeterSystem tri = coxeter_system(triangle_graph());
    CHECK(tri.order(1, 2) == 3);
    CHECK(tri.order(1, 3) == 3);
    CHECK(tri.order(2, 3) == 3);
    CoxeterSystem one = coxeter_system(build_quiver({1}, {}));
    CHECK(one.generators == std::vector<int>{1});
    Quiver doubled = build_quiver({1, 2}, {{1, 1, 2, std::nullopt}, {2, 2, 1, std::nullopt}});
    CHECK(coxeter_system(doubled).order(1, 2) == kInfinity);
    CHECK_THROWS_AS(a3.index_of(7), UnknownVertex);
}

TEST_CASE("reflections are involutions") {
    CoxeterSystem tri = coxeter_system(triangle_graph());
    for (int s : {1, 2, 3}) CHECK(reflection(tri, s) * reflection(tri, s) == Matrix::identity(3));
}

TEST_CASE("reducedness examples") {
    CoxeterSystem a3 = coxeter_system(a_graph(3));
    CHECK(is_reduced(a3, a3_longest_word()));
    CHECK_FALSE(is_reduced(a3, {1, 1}));
    CHECK(is_reduced(coxeter_system(triangle_graph()), triangle_word()));
    ReducedDetail d = reduced_detail(a3, {1, 2, 1, 2});
    CHECK_FALSE(d.reduced);
    CHECK(d.first_failure == 3u);
    CHECK(d.dichotomy);
}

TEST_CASE("reducedness agrees with the permutation oracle on A3") {
    CoxeterSystem a3 = coxeter_system(a_graph(3));
    std::vector<Word> words;
    Word cur;
    all_words(3, 5, cur, words);
    for (const Word& w : words) {
        bool oracle = inversions(perm_of(3, w)) == w.size();
        CHECK(is_reduced(a3, w) == oracle);
    }
}

TEST_CASE("reduce_word") {
    CoxeterSystem a2 = coxeter_system(a_graph(2));
    CHECK(reduce_word(a2, {1, 1}).empty());
    Word r = reduce_word(a2, {1, 2, 1, 2});
    CHECK(r.size() == 2);
    CHECK(perm_of(2, r) == perm_of(2, {1, 2, 1, 2}));
    CHECK(reduce_word(a2, {1, 2, 1}) == Word{1, 2, 1});

    CoxeterSystem a3 = coxeter_system(a_graph(3));
    Word w{3, 2, 1, 2, 3, 1, 2};
    Word red = reduce_word(a3, w);
    CHECK(is_reduced(a3, red));
    CHECK(red.size() == inversions(perm_of(3, w)));
    CHECK(elements_equal(a3, red, w));
}

TEST_CASE("element equality") {
    CoxeterSystem a2 = coxeter_system(a_graph(2));
    CHECK(elements_equal(a2, {1, 2, 1}, {2, 1, 2}));
    CHECK_FALSE(elements_equal(a2, {1}, {2}));
    CHECK(elements_equal(a2, {}, {1, 1}));
}

TEST_CASE("group enumeration") {
    CHECK(enumerate_group(coxeter_system(a_graph(2)), 1000).size() == 6);
    auto s4 = enumerate_group(coxeter_system(a_graph(3)), 1000);
    CHECK(s4.size() == 24);
    std::set<std::vector<int>> perms;
    for (const Word& w : s4) perms.insert(perm_of(3, w));
    CHECK(perms.size() == 24);
    CHECK_THROWS_AS(enumerate_group(coxeter_system(triangle_graph()), 100), GroupTooLarge);
}

TEST_CASE("braid neighbours represent the same element") {
    CoxeterSystem a3 = coxeter_system(a_graph(3));
    auto nb = braid_neighbors(a3, a3_longest_word());
    CHECK_FALSE(nb.empty());
    for (const Word& w : nb) {
        CHECK(w != a3_longest_word());
        CHECK(perm_of(3, w) == perm_of(3, a3_longest_word()));
    }
    auto c = braid_neighbors(a3, {1, 3});
    REQUIRE(c.size() == 1);
    CHECK(c[0] == Word{3, 1});
}

// One PASS/FAIL line per acceptance criterion, each with its own time limit.

#include "quivalg/birs.hpp"
#include "quivalg/coxeter.hpp"
#include "quivalg/endquiver.hpp"
#include "quivalg/examples.hpp"
#include "quivalg/keller.hpp"
#include "quivalg/preprojective.hpp"
#include "quivalg/resolution.hpp"
#include "quivalg/subalgebra.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace quivalg;

namespace {

struct Outcome {
    std::vector<std::string> failures;
    std::size_t checks = 0;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<void(Outcome&)> body;
};

int arrow_between(const Quiver& q, int s, int t) {
    for (const Arrow& a : q.arrows())
        if (a.src == s && a.tgt == t) return a.id;
    return -1;
}

std::set<std::pair<int, int>> ends_of(const Quiver& q, const std::vector<int>& ids) {
    std::set<std::pair<int, int>> out;
    for (int a : ids) out.insert({q.arrow(a).src, q.arrow(a).tgt});
    return out;
}

bool proportional(const PathElement& x, const PathElement& y) {
    if (x.terms.size() != y.terms.size() || x.is_zero()) return false;
    Rational r = y.terms.begin()->second / x.terms.begin()->second;
    for (const auto& [p, c] : x.terms) {
        auto it = y.terms.find(p);
        if (it == y.terms.end() || it->second != c * r) return false;
    }
    return true;
}

bool contains_relation(const std::vector<PathElement>& rels, const PathElement& want) {
    return std::any_of(rels.begin(), rels.end(), [&](const PathElement& r) { return proportional(r, want); });
}

// ---------------------------------------------------------------- criterion 1

void triangle_end_to_end(Outcome& o) {
    BirsQP b = build_birs_qp(triangle_graph(), triangle_word());
    const FrozenQP& qp = b.qp;
    const Quiver& q = qp.quiver;
    o.expect(q.vertices() == std::vector<int>{1, 2, 3, 4, 5, 6, 7}, "7 vertices");
    o.expect(qp.frozen.vertices == VertexSet{5, 6, 7}, "F0 = {5,6,7}");

    std::vector<int> left, deg1;
    bool left_deg0 = true;
    for (const auto& [id, k] : b.kinds) {
        if (k == ArrowKind::Left) {
            left.push_back(id);
            left_deg0 = left_deg0 && qp.phi->at(id) == 0;
        }
        if (qp.phi->at(id) == 1) deg1.push_back(id);
    }
    o.expect(ends_of(q, left) == std::set<std::pair<int, int>>{{4, 1}, {7, 4}, {6, 2}, {5, 3}}, "left arrows");
    o.expect(left_deg0, "left arrows have degree 0");
    auto d1 = ends_of(q, deg1);
    o.expect(d1.count({1, 2}) && d1.count({1, 3}), "degree-1 arrows include 1->2 and 1->3");

    HypothesisReport h = check_hypotheses(qp, qp.frozen.vertices);
    o.expect(h.h1.pass && h.h2.pass && h.h3.pass && h.h4.pass, "(H1)-(H4)");

    FrozenQP bar = bar_jacobian_qp(qp);
    const Quiver& qb = bar.quiver;
    int a = arrow_between(qb, 1, 2), bb = arrow_between(qb, 2, 4), c = arrow_between(qb, 1, 3),
        d = arrow_between(qb, 3, 4), e = arrow_between(qb, 4, 1);
    bool arrows_ok = std::min({a, bb, c, d, e}) > 0 && qb.arrows().size() == 5;
    o.expect(arrows_ok, "Q-bar has arrows a,b,c,d,e");
    if (arrows_ok) {
        Potential want;
        want.add(Path::from_word(qb, {bb, a, e}), 1);
        want.add(Path::from_word(qb, {d, c, e}), 1);
        o.expect(cyclically_equivalent(qb, bar.potential, want), "W-bar ~ bae + dce");
    }

    AlgebraPresentation abar = bar_quotient_presentation(qp).pres;
    o.expect(abar.quiver.vertices().size() == 4, "A-bar has 4 vertices");
    o.expect(abar.quiver.arrows().size() == 3, "A-bar has 3 arrows");
    o.expect(abar.relations.size() == 2, "A-bar has 2 relations");
    o.expect(global_dimension(quotient_basis(abar), 4) == std::optional<int>(2), "gl.dim A-bar = 2");

    KellerReport kr = verify_endomorphism_match(qp);
    o.expect(kr.quiver_match, "Keller quiver match");
    o.expect(kr.potential_match, "Keller potential match");
}

// ---------------------------------------------------------------- criterion 2

void mutated_a3_end_to_end(Outcome& o) {
    FrozenQP qp = mutated_a3_qp();
    const Quiver& q = qp.quiver;
    auto id = [&](const char* n) { return *q.find_by_name(n); };
    auto elem = [&](std::vector<const char*> names) {
        std::vector<int> w;
        for (const char* n : names) w.push_back(id(n));
        return PathElement(Path::from_word(q, w));
    };

    o.expect(check_hypotheses(qp, {3, 5, 6}).all_pass(), "(H1)-(H4)");

    AlgebraPresentation a = degree_zero_presentation(qp).pres;
    o.expect(a.relations.size() == 2, "A has two relations");
    o.expect(contains_relation(a.relations, elem({"c", "b"})), "cb is a relation of A");
    o.expect(contains_relation(a.relations, elem({"b", "e"}) + elem({"h", "g", "f"})), "be + hgf is a relation of A");
    o.expect(!contains_relation(a.relations, elem({"b", "e"}) - elem({"h", "g", "f"})), "be - hgf is not substituted");
    ExampleReport rep = verify_mutated_a3_example();
    o.expect(!rep.flags.empty(), "sign discrepancy flagged in the report");

    AlgebraPresentation abar = bar_quotient_presentation(qp).pres;
    std::multiset<std::pair<int, int>> ends;
    for (const Arrow& x : abar.quiver.arrows()) ends.insert({x.src, x.tgt});
    o.expect(abar.quiver.vertices() == std::vector<int>{1, 2, 4}, "A-bar on vertices 1,2,4");
    o.expect(ends == std::multiset<std::pair<int, int>>{{2, 1}, {4, 2}}, "A-bar is 1 <- 2 <- 4");
    o.expect(abar.relations.empty(), "A-bar has no relations");
    o.expect(global_dimension(quotient_basis(abar), 4) == std::optional<int>(1), "gl.dim A-bar = 1");

    o.expect(verify_endomorphism_match(qp).match(), "Keller match");

    ComplexData s = almost_split_sequence_a3();
    o.expect(check_complex_exact(s.modules, s.maps).exact, "2-almost-split sequence is exact");

    FDAlgebra bj = quotient_basis(jacobian_presentation(qp));
    for (int v : q.vertices()) {
        if (qp.frozen.vertices.count(v)) continue;
        ComplexData c = simple_resolution_complex(bj, qp, v);
        o.expect(check_complex_exact(c.modules, c.maps).exact, "simple complex at " + std::to_string(v) + " exact");
    }
}

// ---------------------------------------------------------------- criterion 3

using Perm = std::vector<int>;

// s_i swaps i and i+1 in {1..n+1}; w = s_{u_1}...s_{u_k} as a composite function.
Perm apply_word(int n, const Word& w) {
    Perm p(static_cast<std::size_t>(n + 2));
    std::iota(p.begin(), p.end(), 0);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        for (auto& x : p)
            if (x == *it) x = *it + 1;
            else if (x == *it + 1) x = *it;
    return p;
}

// Minimal word length of every element, by breadth-first search on permutations.
std::map<Perm, std::size_t> bfs_lengths(int n) {
    std::map<Perm, std::size_t> len;
    std::queue<std::pair<Word, Perm>> todo;
    Perm id = apply_word(n, {});
    len[id] = 0;
    todo.push({{}, id});
    while (!todo.empty()) {
        auto [w, p] = todo.front();
        todo.pop();
        for (int s = 1; s <= n; ++s) {
            Word w2 = w;
            w2.push_back(s);
            Perm p2 = apply_word(n, w2);
            if (len.emplace(p2, w2.size()).second) todo.push({w2, p2});
        }
    }
    return len;
}

// w(α_i) = e_{w(i)} - e_{w(i+1)}, in simple-root coordinates.
Vector root_image(int n, const Word& prefix, int i) {
    Perm p = apply_word(n, prefix);
    int a = p[static_cast<std::size_t>(i)], b = p[static_cast<std::size_t>(i + 1)];
    Vector v(static_cast<std::size_t>(n));
    int sign = a < b ? 1 : -1;
    for (int k = std::min(a, b); k < std::max(a, b); ++k) v[static_cast<std::size_t>(k - 1)] = sign;
    return v;
}

void coxeter_oracle(Outcome& o) {
    for (int n : {2, 3}) {
        CoxeterSystem sys = coxeter_system(a_graph(n));
        auto len = bfs_lengths(n);
        o.expect(len.size() == (n == 2 ? 6u : 24u), "group order for A" + std::to_string(n));
        o.expect(enumerate_group(sys, 1000).size() == len.size(), "enumerate_group order for A" + std::to_string(n));

        std::vector<Word> words{{}};
        for (std::size_t k = 0; k < words.size(); ++k) {
            if (words[k].size() == 6) continue;
            for (int s = 1; s <= n; ++s) {
                Word w = words[k];
                w.push_back(s);
                words.push_back(w);
            }
        }
        std::size_t mismatches = 0, dichotomy_fail = 0, root_fail = 0;
        for (const Word& w : words) {
            bool oracle = len.at(apply_word(n, w)) == w.size();
            if (is_reduced(sys, w) != oracle) ++mismatches;
            ReducedDetail d = reduced_detail(sys, w);
            if (!d.dichotomy) ++dichotomy_fail;
            for (std::size_t p = 0; p < d.roots.size(); ++p) {
                const Vector& r = d.roots[p];
                bool pos = std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) >= 0; });
                bool neg = std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) <= 0; });
                if (!(pos || neg)) ++dichotomy_fail;
                Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
                if (r != root_image(n, prefix, w[p])) ++root_fail;
            }
        }
        std::string tag = "A" + std::to_string(n) + " (" + std::to_string(words.size()) + " words)";
        o.expect(mismatches == 0, "is_reduced vs minimal length, " + tag + ": " + std::to_string(mismatches) + " mismatches");
        o.expect(dichotomy_fail == 0, "root dichotomy, " + tag);
        o.expect(root_fail == 0, "intermediate roots exact, " + tag);
    }
}

// ---------------------------------------------------------------- criterion 4

void ideal_independence(Outcome& o) {
    CoxeterSystem sys = coxeter_system(a_graph(3));
    std::set<std::pair<Word, Word>> pairs;
    for (const Word& w : enumerate_group(sys, 100))
        for (const Word& v : braid_neighbors(sys, w))
            if (w != v) pairs.insert({std::min(w, v), std::max(w, v)});
    o.expect(pairs.size() >= 5, "at least 5 braid pairs (" + std::to_string(pairs.size()) + ")");
    std::map<Word, std::size_t> dims;
    auto dim_of = [&](const Word& w) {
        auto it = dims.find(w);
        if (it != dims.end()) return it->second;
        return dims[w] = lambda_w_algebra(a_graph(3), w).dim();
    };
    for (const auto& [w, v] : pairs) {
        o.expect(is_reduced(sys, w) && is_reduced(sys, v) && elements_equal(sys, w, v), "pair represents one element");
        o.expect(dim_of(w) == dim_of(v), "dim Λ/I_w equal across a braid pair");
    }
    // Projectives of the A3 preprojective algebra: 1/2/3, 2/(1 3)/2, 3/2/1.
    const std::size_t oracle = 3 + 4 + 3;
    o.expect(dim_of(a3_longest_word()) == oracle, "dim Λ_w0 = 10");
}

// ---------------------------------------------------------------- criterion 5

void endomorphism_quiver(Outcome& o) {
    std::vector<std::pair<Quiver, Word>> cases{{triangle_graph(), triangle_word()}, {a_graph(3), a3_longest_word()}};
    for (const auto& [graph, word] : cases) {
        std::string tag = word.size() == 7 ? "triangle word" : "A3 longest word";
        BirsQP b = build_birs_qp(graph, word);
        EndQuiver e = end_gabriel_quiver(tw_summands(b.orientation, word));
        o.expect(same_graded_multigraph(e.quiver, std::nullopt, b.qp.quiver, std::nullopt),
                 tag + ": Gabriel quiver = Q_w");
        o.expect(e.degrees.has_value(), tag + ": arrows carry Hom degrees");
        o.expect(same_graded_multigraph(e.quiver, e.degrees, b.qp.quiver, b.qp.phi), tag + ": Hom degrees = φ");
    }
}

// ---------------------------------------------------------------- criterion 6

std::vector<Path> cycles_up_to(const Quiver& q, std::size_t max_len) {
    std::vector<Path> out;
    for (std::size_t n = 1; n <= max_len; ++n)
        for (const Path& p : paths_of_length(q, n))
            if (p.is_cycle()) out.push_back(p);
    return out;
}

Path rotate_once(const Quiver& q, const Path& c) {
    std::vector<int> w(c.arrows.begin() + 1, c.arrows.end());
    w.push_back(c.arrows.front());
    return Path::from_word(q, w);
}

void potential_properties(Outcome& o, std::mt19937& rng) {
    std::vector<Quiver> quivers{mutated_a3_qp().quiver, build_birs_qp(triangle_graph(), triangle_word()).qp.quiver};
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), terms(1, 4);
    auto coef = [&] {
        int a = num(rng);
        Rational r(a == 0 ? 1 : a, den(rng));
        r.canonicalize();
        return r;
    };
    std::size_t linearity = 0, rotation = 0, euler = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Quiver& q = quivers[static_cast<std::size_t>(trial) % quivers.size()];
        auto cycles = cycles_up_to(q, 6);
        std::uniform_int_distribution<std::size_t> pick(0, cycles.size() - 1);
        auto random_potential = [&] {
            Potential w;
            for (int k = terms(rng); k > 0; --k) w.add(cycles[pick(rng)], coef());
            return w;
        };
        Potential w1 = random_potential(), w2 = random_potential();
        Rational al = coef(), be = coef();
        Potential comb;
        comb.element = w1.element.scaled(al) + w2.element.scaled(be);
        Potential rotated;
        for (const auto& [p, c] : w1.element.terms) {
            Path r = p;
            for (int k = std::uniform_int_distribution<int>(0, 5)(rng); k > 0; --k) r = rotate_once(q, r);
            rotated.add(r, c);
        }
        for (const Arrow& a : q.arrows()) {
            PathElement d1 = cyclic_derivative(q, w1, a.id), d2 = cyclic_derivative(q, w2, a.id);
            if (cyclic_derivative(q, comb, a.id) != d1.scaled(al) + d2.scaled(be)) ++linearity;
            if (cyclic_derivative(q, rotated, a.id) != d1) ++rotation;
        }
        // Σ_a a·∂_a c is ℓ·c up to rotation.
        const Path& c = cycles[pick(rng)];
        Potential one;
        one.add(c, 1);
        Potential euler_sum;
        for (const Arrow& a : q.arrows())
            euler_sum.element = euler_sum.element + PathElement(Path::of_arrow(q, a.id)) * cyclic_derivative(q, one, a.id);
        Potential scaled;
        scaled.add(c, static_cast<long>(c.length()));
        if (!cyclically_equivalent(q, euler_sum, scaled)) ++euler;
    }
    o.expect(linearity == 0, "derivative linearity on 200 random potentials");
    o.expect(rotation == 0, "derivative rotation invariance on 200 random potentials");
    o.expect(euler == 0, "Σ a∂_a c ~ ℓ·c on 200 random cycles");
}

bool associative(const FDAlgebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                SparseVector l, r;
                for (const auto& [k, c] : a.product(x, y)) axpy(l, c, a.product(k, z));
                for (const auto& [k, c] : a.product(y, z)) axpy(r, c, a.product(x, k));
                if (l != r) return false;
            }
    return true;
}

void quotient_properties(Outcome& o) {
    std::vector<std::pair<std::string, AlgebraPresentation>> pres;
    FrozenQP m = mutated_a3_qp();
    BirsQP t = build_birs_qp(triangle_graph(), triangle_word());
    pres.push_back({"mutated A3: B", jacobian_presentation(m)});
    pres.push_back({"mutated A3: A", degree_zero_presentation(m).pres});
    pres.push_back({"mutated A3: A-bar", bar_quotient_presentation(m).pres});
    pres.push_back({"triangle: B", jacobian_presentation(t.qp)});
    pres.push_back({"triangle: A", degree_zero_presentation(t.qp).pres});
    pres.push_back({"triangle: A-bar", bar_quotient_presentation(t.qp).pres});
    pres.push_back({"A2 preprojective", preprojective_presentation(a_graph(2))});
    pres.push_back({"A3 preprojective", preprojective_presentation(a_graph(3))});
    Quiver loop = build_quiver({1}, {{1, 1, 1, "x"}});
    pres.push_back({"loop with x^2", {loop, {PathElement(Path::from_word(loop, {1, 1}))}, std::nullopt}});
    for (const auto& [name, p] : pres) {
        FDAlgebra a = quotient_basis(p);
        o.expect(associative(a), name + ": associative");
        FDAlgebra tight = quotient_basis(p, a.stabilized_length);
        FDAlgebra loose = quotient_basis(p, a.stabilized_length + 6);
        o.expect(tight.basis == a.basis && loose.basis == a.basis, name + ": basis stable in the length bound");
    }
}

void birs_properties(Outcome& o) {
    std::vector<std::pair<std::string, Quiver>> graphs{{"A2", a_graph(2)}, {"A3", a_graph(3)}, {"triangle", triangle_graph()}};
    for (const auto& [name, g] : graphs) {
        CoxeterSystem sys = coxeter_system(g);
        const int n = static_cast<int>(g.vertices().size());
        std::vector<Word> frontier{{}};
        std::size_t count = 0, hyp = 0, gl = 0;
        for (std::size_t len = 1; len <= 7; ++len) {
            std::vector<Word> next;
            for (const Word& w : frontier)
                for (int s = 1; s <= n; ++s) {
                    Word v = w;
                    v.push_back(s);
                    if (is_reduced(sys, v)) next.push_back(v);
                }
            for (const Word& w : next) {
                ++count;
                BirsQP b = build_birs_qp(g, w);
                if (!check_hypotheses(b.qp, b.qp.frozen.vertices).all_pass()) ++hyp;
                auto d = global_dimension(quotient_basis(bar_quotient_presentation(b.qp).pres), 3);
                if (!d || *d > 2) ++gl;
            }
            frontier = std::move(next);
        }
        std::string tag = name + " (" + std::to_string(count) + " reduced words)";
        o.expect(hyp == 0, "(H1)-(H4) on " + tag);
        o.expect(gl == 0, "gl.dim A-bar <= 2 on " + tag);
    }
}

void property_suites(Outcome& o) {
    std::mt19937 rng(20260114);
    potential_properties(o, rng);
    quotient_properties(o);
    birs_properties(o);
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "triangle example end to end", 10, triangle_end_to_end},
        {2, "mutated A3 example end to end", 10, mutated_a3_end_to_end},
        {3, "Coxeter oracle equivalence", 30, coxeter_oracle},
        {4, "ideal independence", 60, ideal_independence},
        {5, "endomorphism-quiver match", 120, endomorphism_quiver},
        {6, "property suites", 60, property_suites},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds)
            o.failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        const bool pass = o.failures.empty();
        failed += !pass;
        std::printf("%s  criterion %d: %s  (%zu checks, %.2f s / %.0f s)\n", pass ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), o.checks, secs, c.limit_seconds);
        for (const auto& f : o.failures) std::printf("      failed: %s\n", f.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}

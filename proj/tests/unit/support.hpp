#pragma once

#include "quivalg/examples.hpp"
#include "quivalg/potential.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace testsupport {

using namespace quivalg;

inline int arrow_between(const Quiver& q, int s, int t) {
    for (const Arrow& a : q.arrows())
        if (a.src == s && a.tgt == t) return a.id;
    return -1;
}

inline int named(const Quiver& q, const char* name) { return q.find_by_name(name).value_or(-1); }

inline PathElement word_elem(const Quiver& q, std::vector<int> w, Rational c = 1) {
    return PathElement(Path::from_word(q, w), c);
}

inline std::multiset<std::pair<int, int>> endpoints(const Quiver& q) {
    std::multiset<std::pair<int, int>> out;
    for (const Arrow& a : q.arrows()) out.insert({a.src, a.tgt});
    return out;
}

// Cyclic derivative straight from the definition: for a cycle a_1...a_k and each
// i with a_i = a, the term a_{i+1}...a_k a_1...a_{i-1}.
inline PathElement derivative_oracle(const Quiver& q, const PathElement& w, int a) {
    PathElement out;
    for (const auto& [p, c] : w.terms) {
        const auto& x = p.arrows;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] != a) continue;
            std::vector<int> rest(x.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.end());
            rest.insert(rest.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
            if (rest.empty())
                out.add(Path::stationary(q.arrow(a).tgt), c);
            else
                out.add(Path::from_word(q, rest), c);
        }
    }
    return out;
}

// Every rotation of every term, compared as multisets of (coefficient, rotation class).
inline bool cyclic_oracle_equal(const PathElement& x, const PathElement& y) {
    auto canon = [](const PathElement& e) {
        std::map<std::vector<int>, Rational> m;
        for (const auto& [p, c] : e.terms) {
            std::vector<int> best = p.arrows;
            std::vector<int> r = p.arrows;
            for (std::size_t k = 0; k < r.size(); ++k) {
                std::rotate(r.begin(), r.begin() + 1, r.end());
                best = std::min(best, r);
            }
            m[best] += c;
        }
        for (auto it = m.begin(); it != m.end();)
            it = sgn(it->second) == 0 ? m.erase(it) : std::next(it);
        return m;
    };
    return canon(x) == canon(y);
}

// Literal reading of the Q_w clauses: arrows as (kind, src, tgt, graph arrow).
struct OracleArrow {
    ArrowKind kind;
    int src, tgt, graph_arrow;
    auto operator<=>(const OracleArrow&) const = default;
};

struct OracleQw {
    std::vector<OracleArrow> arrows;
    // Each potential term as a sequence of oracle-arrow indices, with its sign.
    std::vector<std::pair<std::vector<std::size_t>, int>> terms;
};

inline OracleQw birs_oracle(const Quiver& orientation, const Word& w) {
    const int l = static_cast<int>(w.size());
    auto type = [&](int p) { return w[static_cast<std::size_t>(p - 1)]; };
    auto next_of = [&](int type_i, int after) {
        for (int p = after + 1; p <= l; ++p)
            if (type(p) == type_i) return p;
        return l + 1;
    };
    OracleQw o;
    std::map<int, std::size_t> left_from;  // later end of a left arrow -> index
    for (int t = 1; t <= l; ++t) {
        int s = next_of(type(t), t);
        if (s <= l) {
            left_from[s] = o.arrows.size();
            o.arrows.push_back({ArrowKind::Left, s, t, -1});
        }
    }
    // t of type i, s of type j, no type i between them, s the last type j before the next i.
    auto forward = [&](ArrowKind kind, int i, int j, int ga) {
        for (int t = 1; t <= l; ++t) {
            if (type(t) != i) continue;
            int stop = next_of(i, t);
            int s = -1;
            for (int q = t + 1; q < stop; ++q)
                if (type(q) == j) s = q;
            if (s > 0) o.arrows.push_back({kind, t, s, ga});
        }
    };
    for (const Arrow& a : orientation.arrows()) {
        forward(ArrowKind::Q, a.src, a.tgt, a.id);
        forward(ArrowKind::QStar, a.tgt, a.src, a.id);
    }
    // Left arrows from `from` down to `to` (to <= from), as a word applied right to left.
    auto left_path = [&](int from, int to) -> std::optional<std::vector<std::size_t>> {
        std::vector<std::size_t> rev;
        int cur = from;
        while (cur != to) {
            if (!left_from.count(cur)) return std::nullopt;
            std::size_t k = left_from.at(cur);
            rev.push_back(k);
            cur = o.arrows[k].tgt;
            if (cur < to) return std::nullopt;
        }
        return std::vector<std::size_t>(rev.rbegin(), rev.rend());
    };
    for (std::size_t k = 0; k < o.arrows.size(); ++k) {
        const OracleArrow& a = o.arrows[k];
        if (a.kind == ArrowKind::Q) {
            // W_a = a a* p, a*: r -> t with type r = type s, p: s -> ... -> r.
            for (std::size_t m = 0; m < o.arrows.size(); ++m) {
                const OracleArrow& b = o.arrows[m];
                if (b.kind != ArrowKind::QStar || b.graph_arrow != a.graph_arrow || b.tgt != a.src ||
                    type(b.src) != type(a.tgt))
                    continue;
                auto p = left_path(a.tgt, b.src);
                if (!p) continue;
                std::vector<std::size_t> term{k, m};
                term.insert(term.end(), p->begin(), p->end());
                o.terms.push_back({term, 1});
            }
        } else if (a.kind == ArrowKind::QStar) {
            // W_{a*} = a* a p, a: s -> t with type s = type r, p: r -> ... -> s.
            for (std::size_t m = 0; m < o.arrows.size(); ++m) {
                const OracleArrow& b = o.arrows[m];
                if (b.kind != ArrowKind::Q || b.graph_arrow != a.graph_arrow || b.tgt != a.src ||
                    type(b.src) != type(a.tgt))
                    continue;
                auto p = left_path(a.tgt, b.src);
                if (!p) continue;
                std::vector<std::size_t> term{k, m};
                term.insert(term.end(), p->begin(), p->end());
                o.terms.push_back({term, -1});
            }
        }
    }
    return o;
}

// Structure constants of a computed algebra satisfy (xy)z = x(yz) on basis triples.
inline bool associative(const FDAlgebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const SparseVector& xy = a.product(x, y);
            for (std::size_t z = 0; z < n; ++z) {
                SparseVector left, right;
                for (const auto& [k, c] : xy) axpy(left, c, a.product(k, z));
                for (const auto& [k, c] : a.product(y, z)) axpy(right, c, a.product(x, k));
                if (left != right) return false;
            }
        }
    return true;
}

}  // namespace testsupport

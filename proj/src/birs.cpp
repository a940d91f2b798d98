#include "quivalg/birs.hpp"

#include "quivalg/errors.hpp"

#include <algorithm>

namespace quivalg {

std::string to_string(ArrowKind k) {
    switch (k) {
        case ArrowKind::Left: return "left";
        case ArrowKind::Q: return "Q";
        case ArrowKind::QStar: return "Qstar";
    }
    return "?";
}

std::map<int, int> last_occurrences(const Word& word) {
    std::map<int, int> t;
    for (std::size_t p = 0; p < word.size(); ++p) t[word[p]] = static_cast<int>(p + 1);
    return t;
}

Quiver admissible_orientation(const Quiver& graph, const Word& word) {
    const CoxeterSystem sys = coxeter_system(graph);
    if (!is_reduced(sys, word)) throw NotReduced("word is not reduced");
    const auto t = last_occurrences(word);
    for (int v : graph.vertices())
        if (!t.count(v)) throw UnusedVertex("vertex " + std::to_string(v) + " does not occur in the word");
    std::vector<Arrow> arrows;
    for (Arrow a : graph.arrows()) {
        if (a.src == a.tgt) throw InvalidGraph("loop at vertex " + std::to_string(a.src));
        if (t.at(a.src) > t.at(a.tgt)) std::swap(a.src, a.tgt);
        arrows.push_back(a);
    }
    return build_quiver(graph.vertices(), std::move(arrows));
}

namespace {

struct Planned {
    ArrowKind kind;
    int graph_arrow;  // -1 for left arrows
    int src, tgt;
    std::string name;
};

}  // namespace

BirsQP build_birs_qp(const Quiver& graph, const Word& word) {
    if (word.empty()) throw NotReduced("empty word");
    const CoxeterSystem sys = coxeter_system(graph);
    if (!is_reduced(sys, word)) throw NotReduced("word is not reduced");
    const auto last = last_occurrences(word);
    VertexSet unused;
    for (int v : graph.vertices())
        if (!last.count(v)) unused.insert(v);
    const Quiver orient = admissible_orientation(full_subquiver(graph, unused), word);

    const int l = static_cast<int>(word.size());
    auto type = [&](int p) { return word[static_cast<std::size_t>(p - 1)]; };
    auto next_of_type = [&](int p, int i) {
        for (int q = p + 1; q <= l; ++q)
            if (type(q) == i) return q;
        return l + 1;
    };
    auto prev_of_type = [&](int p, int i) {
        for (int q = p - 1; q >= 1; --q)
            if (type(q) == i) return q;
        return 0;
    };
    // Last position of type `want` strictly between p and the next position of type `stop`.
    auto window_last = [&](int p, int stop, int want) {
        const int end = next_of_type(p, stop);
        int found = 0;
        for (int q = p + 1; q < end; ++q)
            if (type(q) == want) found = q;
        return found;
    };

    std::vector<Planned> left, qs, stars;
    for (int s = 1; s <= l; ++s)
        if (int t = prev_of_type(s, type(s)); t > 0)
            left.push_back({ArrowKind::Left, -1, s, t, "L" + std::to_string(s) + ">" + std::to_string(t)});
    std::sort(left.begin(), left.end(), [&](const Planned& a, const Planned& b) {
        return std::pair(type(a.src), a.src) < std::pair(type(b.src), b.src);
    });
    for (const auto& a : orient.arrows()) {
        const std::string base = orient.label(a.id);
        for (int t = 1; t <= l; ++t) {
            if (type(t) == a.src)
                if (int s = window_last(t, a.src, a.tgt); s > 0)
                    qs.push_back({ArrowKind::Q, a.id, t, s, base + ":" + std::to_string(t) + ">" + std::to_string(s)});
            if (type(t) == a.tgt)
                if (int s = window_last(t, a.tgt, a.src); s > 0)
                    stars.push_back(
                        {ArrowKind::QStar, a.id, t, s, base + "*:" + std::to_string(t) + ">" + std::to_string(s)});
        }
    }

    BirsQP out;
    out.word = word;
    out.orientation = orient;
    out.last_occurrence = last;
    std::vector<int> vertices;
    for (int p = 1; p <= l; ++p) {
        vertices.push_back(p);
        out.position_type[p] = type(p);
    }
    std::vector<Arrow> arrows;
    DegreeMap phi;
    std::map<std::pair<int, int>, int> left_id;  // (src, tgt) -> id
    int next_id = 1;
    for (const auto* group : {&left, &qs, &stars})
        for (const Planned& sp : *group) {
            const int id = next_id++;
            arrows.push_back(Arrow{id, sp.src, sp.tgt, sp.name});
            out.kinds[id] = sp.kind;
            phi[id] = sp.kind == ArrowKind::QStar ? 1 : 0;
            if (sp.kind == ArrowKind::Left)
                left_id[{sp.src, sp.tgt}] = id;
            else
                out.graph_arrow[id] = sp.graph_arrow;
        }
    Quiver qw = build_quiver(vertices, arrows);

    // Word of left arrows from position `from` down to `to` (same type, to <= from).
    auto left_path = [&](int from, int to) {
        std::vector<int> walk;
        for (int x = from; x != to;) {
            const int y = prev_of_type(x, type(x));
            walk.push_back(left_id.at({x, y}));
            x = y;
        }
        std::reverse(walk.begin(), walk.end());
        return walk;
    };

    Potential w;
    auto find_partner = [&](ArrowKind kind, int graph_arrow, int target) -> const Arrow* {
        for (const auto& a : qw.arrows())
            if (out.kinds.at(a.id) == kind && out.graph_arrow.at(a.id) == graph_arrow && a.tgt == target) return &a;
        return nullptr;
    };
    for (const auto& a : qw.arrows()) {
        const ArrowKind k = out.kinds.at(a.id);
        if (k == ArrowKind::Left) continue;
        const bool is_q = k == ArrowKind::Q;
        // W_a = a a* p with a*: r -> t(a) ... p: s -> r; W_{a*} = a* a p symmetric, with a minus sign.
        const Arrow* partner = find_partner(is_q ? ArrowKind::QStar : ArrowKind::Q, out.graph_arrow.at(a.id), a.src);
        if (!partner) continue;
        std::vector<int> cyc{a.id, partner->id};
        const auto p = left_path(a.tgt, partner->src);
        cyc.insert(cyc.end(), p.begin(), p.end());
        w.add(Path::from_word(qw, cyc), is_q ? 1 : -1);
    }

    VertexSet f0;
    for (const auto& [i, t] : last) f0.insert(t);
    out.qp = make_qp(std::move(qw), std::move(w), f0, phi);
    out.hypotheses = check_hypotheses(out.qp, f0);
    if (!out.hypotheses.all_pass())
        throw HypothesisViolated("internal consistency: hypotheses fail for a reduced word");
    return out;
}

}  // namespace quivalg

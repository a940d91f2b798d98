#include "quivalg/quiver.hpp"

#include "quivalg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace quivalg {

bool Quiver::has_vertex(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

const Arrow& Quiver::arrow(int id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownArrow("arrow " + std::to_string(id));
    return arrows_[it->second];
}

std::string Quiver::label(int id) const {
    const Arrow& a = arrow(id);
    return a.name ? *a.name : std::to_string(id);
}

std::optional<int> Quiver::find_by_name(const std::string& name) const {
    for (const auto& a : arrows_)
        if (a.name && *a.name == name) return a.id;
    return std::nullopt;
}

std::vector<int> Quiver::arrows_from(int v) const {
    std::vector<int> out;
    for (const auto& a : arrows_)
        if (a.src == v) out.push_back(a.id);
    return out;
}

std::vector<int> Quiver::arrows_to(int v) const {
    std::vector<int> out;
    for (const auto& a : arrows_)
        if (a.tgt == v) out.push_back(a.id);
    return out;
}

Quiver build_quiver(std::vector<int> vertices, std::vector<Arrow> arrows) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
    Quiver q;
    q.vertices_ = std::move(vertices);
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const Arrow& a = arrows[i];
        if (i > 0 && arrows[i - 1].id == a.id) throw DuplicateArrowId("arrow id " + std::to_string(a.id));
        if (!q.has_vertex(a.src) || !q.has_vertex(a.tgt))
            throw DanglingArrow("arrow " + std::to_string(a.id) + " has an undeclared endpoint");
        q.index_[a.id] = i;
    }
    q.arrows_ = std::move(arrows);
    return q;
}

FrozenData freeze(const Quiver& q, const VertexSet& frozen_vertices) {
    for (int v : frozen_vertices)
        if (!q.has_vertex(v)) throw UnknownVertex("frozen vertex " + std::to_string(v));
    FrozenData f{frozen_vertices, {}};
    for (const auto& a : q.arrows())
        if (frozen_vertices.count(a.src) && frozen_vertices.count(a.tgt)) f.arrows.insert(a.id);
    return f;
}

Quiver full_subquiver(const Quiver& q, const VertexSet& deleted) {
    for (int v : deleted)
        if (!q.has_vertex(v)) throw UnknownVertex("vertex " + std::to_string(v));
    std::vector<int> vs;
    for (int v : q.vertices())
        if (!deleted.count(v)) vs.push_back(v);
    std::vector<Arrow> as;
    for (const auto& a : q.arrows())
        if (!deleted.count(a.src) && !deleted.count(a.tgt)) as.push_back(a);
    return build_quiver(std::move(vs), std::move(as));
}

Quiver opposite(const Quiver& q) {
    std::vector<Arrow> as = q.arrows();
    for (auto& a : as) std::swap(a.src, a.tgt);
    return build_quiver(q.vertices(), std::move(as));
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string to_dot(const Quiver& q, const FrozenData* frozen, const DegreeMap* degrees) {
    std::ostringstream os;
    os << "digraph Q {\n";
    for (int v : q.vertices()) {
        const bool boxed = frozen && frozen->vertices.count(v);
        os << "  " << v << " [shape=" << (boxed ? "box" : "circle") << "];\n";
    }
    for (const auto& a : q.arrows()) {
        std::string label = q.label(a.id);
        if (degrees) {
            auto it = degrees->find(a.id);
            if (it != degrees->end()) label += "|" + std::to_string(it->second);
        }
        os << "  " << a.src << " -> " << a.tgt << " [label=\"" << dot_escape(label) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace quivalg

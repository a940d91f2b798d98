#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace quivalg {

struct Arrow {
    int id = 0;
    int src = 0;
    int tgt = 0;
    std::optional<std::string> name;
    bool operator==(const Arrow&) const = default;
};

using VertexSet = std::set<int>;
using ArrowSet = std::set<int>;
using DegreeMap = std::map<int, int>;  // arrow id -> degree

// Finite quiver; vertices sorted ascending, arrows sorted by id. Build with build_quiver.
class Quiver {
public:
    Quiver() = default;

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    bool has_vertex(int v) const;
    bool has_arrow(int id) const { return index_.count(id) != 0; }
    const Arrow& arrow(int id) const;  // throws UnknownArrow
    std::string label(int id) const;   // name if present, else the id
    std::optional<int> find_by_name(const std::string& name) const;
    std::vector<int> arrows_from(int v) const;
    std::vector<int> arrows_to(int v) const;
    int max_arrow_id() const { return arrows_.empty() ? 0 : arrows_.back().id; }

    bool operator==(const Quiver& o) const { return vertices_ == o.vertices_ && arrows_ == o.arrows_; }

private:
    friend Quiver build_quiver(std::vector<int> vertices, std::vector<Arrow> arrows);
    std::vector<int> vertices_;
    std::vector<Arrow> arrows_;
    std::map<int, std::size_t> index_;
};

Quiver build_quiver(std::vector<int> vertices, std::vector<Arrow> arrows);

struct FrozenData {
    VertexSet vertices;  // F0
    ArrowSet arrows;     // F1: arrows with both ends in F0
    bool operator==(const FrozenData&) const = default;
};

FrozenData freeze(const Quiver& q, const VertexSet& frozen_vertices);
Quiver full_subquiver(const Quiver& q, const VertexSet& deleted);

// Quiver with reversed arrows (same ids and names).
Quiver opposite(const Quiver& q);

std::string to_dot(const Quiver& q, const FrozenData* frozen = nullptr, const DegreeMap* degrees = nullptr);

}  // namespace quivalg

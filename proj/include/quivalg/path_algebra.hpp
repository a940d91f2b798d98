#pragma once

#include "quivalg/linalg.hpp"
#include "quivalg/quiver.hpp"
#include "quivalg/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace quivalg {

// A path a_1 a_2 ... a_k. The rightmost arrow acts first, so source = s(a_k) and
// target = t(a_1). The empty word is the stationary path at source == target.
struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;

    static Path stationary(int v) { return Path{v, v, {}}; }
    static Path of_arrow(const Quiver& q, int arrow_id);
    // Validates arrow ids and composability; throws UnknownArrow / InvalidRelation.
    static Path from_word(const Quiver& q, const std::vector<int>& word);

    std::size_t length() const { return arrows.size(); }
    bool is_cycle() const { return source == target && !arrows.empty(); }

    bool operator==(const Path&) const = default;
    // Deglex: length first, then lexicographic on arrow ids, then endpoints.
    bool operator<(const Path& o) const;
};

// p·q (q acts first); nullopt when s(p) != t(q).
std::optional<Path> compose(const Path& p, const Path& q);

std::string to_string(const Quiver& q, const Path& p);

// Element of kQ: finite combination of paths; zero coefficients never stored.
struct PathElement {
    std::map<Path, Rational> terms;

    PathElement() = default;
    explicit PathElement(Path p, Rational c = 1);

    bool is_zero() const { return terms.empty(); }
    void add(const Path& p, const Rational& c);
    std::size_t max_length() const;
    // e_target · x · e_source
    PathElement component(int target, int source) const;
    // All (target, source) pairs occurring.
    std::vector<std::pair<int, int>> endpoint_pairs() const;

    PathElement operator+(const PathElement& o) const;
    PathElement operator-(const PathElement& o) const;
    PathElement operator*(const PathElement& o) const;
    PathElement scaled(const Rational& c) const;
    bool operator==(const PathElement&) const = default;
};

std::string to_string(const Quiver& q, const PathElement& x);

struct AlgebraPresentation {
    Quiver quiver;
    std::vector<PathElement> relations;
    std::optional<DegreeMap> degrees;
};

// A finite-dimensional algebra with a basis of path words and a full
// multiplication table. Arrow and vertex images record how the quiver maps in
// (an arrow may vanish, e.g. in a quotient of a preprojective algebra).
struct FDAlgebra {
    Quiver quiver;
    std::vector<Path> basis;
    std::vector<int> lengths;
    std::optional<std::vector<int>> degrees;
    std::vector<SparseVector> table;  // table[x * dim + y] = x·y
    std::map<int, SparseVector> vertex_images;
    std::map<int, SparseVector> arrow_images;
    int stabilized_length = 0;

    std::size_t dim() const { return basis.size(); }
    const SparseVector& product(std::size_t x, std::size_t y) const { return table[x * dim() + y]; }
    SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
    SparseVector image(const Path& p) const;
    SparseVector image(const PathElement& x) const;
    // Basis indices x with e_target · x · e_source = x.
    std::vector<std::size_t> block(int target, int source) const;
};

// Certified finite-dimensional quotient kQ/<relations>. Throws NotStabilized
// when no certificate is found with paths of length <= max_len.
FDAlgebra quotient_basis(const AlgebraPresentation& pres, int max_len = 32);
std::size_t algebra_dimension(const AlgebraPresentation& pres, int max_len = 32);

// All paths of length exactly n (sorted deglex).
std::vector<Path> paths_of_length(const Quiver& q, std::size_t n);

}  // namespace quivalg

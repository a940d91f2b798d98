#pragma once

#include "quivalg/linalg.hpp"
#include "quivalg/quiver.hpp"

#include <optional>
#include <vector>

namespace quivalg {

using Word = std::vector<int>;

inline constexpr int kInfinity = 0;  // m_ij for two or more edges

// Coxeter system of an undirected multigraph (arrow directions ignored, loops ignored).
struct CoxeterSystem {
    std::vector<int> generators;  // graph vertices, ascending
    Matrix m;                     // Coxeter matrix, kInfinity for ∞
    Matrix form;                  // B_ij = -cos(pi / m_ij)

    std::size_t index_of(int vertex) const;  // throws UnknownVertex
    int order(int i, int j) const;           // m_ij by vertex id
};

CoxeterSystem coxeter_system(const Quiver& graph);

// Matrix of s_i in the simple-root basis (acting on column vectors).
Matrix reflection(const CoxeterSystem& sys, int generator);
Matrix element_matrix(const CoxeterSystem& sys, const Word& word);

struct ReducedDetail {
    bool reduced = true;
    std::optional<std::size_t> first_failure;  // 0-based position p with w_{<p}(α_{u_p}) < 0
    bool dichotomy = true;                     // every root seen was positive or negative
    std::vector<Vector> roots;                 // w_{<p}(α_{u_p}) for each p
};

ReducedDetail reduced_detail(const CoxeterSystem& sys, const Word& word);
bool is_reduced(const CoxeterSystem& sys, const Word& word);
Word reduce_word(const CoxeterSystem& sys, const Word& word);
bool elements_equal(const CoxeterSystem& sys, const Word& w1, const Word& w2);

// Shortlex-minimal reduced words of all group elements; throws GroupTooLarge past cap.
std::vector<Word> enumerate_group(const CoxeterSystem& sys, std::size_t cap);

// Words obtained by one braid move (commutation or length-3 braid).
std::vector<Word> braid_neighbors(const CoxeterSystem& sys, const Word& word);

}  // namespace quivalg

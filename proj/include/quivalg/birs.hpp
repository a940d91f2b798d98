#pragma once

#include "quivalg/coxeter.hpp"
#include "quivalg/potential.hpp"

#include <map>
#include <string>

namespace quivalg {

enum class ArrowKind { Left, Q, QStar };
std::string to_string(ArrowKind k);

// The graded frozen QP (Q_w, W_w, F, φ) of a reduced word. Vertices are the
// positions 1..l; a vertex's type is the letter at that position.
struct BirsQP {
    FrozenQP qp;
    Word word;
    Quiver orientation;                // admissible orientation of the word's support
    std::map<int, int> position_type;  // vertex -> letter
    std::map<int, ArrowKind> kinds;
    std::map<int, int> graph_arrow;    // Q / Q* arrow -> arrow of the orientation it comes from
    std::map<int, int> last_occurrence;
    HypothesisReport hypotheses;
};

std::map<int, int> last_occurrences(const Word& word);

// Edge {i,j} becomes i->j iff t_i < t_j. Throws NotReduced, UnusedVertex, InvalidGraph (loops).
Quiver admissible_orientation(const Quiver& graph, const Word& word);

// Vertices of the graph that do not occur in the word are deleted first; the
// construction only involves letters of the word.
BirsQP build_birs_qp(const Quiver& graph, const Word& word);

}  // namespace quivalg

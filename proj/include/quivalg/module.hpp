#pragma once

#include "quivalg/linalg.hpp"
#include "quivalg/path_algebra.hpp"

#include <map>
#include <optional>
#include <vector>

namespace quivalg {

// A finite-dimensional right module over a path algebra kQ/I.
//
// The space at vertex v is M e_v. Arrow a acts on the right, sending M e_{t(a)}
// to M e_{s(a)}, so mats[a] has shape dims[s(a)] x dims[t(a)] and acts on
// column vectors. A path a_1...a_k acts by mats[a_k] * ... * mats[a_1].
struct FDModule {
    Quiver quiver;
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> mats;
    std::optional<std::map<int, std::vector<int>>> grading;

    std::size_t dim(int v) const;
    std::size_t total_dim() const;
    std::vector<int> dimension_vector() const;  // in vertex order
};

FDModule zero_module(const Quiver& q);
FDModule simple_module(const Quiver& q, int vertex);

// Shapes, relations (if given) and homogeneity of the grading (if degrees given). Throws InvalidModule.
void validate_module(const FDModule& m, const AlgebraPresentation* pres = nullptr);

Matrix path_action(const FDModule& m, const Path& p);  // M e_{t(p)} -> M e_{s(p)}

// Vertex-wise linear maps f_v : M e_v -> N e_v; a homomorphism satisfies
// f_{s(a)} M_a = N_a f_{t(a)} for every arrow.
struct ModuleMap {
    std::map<int, Matrix> comps;

    bool is_zero() const;
    bool operator==(const ModuleMap&) const = default;
};

ModuleMap zero_map(const FDModule& from, const FDModule& to);
ModuleMap identity_map(const FDModule& m);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap add(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale(const ModuleMap& f, const Rational& c);
bool is_homomorphism(const FDModule& from, const FDModule& to, const ModuleMap& f);
Vector flatten(const ModuleMap& f);  // vertex order, row-major

std::vector<ModuleMap> hom_space(const FDModule& from, const FDModule& to);
// Maps of degree d: degree-k basis vectors go to degree k+d. Both modules must be graded.
std::vector<ModuleMap> hom_space_of_degree(const FDModule& from, const FDModule& to, int d);
std::map<int, std::vector<ModuleMap>> graded_hom_space(const FDModule& from, const FDModule& to);

struct DirectSum {
    FDModule module;
    std::vector<FDModule> parts;
    std::vector<std::map<int, std::size_t>> offsets;  // offsets[k][v]: start of part k at v
    std::vector<ModuleMap> inclusions, projections;
};
DirectSum direct_sum(const std::vector<FDModule>& parts);
// blocks[r][c] : from.parts[c] -> to.parts[r]
ModuleMap block_map(const DirectSum& from, const DirectSum& to, const std::vector<std::vector<ModuleMap>>& blocks);

struct Submodule {
    FDModule module;
    ModuleMap inclusion;
};
struct Quotient {
    FDModule module;
    ModuleMap projection;
    std::map<int, std::vector<std::size_t>> representatives;  // coordinate of M lifting each basis vector
};

// Smallest submodule containing the given vectors (per vertex). The result is
// graded when the ambient module is and the submodule is a graded subspace.
Submodule submodule_generated(const FDModule& m, const std::map<int, std::vector<Vector>>& generators);
Submodule kernel(const FDModule& from, const FDModule& to, const ModuleMap& f);
Submodule image(const FDModule& from, const FDModule& to, const ModuleMap& f);
Quotient quotient(const FDModule& m, const Submodule& sub);
// X -> M landing in S gives X -> S; throws InvalidModule otherwise.
ModuleMap factor_through_inclusion(const ModuleMap& f, const Submodule& sub);
// M -> Y killing the kernel of M -> Q gives Q -> Y; throws InvalidModule otherwise.
ModuleMap factor_through_projection(const ModuleMap& f, const Quotient& q);

// e_i A as a right A-module; the basis at vertex v is A.block(i, v).
FDModule projective_module(const FDAlgebra& a, int vertex);
// y -> x·y from e_from A to e_to A, for x in e_to A e_from.
ModuleMap left_multiplication(const FDAlgebra& a, const SparseVector& x, int from, int to);

// M lies in Sub N: the maps M -> N have no common kernel.
bool is_cogenerated_by(const FDModule& m, const FDModule& n);

struct ComplexReport {
    bool exact = true;
    std::vector<std::size_t> homology;  // homology dims at interior positions 1..n-2
};
// maps[k] : modules[k] -> modules[k+1]. Throws NotAComplex(k) if maps[k+1]∘maps[k] != 0.
ComplexReport check_complex_exact(const std::vector<FDModule>& modules, const std::vector<ModuleMap>& maps);

}  // namespace quivalg

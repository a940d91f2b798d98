#include "quivalg/resolution.hpp"

#include "quivalg/errors.hpp"

namespace quivalg {

std::vector<SparseVector> algebra_radical(const FDAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<Rational> trace(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t w = 0; w < n; ++w) {
            const SparseVector& p = a.product(k, w);
            auto it = p.find(w);
            if (it != p.end()) trace[k] += it->second;
        }
    Matrix g(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (const auto& [k, c] : a.product(x, y)) g(x, y) += c * trace[k];
    std::vector<SparseVector> out;
    for (const Vector& v : nullspace(g)) {
        SparseVector s;
        for (std::size_t k = 0; k < n; ++k)
            if (!is_zero(v[k])) s[k] = v[k];
        out.push_back(std::move(s));
    }
    return out;
}

static Matrix action(const FDAlgebra& a, const FDModule& m, const SparseVector& x, int target, int source) {
    Matrix acc(m.dim(source), m.dim(target));
    for (const auto& [k, c] : x) acc = acc + path_action(m, a.basis[k]).scaled(c);
    return acc;
}

Submodule module_radical(const FDAlgebra& a, const FDModule& m, const std::vector<SparseVector>& rad) {
    std::map<int, std::vector<Vector>> gens;
    for (const SparseVector& r : rad) {
        if (r.empty()) continue;
        const Path& p = a.basis[r.begin()->first];
        int t = p.target, s = p.source;
        if (m.dim(t) == 0 || m.dim(s) == 0) continue;
        Matrix act = action(a, m, r, t, s);
        for (std::size_t c = 0; c < act.cols(); ++c) gens[s].push_back(act.col(c));
    }
    return submodule_generated(m, gens);
}

ProjectiveCover projective_cover(const FDAlgebra& a, const FDModule& m, const std::vector<SparseVector>& rad) {
    Submodule r = module_radical(a, m, rad);
    ProjectiveCover cover;
    std::vector<FDModule> parts;
    std::vector<Vector> gens;
    std::map<int, FDModule> cache;
    for (int v : m.quiver.vertices()) {
        Subspace s(m.dim(v));
        const Matrix& inc = r.inclusion.comps.at(v);
        for (std::size_t c = 0; c < inc.cols(); ++c) s.insert(inc.col(c));
        for (std::size_t c : s.free_columns()) {
            Vector e(m.dim(v));
            e[c] = 1;
            gens.push_back(std::move(e));
            cover.generator_vertices.push_back(v);
            if (!cache.count(v)) cache.emplace(v, projective_module(a, v));
            parts.push_back(cache.at(v));
        }
    }
    if (parts.empty()) {
        cover.projective.module = zero_module(m.quiver);
        cover.map = zero_map(cover.projective.module, m);
        return cover;
    }
    cover.projective = direct_sum(parts);
    cover.map = zero_map(cover.projective.module, m);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        int v = cover.generator_vertices[k];
        for (int w : m.quiver.vertices()) {
            auto blk = a.block(v, w);
            for (std::size_t j = 0; j < blk.size(); ++j) {
                Vector img = path_action(m, a.basis[blk[j]]).apply(gens[k]);
                std::size_t col = cover.projective.offsets[k].at(w) + j;
                for (std::size_t r2 = 0; r2 < img.size(); ++r2) cover.map.comps[w](r2, col) = img[r2];
            }
        }
    }
    return cover;
}

Resolution projective_resolution(const FDAlgebra& a, const FDModule& m, int bound) {
    auto rad = algebra_radical(a);
    Resolution res;
    FDModule cur = m;
    if (cur.total_dim() == 0) {
        res.projective_dimension = 0;
        return res;
    }
    for (int k = 0; k <= bound; ++k) {
        ProjectiveCover cover = projective_cover(a, cur, rad);
        std::map<int, std::size_t> mult;
        for (int v : cover.generator_vertices) ++mult[v];
        res.terms.push_back(std::move(mult));
        FDModule next = kernel(cover.projective.module, cur, cover.map).module;
        if (next.total_dim() == 0) {
            res.projective_dimension = k;
            return res;
        }
        cur = std::move(next);
    }
    return res;
}

std::optional<int> global_dimension(const FDAlgebra& a, int bound) {
    int best = 0;
    for (int v : a.quiver.vertices()) {
        if (a.block(v, v).empty()) continue;  // e_v = 0
        auto res = projective_resolution(a, simple_module(a.quiver, v), bound);
        if (!res.projective_dimension) return std::nullopt;
        best = std::max(best, *res.projective_dimension);
    }
    return best;
}

FDModule idempotent_quotient(const FDAlgebra& a, int i, const VertexSet& frozen) {
    FDModule p = projective_module(a, i);
    std::map<int, std::vector<Vector>> gens;
    for (int f : frozen) {
        for (std::size_t k = 0; k < p.dim(f); ++k) {
            Vector e(p.dim(f));
            e[k] = 1;
            gens[f].push_back(std::move(e));
        }
    }
    return quotient(p, submodule_generated(p, gens)).module;
}

}  // namespace quivalg

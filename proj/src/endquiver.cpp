#include "quivalg/endquiver.hpp"

#include "quivalg/errors.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace quivalg {

namespace {

struct Block {
    std::vector<ModuleMap> maps;
    std::vector<int> degrees;
    std::size_t offset = 0;  // in the basis of E
    Coordinates coords;
};

}  // namespace

EndQuiver end_gabriel_quiver(const std::vector<FDModule>& summands) {
    const std::size_t n = summands.size();
    bool graded = std::all_of(summands.begin(), summands.end(), [](const FDModule& m) { return m.grading.has_value(); });

    // blocks[i][j] = Hom(T_i, T_j)
    std::vector<std::vector<Block>> blocks(n, std::vector<Block>(n));
    EndQuiver out;
    out.hom_dims.assign(n, std::vector<std::size_t>(n));
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Block& b = blocks[i][j];
            if (graded) {
                for (auto& [d, maps] : graded_hom_space(summands[i], summands[j]))
                    for (auto& f : maps) {
                        b.maps.push_back(std::move(f));
                        b.degrees.push_back(d);
                    }
            } else {
                b.maps = hom_space(summands[i], summands[j]);
                b.degrees.assign(b.maps.size(), 0);
            }
            std::vector<Vector> flat;
            for (const auto& f : b.maps) flat.push_back(flatten(f));
            b.coords = Coordinates(flat);
            b.offset = total;
            total += b.maps.size();
            out.hom_dims[i][j] = b.maps.size();
        }
    out.end_dim = total;

    // Product g∘f for f in Hom(T_i,T_j), g in Hom(T_j,T_k), in coordinates of Hom(T_i,T_k).
    std::map<std::array<std::size_t, 5>, Vector> memo;
    auto product = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t f, std::size_t g) -> const Vector& {
        auto [it, fresh] = memo.try_emplace({i, j, k, f, g});
        if (fresh) {
            auto c = blocks[i][k].coords.solve(flatten(compose(blocks[j][k].maps[g], blocks[i][j].maps[f])));
            if (!c) throw InvalidModule("composition left the Hom space");
            it->second = std::move(*c);
        }
        return it->second;
    };

    // tr(L_z) for z in End(T_j): sum over w in Hom(T_i,T_j) of the w-coefficient of z∘w.
    std::vector<std::vector<Rational>> trace(n);
    for (std::size_t j = 0; j < n; ++j) {
        trace[j].assign(blocks[j][j].maps.size(), Rational(0));
        for (std::size_t z = 0; z < blocks[j][j].maps.size(); ++z)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t w = 0; w < blocks[i][j].maps.size(); ++w) trace[j][z] += product(i, j, j, w, z)[w];
    }

    // The trace form pairs Hom(T_i,T_j) with Hom(T_j,T_i): G(x,y) = tr(L_{x∘y}).
    // rad[i][j]: basis (in block coordinates) of the radical part of Hom(T_i,T_j).
    std::vector<std::vector<std::vector<Vector>>> rad(n, std::vector<std::vector<Vector>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t hx = blocks[i][j].maps.size(), hy = blocks[j][i].maps.size();
            if (hx == 0) continue;
            Matrix g(std::max<std::size_t>(hy, 1), hx);
            // x ∈ Hom(T_i,T_j), y ∈ Hom(T_j,T_i): x∘y ∈ End(T_j).
            for (std::size_t y = 0; y < hy; ++y)
                for (std::size_t x = 0; x < hx; ++x) {
                    const Vector& c = product(j, i, j, y, x);
                    Rational s = 0;
                    for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * trace[j][k];
                    g(y, x) = s;
                }
            rad[i][j] = nullspace(g);
        }

    std::size_t rad_total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t top = blocks[i][i].maps.size() - rad[i][i].size();
        if (top != 1) throw NotLocal("End(T_" + std::to_string(i + 1) + ") has top of dimension " + std::to_string(top));
        for (std::size_t j = 0; j < n; ++j) {
            rad_total += rad[i][j].size();
            if (i != j && rad[i][j].size() != blocks[i][j].maps.size())
                throw IsomorphicSummands("T_" + std::to_string(i + 1) + " and T_" + std::to_string(j + 1));
        }
    }
    out.radical_dim = rad_total;

    auto degree_of = [&](std::size_t i, std::size_t j, const Vector& v) {
        std::optional<int> d;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (is_zero(v[k])) continue;
            if (d && *d != blocks[i][j].degrees[k]) throw InvalidModule("radical element is not homogeneous");
            d = blocks[i][j].degrees[k];
        }
        return d.value_or(0);
    };

    // rad² in block (i,k) is spanned by rad(j,k)∘rad(i,j).
    std::vector<Arrow> arrows;
    DegreeMap degrees;
    int next_id = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t h = blocks[i][k].maps.size();
            if (h == 0) continue;
            std::map<int, Subspace> rad_by_deg, rad2_by_deg;
            for (const Vector& v : rad[i][k]) {
                int d = degree_of(i, k, v);
                rad_by_deg.try_emplace(d, Subspace(h)).first->second.insert(v);
            }
            for (std::size_t j = 0; j < n; ++j)
                for (const Vector& f : rad[i][j])
                    for (const Vector& g : rad[j][k]) {
                        Vector sum(h);
                        for (std::size_t a = 0; a < f.size(); ++a) {
                            if (is_zero(f[a])) continue;
                            for (std::size_t b = 0; b < g.size(); ++b) {
                                if (is_zero(g[b])) continue;
                                const Vector& c = product(i, j, k, a, b);
                                for (std::size_t t = 0; t < h; ++t) sum[t] += f[a] * g[b] * c[t];
                            }
                        }
                        if (is_zero(sum)) continue;
                        int d = degree_of(i, k, sum);
                        rad2_by_deg.try_emplace(d, Subspace(h)).first->second.insert(std::move(sum));
                    }
            for (const auto& [d, sp] : rad_by_deg) {
                std::size_t r2 = rad2_by_deg.count(d) ? rad2_by_deg.at(d).dim() : 0;
                for (std::size_t c = r2; c < sp.dim(); ++c) {
                    Arrow a{++next_id, static_cast<int>(i + 1), static_cast<int>(k + 1), std::nullopt};
                    if (graded) degrees[a.id] = d;
                    arrows.push_back(a);
                }
            }
        }
    std::vector<int> verts;
    for (std::size_t i = 0; i < n; ++i) verts.push_back(static_cast<int>(i + 1));
    out.quiver = build_quiver(verts, arrows);
    if (graded) out.degrees = degrees;
    return out;
}

}  // namespace quivalg

#include "quivalg/preprojective.hpp"

#include "quivalg/errors.hpp"

#include <algorithm>
#include <string>

namespace quivalg {

DoubleQuiver double_quiver(const Quiver& oriented) {
    DoubleQuiver dq;
    std::vector<Arrow> arrows = oriented.arrows();
    int next = oriented.max_arrow_id();
    for (const Arrow& a : oriented.arrows()) {
        Arrow s{++next, a.tgt, a.src, oriented.label(a.id) + "*"};
        dq.star[a.id] = s.id;
        dq.unstar[s.id] = a.id;
        dq.degrees[a.id] = 0;
        dq.degrees[s.id] = 1;
        arrows.push_back(s);
    }
    dq.quiver = build_quiver(oriented.vertices(), arrows);
    return dq;
}

static void require_acyclic(const Quiver& q) {
    std::map<int, int> indeg;
    for (int v : q.vertices()) indeg[v] = 0;
    for (const Arrow& a : q.arrows()) ++indeg[a.tgt];
    std::vector<int> ready;
    for (auto [v, d] : indeg)
        if (d == 0) ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++seen;
        for (int a : q.arrows_from(v))
            if (--indeg[q.arrow(a).tgt] == 0) ready.push_back(q.arrow(a).tgt);
    }
    if (seen != q.vertices().size()) throw OrientedCycle("the oriented graph has an oriented cycle");
}

namespace {

struct RelTerm {
    Rational coef;
    int left, right;  // the word left·right
};

// rho_k = sum_{t(a)=k} a a* - sum_{s(a)=k} a* a
std::map<int, std::vector<RelTerm>> vertex_relations(const Quiver& oriented, const DoubleQuiver& dq) {
    std::map<int, std::vector<RelTerm>> rho;
    for (const Arrow& a : oriented.arrows()) {
        int s = dq.star.at(a.id);
        rho[a.tgt].push_back({Rational(1), a.id, s});
        rho[a.src].push_back({Rational(-1), s, a.id});
    }
    return rho;
}

}  // namespace

AlgebraPresentation preprojective_presentation(const Quiver& oriented) {
    require_acyclic(oriented);
    DoubleQuiver dq = double_quiver(oriented);
    AlgebraPresentation pres;
    pres.quiver = dq.quiver;
    pres.degrees = dq.degrees;
    for (const auto& [k, terms] : vertex_relations(oriented, dq)) {
        PathElement r;
        for (const RelTerm& t : terms) r.add(Path::from_word(dq.quiver, {t.left, t.right}), t.coef);
        if (!r.is_zero()) pres.relations.push_back(std::move(r));
    }
    return pres;
}

namespace {

using Key = std::pair<std::size_t, int>;  // (element of the previous layer, arrow)

struct Layer {
    std::vector<std::vector<int>> words;
    std::vector<int> target, source, degree;
    std::vector<Key> parent;
    std::map<Key, SparseVector> right;  // b·β for b in the previous layer
    std::map<Key, SparseVector> left;   // α·b for b in the previous layer
    std::size_t size() const { return words.size(); }
};

// Path-length graded pieces of the preprojective algebra with normal forms for
// right and left multiplication by arrows.
class GradedLambda {
public:
    GradedLambda(const Quiver& oriented, const DoubleQuiver& dq) : dq_(dq), rho_(vertex_relations(oriented, dq)) {
        Layer zero;
        for (int v : dq.quiver.vertices()) {
            zero.words.push_back({});
            zero.target.push_back(v);
            zero.source.push_back(v);
            zero.degree.push_back(0);
            zero.parent.push_back({0, 0});
        }
        layers_.push_back(std::move(zero));
    }

    const Layer& layer(std::size_t n) const { return layers_.at(n); }
    std::size_t count() const { return layers_.size(); }

    SparseVector right_mul(std::size_t n, const SparseVector& x, int beta) const {
        SparseVector out;
        for (const auto& [b, c] : x) {
            auto it = layers_.at(n + 1).right.find({b, beta});
            if (it != layers_.at(n + 1).right.end()) axpy(out, c, it->second);
        }
        return out;
    }

    void extend() {
        const std::size_t n = layers_.size();
        const Layer& prev = layers_.back();
        const Quiver& q = dq_.quiver;
        std::vector<Key> pairs;
        std::map<Key, std::size_t> pair_index;
        for (std::size_t b = 0; b < prev.size(); ++b)
            for (int beta : q.arrows_to(prev.source[b])) {
                pair_index[{b, beta}] = pairs.size();
                pairs.push_back({b, beta});
            }
        Subspace rel(pairs.size());
        if (n >= 2) {
            const Layer& pp = layers_[n - 2];
            for (std::size_t c = 0; c < pp.size(); ++c) {
                auto it = rho_.find(pp.source[c]);
                if (it == rho_.end()) continue;
                Vector row(pairs.size());
                for (const RelTerm& t : it->second) {
                    auto img = right_mul(n - 2, SparseVector{{c, Rational(1)}}, t.left);
                    for (const auto& [b, val] : img) row[pair_index.at({b, t.right})] += t.coef * val;
                }
                rel.insert(std::move(row));
            }
        }
        Layer next;
        std::vector<std::size_t> free = rel.free_columns();
        std::map<std::size_t, std::size_t> position;
        for (std::size_t f : free) {
            auto [b, beta] = pairs[f];
            position[f] = next.size();
            auto w = prev.words[b];
            w.push_back(beta);
            next.words.push_back(std::move(w));
            next.target.push_back(prev.target[b]);
            next.source.push_back(q.arrow(beta).src);
            next.degree.push_back(prev.degree[b] + dq_.degrees.at(beta));
            next.parent.push_back(pairs[f]);
        }
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            Vector e(pairs.size());
            e[k] = 1;
            Vector red = rel.reduce(std::move(e));
            SparseVector nf;
            for (std::size_t f : free)
                if (!is_zero(red[f])) nf[position.at(f)] = red[f];
            next.right[pairs[k]] = std::move(nf);
        }
        layers_.push_back(std::move(next));
        Layer& cur = layers_[n];
        const Layer& below = layers_[n - 1];
        // α·b' = (α·b'')·β where b' = b''β; α·e_j = α.
        for (std::size_t b = 0; b < below.size(); ++b) {
            for (int alpha : q.arrows_from(below.target[b])) {
                SparseVector val;
                if (n == 1) {
                    val = cur.right.at({target_index(q.arrow(alpha).tgt), alpha});
                } else {
                    auto [b2, beta] = below.parent[b];
                    val = right_mul(n - 1, below.left.at({b2, alpha}), beta);
                }
                cur.left[{b, alpha}] = std::move(val);
            }
        }
    }

private:
    std::size_t target_index(int v) const {
        const Layer& zero = layers_.front();
        for (std::size_t k = 0; k < zero.size(); ++k)
            if (zero.target[k] == v) return k;
        throw UnknownVertex(std::to_string(v));
    }

    DoubleQuiver dq_;
    std::map<int, std::vector<RelTerm>> rho_;
    std::vector<Layer> layers_;
};

// A graded piece of e_iI inside layer n: either the whole of (e_iΛ)_n or a subspace.
struct Piece {
    bool full = false;
    Subspace space;
};

std::size_t target_of_zero(const GradedLambda& lam, int j) {
    const Layer& zero = lam.layer(0);
    for (std::size_t k = 0; k < zero.size(); ++k)
        if (zero.target[k] == j) return k;
    throw UnknownVertex(std::to_string(j));
}

std::size_t count_with_target(const Layer& l, int i) {
    return static_cast<std::size_t>(std::count(l.target.begin(), l.target.end(), i));
}

}  // namespace

LambdaW lambda_w(const Quiver& oriented, const Word& word, int max_len) {
    require_acyclic(oriented);
    CoxeterSystem sys = coxeter_system(oriented);
    for (int u : word)
        if (!oriented.has_vertex(u)) throw UnknownVertex(std::to_string(u));
    if (!is_reduced(sys, word)) throw NotReduced("word is not reduced");

    LambdaW lw;
    lw.dq = double_quiver(oriented);
    lw.word = word;
    const Quiver& q = lw.dq.quiver;
    GradedLambda lam(oriented, lw.dq);
    const std::size_t l = word.size();

    // pieces[p][n] for step p (1-based; index p-1) describes e_{u_p} I_{w_p} in layer n.
    std::vector<std::vector<Piece>> pieces(l);
    std::vector<std::optional<int>> vanish(l);
    // Which step last touched vertex j before step p; -1 means I_{w_0} = Λ.
    auto previous_step = [&](std::size_t p, int j) -> int {
        for (int s = static_cast<int>(p) - 1; s >= 0; --s)
            if (word[s] == j) return s;
        return -1;
    };
    auto piece_at = [&](int step, std::size_t n) -> const Piece* {
        if (step < 0) return nullptr;  // full
        if (vanish[step] && static_cast<int>(n) >= *vanish[step]) return nullptr;
        return &pieces[step][n];
    };

    int n = 0;
    for (;;) {
        if (n > max_len) throw NotStabilized("Λ_w did not stabilize within length " + std::to_string(max_len));
        if (n > 0) lam.extend();
        const Layer& layer = lam.layer(n);
        for (std::size_t p = 0; p < l; ++p) {
            int i = word[p];
            Piece piece;
            piece.space = Subspace(layer.size());
            if (vanish[p]) {
                piece.full = true;
            } else if (n > 0) {
                for (int alpha : q.arrows_to(i)) {
                    int j = q.arrow(alpha).src;
                    const Piece* below = piece_at(previous_step(p, j), n - 1);
                    const Layer& prev = lam.layer(n - 1);
                    if (!below || below->full) {
                        for (std::size_t b = 0; b < prev.size(); ++b)
                            if (prev.target[b] == j) {
                                Vector v(layer.size());
                                for (const auto& [k, c] : layer.left.at({b, alpha})) v[k] = c;
                                piece.space.insert(std::move(v));
                            }
                    } else {
                        for (const Vector& row : below->space.rows()) {
                            Vector v(layer.size());
                            for (std::size_t b = 0; b < row.size(); ++b) {
                                if (is_zero(row[b])) continue;
                                for (const auto& [k, c] : layer.left.at({b, alpha})) v[k] += row[b] * c;
                            }
                            piece.space.insert(std::move(v));
                        }
                    }
                }
                if (piece.space.dim() == count_with_target(layer, i)) piece.full = true;
            }
            if (piece.full && !vanish[p]) vanish[p] = n;
            pieces[p].push_back(std::move(piece));
        }
        bool done = std::all_of(vanish.begin(), vanish.end(), [&](const auto& v) { return v && n >= *v + 1; });
        if (done) break;
        ++n;
    }
    lw.layers = n;
    for (auto& v : vanish) lw.vanishing_layer.push_back(*v);

    // Basis of T_p: layer elements with target u_p not reduced away by the piece.
    struct Elem {
        std::size_t layer, index;
    };
    std::vector<std::vector<Elem>> elems(l);
    std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> where(l);
    for (std::size_t p = 0; p < l; ++p) {
        for (int m = 0; m < *vanish[p]; ++m) {
            const Layer& layer = lam.layer(m);
            const Subspace& sp = pieces[p][m].space;
            std::vector<bool> pivot(layer.size(), false);
            for (std::size_t c : sp.pivots()) pivot[c] = true;
            for (std::size_t b = 0; b < layer.size(); ++b)
                if (layer.target[b] == word[p] && !pivot[b]) {
                    where[p][{static_cast<std::size_t>(m), b}] = elems[p].size();
                    elems[p].push_back({static_cast<std::size_t>(m), b});
                }
        }
    }
    // x·β in T_p, as coordinates.
    auto reduce_in = [&](std::size_t p, std::size_t m, const SparseVector& x) {
        SparseVector out;
        if (static_cast<int>(m) >= *vanish[p] || x.empty()) return out;
        const Layer& layer = lam.layer(m);
        Vector v(layer.size());
        for (const auto& [k, c] : x) v[k] = c;
        v = pieces[p][m].space.reduce(std::move(v));
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!is_zero(v[k])) out[where[p].at({m, k})] = v[k];
        return out;
    };

    for (std::size_t p = 0; p < l; ++p) {
        FDModule t;
        t.quiver = q;
        t.grading = std::map<int, std::vector<int>>{};
        std::map<int, std::vector<std::size_t>> at;
        for (int v : q.vertices()) (*t.grading)[v] = {};
        for (std::size_t e = 0; e < elems[p].size(); ++e) {
            const Layer& layer = lam.layer(elems[p][e].layer);
            int v = layer.source[elems[p][e].index];
            at[v].push_back(e);
            (*t.grading)[v].push_back(layer.degree[elems[p][e].index]);
        }
        std::map<std::size_t, std::size_t> local;
        for (int v : q.vertices()) {
            t.dims[v] = at[v].size();
            for (std::size_t k = 0; k < at[v].size(); ++k) local[at[v][k]] = k;
        }
        for (const Arrow& beta : q.arrows()) {
            Matrix mat(t.dim(beta.src), t.dim(beta.tgt));
            for (std::size_t c = 0; c < at[beta.tgt].size(); ++c) {
                const Elem& e = elems[p][at[beta.tgt][c]];
                SparseVector img = lam.right_mul(e.layer, SparseVector{{e.index, Rational(1)}}, beta.id);
                for (const auto& [k, coef] : reduce_in(p, e.layer + 1, img)) mat(local.at(k), c) = coef;
            }
            t.mats[beta.id] = std::move(mat);
        }
        lw.summands.push_back(std::move(t));
    }

    // Λ_w = ⊕_j e_jΛ_w, and e_jΛ_w = T_p for the last occurrence p of j.
    FDAlgebra& alg = lw.algebra;
    alg.quiver = q;
    alg.stabilized_length = n;
    alg.degrees = std::vector<int>{};
    std::map<int, std::size_t> last, offset;
    for (std::size_t p = 0; p < l; ++p) last[word[p]] = p;
    for (int j : q.vertices()) {
        offset[j] = alg.basis.size();
        if (!last.count(j)) continue;
        std::size_t p = last.at(j);
        for (const Elem& e : elems[p]) {
            const Layer& layer = lam.layer(e.layer);
            alg.basis.push_back(Path{layer.source[e.index], j, layer.words[e.index]});
            alg.lengths.push_back(static_cast<int>(e.layer));
            alg.degrees->push_back(layer.degree[e.index]);
        }
    }
    const std::size_t d = alg.basis.size();
    std::vector<int> owner(d);
    std::vector<const Elem*> elem_of(d);
    for (int j : q.vertices()) {
        if (!last.count(j)) continue;
        std::size_t p = last.at(j);
        for (std::size_t k = 0; k < elems[p].size(); ++k) {
            owner[offset[j] + k] = j;
            elem_of[offset[j] + k] = &elems[p][k];
        }
    }
    auto to_global = [&](int j, const SparseVector& local_coords) {
        SparseVector out;
        for (const auto& [k, c] : local_coords) out[offset.at(j) + k] = c;
        return out;
    };
    alg.table.assign(d * d, SparseVector{});
    for (std::size_t x = 0; x < d; ++x) {
        int j = owner[x];
        std::size_t p = last.at(j);
        for (std::size_t y = 0; y < d; ++y) {
            if (alg.basis[y].target != alg.basis[x].source) continue;
            std::size_t m = elem_of[x]->layer;
            SparseVector cur{{elem_of[x]->index, Rational(1)}};
            for (int letter : alg.basis[y].arrows) {
                if (static_cast<int>(m + 1) >= *vanish[p]) {
                    cur.clear();
                    break;
                }
                cur = lam.right_mul(m, cur, letter);
                ++m;
                Vector v(lam.layer(m).size());
                for (const auto& [k, c] : cur) v[k] = c;
                v = pieces[p][m].space.reduce(std::move(v));
                cur.clear();
                for (std::size_t k = 0; k < v.size(); ++k)
                    if (!is_zero(v[k])) cur[k] = v[k];
                if (cur.empty()) break;
            }
            if (cur.empty()) continue;
            SparseVector coords;
            for (const auto& [k, c] : cur) coords[where[p].at({m, k})] = c;
            alg.table[x * d + y] = to_global(j, coords);
        }
    }
    for (int j : q.vertices()) {
        alg.vertex_images[j] = {};
        if (last.count(j)) alg.vertex_images[j] = to_global(j, reduce_in(last.at(j), 0, SparseVector{{target_of_zero(lam, j), Rational(1)}}));
    }
    for (const Arrow& a : q.arrows()) {
        alg.arrow_images[a.id] = {};
        if (!last.count(a.tgt)) continue;
        std::size_t p = last.at(a.tgt);
        SparseVector img = lam.right_mul(0, SparseVector{{target_of_zero(lam, a.tgt), Rational(1)}}, a.id);
        alg.arrow_images[a.id] = to_global(a.tgt, reduce_in(p, 1, img));
    }
    return lw;
}

FDAlgebra lambda_w_algebra(const Quiver& oriented, const Word& word, int max_len) {
    return lambda_w(oriented, word, max_len).algebra;
}

std::vector<FDModule> tw_summands(const Quiver& oriented, const Word& word, int max_len) {
    return lambda_w(oriented, word, max_len).summands;
}

FDModule regular_module(const LambdaW& lw) {
    std::vector<FDModule> parts;
    for (int j : lw.dq.quiver.vertices())
        if (!lw.algebra.vertex_images.at(j).empty()) parts.push_back(projective_module(lw.algebra, j));
    if (parts.empty()) return zero_module(lw.dq.quiver);
    return direct_sum(parts).module;
}

}  // namespace quivalg

#include "quivalg/path_algebra.hpp"

#include "quivalg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace quivalg {

Path Path::of_arrow(const Quiver& q, int arrow_id) {
    const Arrow& a = q.arrow(arrow_id);
    return Path{a.src, a.tgt, {arrow_id}};
}

Path Path::from_word(const Quiver& q, const std::vector<int>& word) {
    if (word.empty()) throw InvalidRelation("empty arrow word (use a stationary path)");
    for (std::size_t j = 0; j < word.size(); ++j) {
        const Arrow& a = q.arrow(word[j]);
        if (j + 1 < word.size() && a.src != q.arrow(word[j + 1]).tgt)
            throw InvalidRelation("arrows " + q.label(word[j]) + " and " + q.label(word[j + 1]) +
                                  " are not composable");
    }
    return Path{q.arrow(word.back()).src, q.arrow(word.front()).tgt, word};
}

bool Path::operator<(const Path& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (arrows != o.arrows) return arrows < o.arrows;
    if (source != o.source) return source < o.source;
    return target < o.target;
}

std::optional<Path> compose(const Path& p, const Path& q) {
    if (p.source != q.target) return std::nullopt;
    Path r{q.source, p.target, p.arrows};
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

std::string to_string(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e" + std::to_string(p.source);
    // Single-letter labels are juxtaposed; anything longer is separated by dots.
    bool dotted = false;
    for (int a : p.arrows) dotted = dotted || q.label(a).size() != 1;
    std::string out;
    for (std::size_t j = 0; j < p.arrows.size(); ++j) {
        if (j > 0 && dotted) out += ".";
        out += q.label(p.arrows[j]);
    }
    return out;
}

PathElement::PathElement(Path p, Rational c) { add(p, c); }

void PathElement::add(const Path& p, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms.try_emplace(p, 0);
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
}

std::size_t PathElement::max_length() const {
    std::size_t m = 0;
    for (const auto& [p, c] : terms) m = std::max(m, p.length());
    return m;
}

PathElement PathElement::component(int target, int source) const {
    PathElement r;
    for (const auto& [p, c] : terms)
        if (p.target == target && p.source == source) r.terms.emplace(p, c);
    return r;
}

std::vector<std::pair<int, int>> PathElement::endpoint_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [p, c] : terms) out.emplace_back(p.target, p.source);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PathElement PathElement::operator+(const PathElement& o) const {
    PathElement r = *this;
    for (const auto& [p, c] : o.terms) r.add(p, c);
    return r;
}

PathElement PathElement::operator-(const PathElement& o) const { return *this + o.scaled(-1); }

PathElement PathElement::operator*(const PathElement& o) const {
    PathElement r;
    for (const auto& [p, c] : terms)
        for (const auto& [q, d] : o.terms)
            if (auto pq = compose(p, q)) r.add(*pq, c * d);
    return r;
}

PathElement PathElement::scaled(const Rational& c) const {
    PathElement r;
    if (sgn(c) == 0) return r;
    for (const auto& [p, d] : terms) r.terms.emplace(p, c * d);
    return r;
}

std::string to_string(const Quiver& q, const PathElement& x) {
    if (x.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : x.terms) {
        Rational a = c;
        if (!first) {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        } else if (sgn(a) < 0 && a == -1) {
            os << "-";
            a = 1;
        }
        if (a != 1) os << a.get_str() << "*";
        os << to_string(q, p);
        first = false;
    }
    return os.str();
}

SparseVector FDAlgebra::multiply(const SparseVector& x, const SparseVector& y) const {
    SparseVector r;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) axpy(r, a * b, product(i, j));
    return r;
}

SparseVector FDAlgebra::image(const Path& p) const {
    auto it = vertex_images.find(p.target);
    if (it == vertex_images.end()) throw UnknownVertex("vertex " + std::to_string(p.target));
    SparseVector v = it->second;
    for (int a : p.arrows) {
        auto jt = arrow_images.find(a);
        if (jt == arrow_images.end()) throw UnknownArrow("arrow " + std::to_string(a));
        v = multiply(v, jt->second);
    }
    return v;
}

SparseVector FDAlgebra::image(const PathElement& x) const {
    SparseVector r;
    for (const auto& [p, c] : x.terms) axpy(r, c, image(p));
    return r;
}

std::vector<std::size_t> FDAlgebra::block(int target, int source) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].target == target && basis[i].source == source) out.push_back(i);
    return out;
}

std::vector<Path> paths_of_length(const Quiver& q, std::size_t n) {
    std::vector<Path> layer;
    for (int v : q.vertices()) layer.push_back(Path::stationary(v));
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Path> next;
        for (const auto& p : layer)
            for (const auto& a : q.arrows())
                if (a.tgt == p.source) {
                    Path r{a.src, p.target, p.arrows};
                    r.arrows.push_back(a.id);
                    next.push_back(std::move(r));
                }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

namespace {

using Terms = std::map<Path, Rational>;

void add_scaled(Terms& v, const Rational& c, const Terms& row) {
    for (const auto& [p, a] : row) {
        auto [it, fresh] = v.try_emplace(p, 0);
        it->second += c * a;
        if (sgn(it->second) == 0) v.erase(it);
    }
}

// Echelon form keyed by leading (deglex-largest) path.
class PathEchelon {
public:
    void insert(Terms v) {
        while (!v.empty()) {
            auto top = std::prev(v.end());
            auto it = rows_.find(top->first);
            if (it == rows_.end()) break;
            add_scaled(v, -top->second, it->second);
        }
        if (v.empty()) return;
        const Rational inv = 1 / std::prev(v.end())->second;
        for (auto& [p, c] : v) c *= inv;
        Path lead = std::prev(v.end())->first;
        rows_.emplace(std::move(lead), std::move(v));
    }

    bool is_leading(const Path& p) const { return rows_.count(p) != 0; }

    Terms normal_form(Terms v) const {
        Terms out;
        while (!v.empty()) {
            auto top = std::prev(v.end());
            auto it = rows_.find(top->first);
            if (it == rows_.end()) {
                out.emplace(top->first, top->second);
                v.erase(top);
            } else {
                add_scaled(v, -top->second, it->second);
            }
        }
        return out;
    }

private:
    std::map<Path, Terms> rows_;
};

Path concat(const Path& u, const Path& p, const Path& v) {
    Path r{v.source, u.target, u.arrows};
    r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
    r.arrows.insert(r.arrows.end(), v.arrows.begin(), v.arrows.end());
    return r;
}

struct Component {
    PathElement element;
    std::size_t max_len;
    int target, source;
};

std::vector<Component> split_relations(const AlgebraPresentation& pres) {
    std::vector<Component> comps;
    for (const auto& rel : pres.relations) {
        for (const auto& [p, c] : rel.terms) {
            if (p.length() < 2)
                throw InvalidRelation("relation term " + to_string(pres.quiver, p) + " has length < 2");
            // Re-validate against this quiver.
            Path check = Path::from_word(pres.quiver, p.arrows);
            if (check.source != p.source || check.target != p.target)
                throw InvalidRelation("inconsistent endpoints on " + to_string(pres.quiver, p));
        }
        for (auto [t, s] : rel.endpoint_pairs()) {
            PathElement part = rel.component(t, s);
            comps.push_back({part, part.max_length(), t, s});
        }
    }
    return comps;
}

// Candidate algebra on the standard monomials of length < L; returns nullopt if
// the certificate (associativity, relations vanish, basis paths map to themselves) fails.
std::optional<FDAlgebra> try_certify(const AlgebraPresentation& pres, const std::vector<Component>& comps,
                                     const PathEchelon& ech, const std::vector<std::vector<Path>>& layers,
                                     std::size_t L) {
    FDAlgebra alg;
    alg.quiver = pres.quiver;
    std::map<Path, std::size_t> index;
    for (std::size_t n = 0; n < L; ++n)
        for (const auto& p : layers[n])
            if (!ech.is_leading(p)) {
                index.emplace(p, alg.basis.size());
                alg.basis.push_back(p);
                alg.lengths.push_back(static_cast<int>(n));
            }
    const std::size_t dim = alg.basis.size();

    auto to_sparse = [&](const Terms& t) -> std::optional<SparseVector> {
        SparseVector v;
        for (const auto& [p, c] : t) {
            auto it = index.find(p);
            if (it == index.end()) return std::nullopt;
            v.emplace(it->second, c);
        }
        return v;
    };

    alg.table.assign(dim * dim, SparseVector{});
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y) {
            const Path& px = alg.basis[x];
            const Path& py = alg.basis[y];
            if (px.source != py.target) continue;
            Terms cur{{px, 1}};
            for (int a : py.arrows) {
                Terms next;
                for (const auto& [p, c] : cur) {
                    Path r{pres.quiver.arrow(a).src, p.target, p.arrows};
                    r.arrows.push_back(a);
                    next.emplace(std::move(r), c);
                }
                cur = ech.normal_form(std::move(next));
            }
            auto sv = to_sparse(cur);
            if (!sv) return std::nullopt;
            alg.table[x * dim + y] = std::move(*sv);
        }

    for (int v : pres.quiver.vertices()) alg.vertex_images[v] = SparseVector{{index.at(Path::stationary(v)), 1}};
    for (const auto& a : pres.quiver.arrows()) {
        auto it = index.find(Path::of_arrow(pres.quiver, a.id));
        if (it == index.end()) return std::nullopt;
        alg.arrow_images[a.id] = SparseVector{{it->second, 1}};
    }

    // Associativity on composable triples.
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y) {
            if (alg.basis[x].source != alg.basis[y].target) continue;
            const SparseVector& xy = alg.product(x, y);
            for (std::size_t z = 0; z < dim; ++z) {
                if (alg.basis[y].source != alg.basis[z].target) continue;
                SparseVector lhs, rhs;
                for (const auto& [k, c] : xy) axpy(lhs, c, alg.product(k, z));
                for (const auto& [k, c] : alg.product(y, z)) axpy(rhs, c, alg.product(x, k));
                if (lhs != rhs) return std::nullopt;
            }
        }
    for (const auto& comp : comps)
        if (!alg.image(comp.element).empty()) return std::nullopt;
    for (std::size_t x = 0; x < dim; ++x)
        if (alg.image(alg.basis[x]) != SparseVector{{x, 1}}) return std::nullopt;

    alg.stabilized_length = static_cast<int>(L);
    return alg;
}

}  // namespace

FDAlgebra quotient_basis(const AlgebraPresentation& pres, int max_len) {
    const Quiver& q = pres.quiver;
    const std::vector<Component> comps = split_relations(pres);
    if (pres.degrees)
        for (const auto& a : q.arrows())
            if (!pres.degrees->count(a.id)) throw MissingDegreeMap("no degree for arrow " + q.label(a.id));

    // layers[n]: all paths of length n; by_src/by_tgt index them for generator assembly.
    std::vector<std::vector<Path>> layers{paths_of_length(q, 0)};
    std::vector<std::map<int, std::vector<std::size_t>>> by_src(1), by_tgt(1);
    auto index_layer = [&](std::size_t n) {
        for (std::size_t i = 0; i < layers[n].size(); ++i) {
            by_src[n][layers[n][i].source].push_back(i);
            by_tgt[n][layers[n][i].target].push_back(i);
        }
    };
    index_layer(0);

    PathEchelon ech;
    for (std::size_t N = 1; N <= static_cast<std::size_t>(std::max(max_len, 0)); ++N) {
        std::vector<Path> next;
        for (const auto& p : layers[N - 1])
            for (const auto& a : q.arrows())
                if (a.tgt == p.source) {
                    Path r{a.src, p.target, p.arrows};
                    r.arrows.push_back(a.id);
                    next.push_back(std::move(r));
                }
        std::sort(next.begin(), next.end());
        layers.push_back(std::move(next));
        by_src.emplace_back();
        by_tgt.emplace_back();
        index_layer(N);

        // Generators u·r·v whose longest term has length exactly N.
        for (const auto& comp : comps) {
            if (comp.max_len > N) continue;
            const std::size_t rest = N - comp.max_len;
            for (std::size_t k = 0; k <= rest; ++k) {
                auto us = by_src[k].find(comp.target);
                auto vs = by_tgt[rest - k].find(comp.source);
                if (us == by_src[k].end() || vs == by_tgt[rest - k].end()) continue;
                for (std::size_t ui : us->second)
                    for (std::size_t vi : vs->second) {
                        const Path& u = layers[k][ui];
                        const Path& v = layers[rest - k][vi];
                        Terms g;
                        for (const auto& [p, c] : comp.element.terms) g.emplace(concat(u, p, v), c);
                        ech.insert(std::move(g));
                    }
            }
        }

        for (std::size_t L = 1; L <= N; ++L) {
            const bool layer_reduces = std::all_of(layers[L].begin(), layers[L].end(),
                                                   [&](const Path& p) { return ech.is_leading(p); });
            if (!layer_reduces) continue;
            auto alg = try_certify(pres, comps, ech, layers, L);
            if (!alg) break;
            if (pres.degrees) {
                std::vector<int> degs;
                for (const auto& p : alg->basis) {
                    int d = 0;
                    for (int a : p.arrows) d += pres.degrees->at(a);
                    degs.push_back(d);
                }
                alg->degrees = std::move(degs);
            }
            return std::move(*alg);
        }
    }
    throw NotStabilized("no length layer reduced within max_len = " + std::to_string(max_len));
}

std::size_t algebra_dimension(const AlgebraPresentation& pres, int max_len) {
    return quotient_basis(pres, max_len).dim();
}

}  // namespace quivalg

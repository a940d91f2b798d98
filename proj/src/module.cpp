#include "quivalg/module.hpp"

#include "quivalg/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace quivalg {

std::size_t FDModule::dim(int v) const {
    auto it = dims.find(v);
    return it == dims.end() ? 0 : it->second;
}

std::size_t FDModule::total_dim() const {
    std::size_t n = 0;
    for (const auto& [v, d] : dims) n += d;
    return n;
}

std::vector<int> FDModule::dimension_vector() const {
    std::vector<int> out;
    for (int v : quiver.vertices()) out.push_back(static_cast<int>(dim(v)));
    return out;
}

FDModule zero_module(const Quiver& q) {
    FDModule m;
    m.quiver = q;
    for (int v : q.vertices()) m.dims[v] = 0;
    for (const Arrow& a : q.arrows()) m.mats[a.id] = Matrix(0, 0);
    m.grading = std::map<int, std::vector<int>>{};
    for (int v : q.vertices()) (*m.grading)[v] = {};
    return m;
}

FDModule simple_module(const Quiver& q, int vertex) {
    if (!q.has_vertex(vertex)) throw UnknownVertex(std::to_string(vertex));
    FDModule m = zero_module(q);
    m.dims[vertex] = 1;
    (*m.grading)[vertex] = {0};
    for (const Arrow& a : q.arrows()) m.mats[a.id] = Matrix(m.dim(a.src), m.dim(a.tgt));
    return m;
}

Matrix path_action(const FDModule& m, const Path& p) {
    Matrix acc = Matrix::identity(m.dim(p.target));
    for (int a : p.arrows) acc = m.mats.at(a) * acc;
    return acc;
}

static Matrix element_action(const FDModule& m, const PathElement& x, int target, int source) {
    Matrix acc(m.dim(source), m.dim(target));
    for (const auto& [p, c] : x.terms)
        if (p.target == target && p.source == source) acc = acc + path_action(m, p).scaled(c);
    return acc;
}

void validate_module(const FDModule& m, const AlgebraPresentation* pres) {
    for (const Arrow& a : m.quiver.arrows()) {
        auto it = m.mats.find(a.id);
        if (it == m.mats.end()) throw InvalidModule("no matrix for arrow " + m.quiver.label(a.id));
        if (it->second.rows() != m.dim(a.src) || it->second.cols() != m.dim(a.tgt))
            throw InvalidModule("matrix of arrow " + m.quiver.label(a.id) + " has the wrong shape");
    }
    for (const auto& [id, mat] : m.mats)
        if (!m.quiver.has_arrow(id)) throw InvalidModule("matrix for unknown arrow " + std::to_string(id));
    if (m.grading) {
        for (int v : m.quiver.vertices()) {
            auto it = m.grading->find(v);
            std::size_t n = it == m.grading->end() ? 0 : it->second.size();
            if (n != m.dim(v)) throw InvalidModule("grading at vertex " + std::to_string(v) + " has the wrong length");
        }
    }
    if (!pres) return;
    for (std::size_t k = 0; k < pres->relations.size(); ++k) {
        for (auto [t, s] : pres->relations[k].endpoint_pairs())
            if (!element_action(m, pres->relations[k], t, s).is_zero())
                throw InvalidModule("relation " + std::to_string(k) + " does not act as zero");
    }
    if (m.grading && pres->degrees) {
        for (const Arrow& a : m.quiver.arrows()) {
            int d = pres->degrees->count(a.id) ? pres->degrees->at(a.id) : 0;
            const Matrix& mat = m.mats.at(a.id);
            for (std::size_t r = 0; r < mat.rows(); ++r)
                for (std::size_t c = 0; c < mat.cols(); ++c)
                    if (!is_zero(mat(r, c)) && m.grading->at(a.src)[r] != m.grading->at(a.tgt)[c] + d)
                        throw InvalidModule("arrow " + m.quiver.label(a.id) + " is not homogeneous");
        }
    }
}

bool ModuleMap::is_zero() const {
    return std::all_of(comps.begin(), comps.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

ModuleMap zero_map(const FDModule& from, const FDModule& to) {
    ModuleMap f;
    for (int v : from.quiver.vertices()) f.comps[v] = Matrix(to.dim(v), from.dim(v));
    return f;
}

ModuleMap identity_map(const FDModule& m) {
    ModuleMap f;
    for (int v : m.quiver.vertices()) f.comps[v] = Matrix::identity(m.dim(v));
    return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    ModuleMap h;
    for (const auto& [v, fv] : f.comps) h.comps[v] = g.comps.at(v) * fv;
    return h;
}

ModuleMap add(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap h;
    for (const auto& [v, fv] : f.comps) h.comps[v] = fv + g.comps.at(v);
    return h;
}

ModuleMap scale(const ModuleMap& f, const Rational& c) {
    ModuleMap h;
    for (const auto& [v, fv] : f.comps) h.comps[v] = fv.scaled(c);
    return h;
}

bool is_homomorphism(const FDModule& from, const FDModule& to, const ModuleMap& f) {
    for (int v : from.quiver.vertices()) {
        auto it = f.comps.find(v);
        if (it == f.comps.end() || it->second.rows() != to.dim(v) || it->second.cols() != from.dim(v)) return false;
    }
    for (const Arrow& a : from.quiver.arrows())
        if (!(f.comps.at(a.src) * from.mats.at(a.id) == to.mats.at(a.id) * f.comps.at(a.tgt))) return false;
    return true;
}

Vector flatten(const ModuleMap& f) {
    Vector out;
    for (const auto& [v, m] : f.comps) out.insert(out.end(), m.data().begin(), m.data().end());
    return out;
}

namespace {

// Solves f_{s(a)} M_a = N_a f_{t(a)} over the entries allowed by `allowed`.
template <class Allowed>
std::vector<ModuleMap> solve_hom(const FDModule& from, const FDModule& to, Allowed allowed) {
    const Quiver& q = from.quiver;
    std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> var;
    for (int v : q.vertices())
        for (std::size_t r = 0; r < to.dim(v); ++r)
            for (std::size_t c = 0; c < from.dim(v); ++c)
                if (allowed(v, r, c)) var.emplace(std::make_tuple(v, r, c), var.size());
    auto lookup = [&](int v, std::size_t r, std::size_t c) -> std::optional<std::size_t> {
        auto it = var.find({v, r, c});
        if (it == var.end()) return std::nullopt;
        return it->second;
    };

    std::vector<Vector> rows;
    for (const Arrow& a : q.arrows()) {
        const Matrix& ma = from.mats.at(a.id);
        const Matrix& na = to.mats.at(a.id);
        for (std::size_t r = 0; r < to.dim(a.src); ++r) {
            for (std::size_t c = 0; c < from.dim(a.tgt); ++c) {
                Vector row(var.size());
                bool any = false;
                for (std::size_t k = 0; k < from.dim(a.src); ++k) {
                    if (is_zero(ma(k, c))) continue;
                    if (auto x = lookup(a.src, r, k)) row[*x] += ma(k, c), any = true;
                }
                for (std::size_t k = 0; k < to.dim(a.tgt); ++k) {
                    if (is_zero(na(r, k))) continue;
                    if (auto x = lookup(a.tgt, k, c)) row[*x] -= na(r, k), any = true;
                }
                if (any && !is_zero(row)) rows.push_back(std::move(row));
            }
        }
    }
    std::vector<Vector> sol;
    if (rows.empty()) {
        for (std::size_t k = 0; k < var.size(); ++k) {
            Vector e(var.size());
            e[k] = 1;
            sol.push_back(std::move(e));
        }
    } else {
        sol = nullspace(Matrix::from_rows(rows, var.size()));
    }
    std::vector<ModuleMap> out;
    for (const Vector& x : sol) {
        ModuleMap f = zero_map(from, to);
        for (const auto& [key, idx] : var) {
            auto [v, r, c] = key;
            f.comps[v](r, c) = x[idx];
        }
        out.push_back(std::move(f));
    }
    return out;
}

void require_graded(const FDModule& m) {
    if (!m.grading) throw MissingDegreeMap("module is not graded");
}

}  // namespace

std::vector<ModuleMap> hom_space(const FDModule& from, const FDModule& to) {
    return solve_hom(from, to, [](int, std::size_t, std::size_t) { return true; });
}

std::vector<ModuleMap> hom_space_of_degree(const FDModule& from, const FDModule& to, int d) {
    require_graded(from);
    require_graded(to);
    const auto& gf = *from.grading;
    const auto& gt = *to.grading;
    return solve_hom(from, to, [&](int v, std::size_t r, std::size_t c) { return gt.at(v)[r] == gf.at(v)[c] + d; });
}

std::map<int, std::vector<ModuleMap>> graded_hom_space(const FDModule& from, const FDModule& to) {
    require_graded(from);
    require_graded(to);
    std::set<int> degrees;
    for (const auto& [v, gt] : *to.grading)
        for (int dt : gt)
            for (int df : from.grading->at(v)) degrees.insert(dt - df);
    std::map<int, std::vector<ModuleMap>> out;
    for (int d : degrees) {
        auto maps = hom_space_of_degree(from, to, d);
        if (!maps.empty()) out[d] = std::move(maps);
    }
    return out;
}

DirectSum direct_sum(const std::vector<FDModule>& parts) {
    if (parts.empty()) throw InvalidModule("empty direct sum");
    DirectSum ds;
    ds.parts = parts;
    const Quiver& q = parts.front().quiver;
    FDModule& m = ds.module;
    m.quiver = q;
    bool graded = std::all_of(parts.begin(), parts.end(), [](const FDModule& p) { return p.grading.has_value(); });
    if (graded) m.grading = std::map<int, std::vector<int>>{};
    for (int v : q.vertices()) {
        m.dims[v] = 0;
        if (graded) (*m.grading)[v] = {};
    }
    for (const FDModule& p : parts) {
        std::map<int, std::size_t> off;
        for (int v : q.vertices()) {
            off[v] = m.dims[v];
            m.dims[v] += p.dim(v);
            if (graded) {
                const auto& g = p.grading->at(v);
                (*m.grading)[v].insert((*m.grading)[v].end(), g.begin(), g.end());
            }
        }
        ds.offsets.push_back(std::move(off));
    }
    for (const Arrow& a : q.arrows()) {
        Matrix mat(m.dim(a.src), m.dim(a.tgt));
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const Matrix& pm = parts[k].mats.at(a.id);
            for (std::size_t r = 0; r < pm.rows(); ++r)
                for (std::size_t c = 0; c < pm.cols(); ++c)
                    mat(ds.offsets[k].at(a.src) + r, ds.offsets[k].at(a.tgt) + c) = pm(r, c);
        }
        m.mats[a.id] = std::move(mat);
    }
    for (std::size_t k = 0; k < parts.size(); ++k) {
        ModuleMap inc, proj;
        for (int v : q.vertices()) {
            Matrix i(m.dim(v), parts[k].dim(v)), p(parts[k].dim(v), m.dim(v));
            for (std::size_t r = 0; r < parts[k].dim(v); ++r) {
                i(ds.offsets[k].at(v) + r, r) = 1;
                p(r, ds.offsets[k].at(v) + r) = 1;
            }
            inc.comps[v] = std::move(i);
            proj.comps[v] = std::move(p);
        }
        ds.inclusions.push_back(std::move(inc));
        ds.projections.push_back(std::move(proj));
    }
    return ds;
}

ModuleMap block_map(const DirectSum& from, const DirectSum& to, const std::vector<std::vector<ModuleMap>>& blocks) {
    if (blocks.size() != to.parts.size()) throw InvalidModule("block map has the wrong number of rows");
    ModuleMap f = zero_map(from.module, to.module);
    for (std::size_t r = 0; r < blocks.size(); ++r) {
        if (blocks[r].size() != from.parts.size()) throw InvalidModule("block map has the wrong number of columns");
        for (std::size_t c = 0; c < blocks[r].size(); ++c) {
            ModuleMap piece = compose(to.inclusions[r], compose(blocks[r][c], from.projections[c]));
            f = add(f, piece);
        }
    }
    return f;
}

namespace {

bool homogeneous_rows(const std::vector<Vector>& rows, const std::vector<int>& degrees) {
    for (const Vector& row : rows) {
        std::optional<int> d;
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (is_zero(row[k])) continue;
            if (d && *d != degrees[k]) return false;
            d = degrees[k];
        }
    }
    return true;
}

int row_degree(const Vector& row, const std::vector<int>& degrees) {
    for (std::size_t k = 0; k < row.size(); ++k)
        if (!is_zero(row[k])) return degrees[k];
    return 0;
}

}  // namespace

Submodule submodule_generated(const FDModule& m, const std::map<int, std::vector<Vector>>& generators) {
    const Quiver& q = m.quiver;
    std::map<int, Subspace> span;
    for (int v : q.vertices()) span.emplace(v, Subspace(m.dim(v)));
    std::deque<std::pair<int, Vector>> queue;
    for (const auto& [v, gens] : generators)
        for (const Vector& g : gens) {
            if (g.size() != m.dim(v)) throw InvalidModule("generator has the wrong length");
            queue.emplace_back(v, g);
        }
    while (!queue.empty()) {
        auto [v, x] = std::move(queue.front());
        queue.pop_front();
        if (!span.at(v).insert(x)) continue;
        for (int a : q.arrows_to(v)) queue.emplace_back(q.arrow(a).src, m.mats.at(a).apply(x));
    }

    Submodule sub;
    FDModule& s = sub.module;
    s.quiver = q;
    bool graded = m.grading.has_value();
    for (int v : q.vertices())
        if (graded && !homogeneous_rows(span.at(v).rows(), m.grading->at(v))) graded = false;
    if (graded) s.grading = std::map<int, std::vector<int>>{};
    std::map<int, Coordinates> coords;
    for (int v : q.vertices()) {
        const auto& rows = span.at(v).rows();
        s.dims[v] = rows.size();
        Matrix inc(m.dim(v), rows.size());
        for (std::size_t k = 0; k < rows.size(); ++k)
            for (std::size_t r = 0; r < m.dim(v); ++r) inc(r, k) = rows[k][r];
        sub.inclusion.comps[v] = std::move(inc);
        coords.emplace(v, Coordinates(rows));
        if (graded) {
            auto& g = (*s.grading)[v];
            for (const Vector& row : rows) g.push_back(row_degree(row, m.grading->at(v)));
        }
    }
    for (const Arrow& a : q.arrows()) {
        Matrix mat(s.dim(a.src), s.dim(a.tgt));
        const auto& rows = span.at(a.tgt).rows();
        for (std::size_t c = 0; c < rows.size(); ++c) {
            auto y = coords.at(a.src).solve(m.mats.at(a.id).apply(rows[c]));
            if (!y) throw InvalidModule("submodule closure failed");
            for (std::size_t r = 0; r < y->size(); ++r) mat(r, c) = (*y)[r];
        }
        s.mats[a.id] = std::move(mat);
    }
    return sub;
}

Submodule kernel(const FDModule& from, const FDModule&, const ModuleMap& f) {
    std::map<int, std::vector<Vector>> gens;
    for (int v : from.quiver.vertices()) {
        const Matrix& fv = f.comps.at(v);
        if (from.dim(v) == 0) continue;
        if (fv.rows() == 0) {
            for (std::size_t k = 0; k < from.dim(v); ++k) {
                Vector e(from.dim(v));
                e[k] = 1;
                gens[v].push_back(std::move(e));
            }
        } else {
            gens[v] = nullspace(fv);
        }
    }
    return submodule_generated(from, gens);
}

Submodule image(const FDModule& from, const FDModule& to, const ModuleMap& f) {
    std::map<int, std::vector<Vector>> gens;
    for (int v : from.quiver.vertices())
        for (std::size_t c = 0; c < from.dim(v); ++c) gens[v].push_back(f.comps.at(v).col(c));
    return submodule_generated(to, gens);
}

Quotient quotient(const FDModule& m, const Submodule& sub) {
    const Quiver& q = m.quiver;
    Quotient out;
    FDModule& qm = out.module;
    qm.quiver = q;
    bool graded = m.grading.has_value() && sub.module.grading.has_value();
    if (graded) qm.grading = std::map<int, std::vector<int>>{};
    std::map<int, Subspace> span;
    for (int v : q.vertices()) {
        Subspace s(m.dim(v));
        const Matrix& inc = sub.inclusion.comps.at(v);
        for (std::size_t c = 0; c < inc.cols(); ++c) s.insert(inc.col(c));
        auto free = s.free_columns();
        qm.dims[v] = free.size();
        if (graded) {
            auto& g = (*qm.grading)[v];
            for (std::size_t c : free) g.push_back(m.grading->at(v)[c]);
        }
        Matrix proj(free.size(), m.dim(v));
        for (std::size_t j = 0; j < m.dim(v); ++j) {
            Vector e(m.dim(v));
            e[j] = 1;
            Vector red = s.reduce(e);
            for (std::size_t k = 0; k < free.size(); ++k) proj(k, j) = red[free[k]];
        }
        out.projection.comps[v] = std::move(proj);
        out.representatives[v] = std::move(free);
        span.emplace(v, std::move(s));
    }
    for (const Arrow& a : q.arrows()) {
        const auto& reps = out.representatives.at(a.tgt);
        Matrix mat(qm.dim(a.src), qm.dim(a.tgt));
        for (std::size_t c = 0; c < reps.size(); ++c) {
            Vector img = out.projection.comps.at(a.src).apply(m.mats.at(a.id).col(reps[c]));
            for (std::size_t r = 0; r < img.size(); ++r) mat(r, c) = img[r];
        }
        qm.mats[a.id] = std::move(mat);
    }
    return out;
}

ModuleMap factor_through_inclusion(const ModuleMap& f, const Submodule& sub) {
    ModuleMap g;
    for (const auto& [v, fv] : f.comps) {
        const Matrix& inc = sub.inclusion.comps.at(v);
        std::vector<Vector> basis;
        for (std::size_t c = 0; c < inc.cols(); ++c) basis.push_back(inc.col(c));
        Coordinates coords(basis);
        Matrix gv(inc.cols(), fv.cols());
        for (std::size_t c = 0; c < fv.cols(); ++c) {
            auto y = coords.solve(fv.col(c));
            if (!y) throw InvalidModule("map does not land in the submodule");
            for (std::size_t r = 0; r < y->size(); ++r) gv(r, c) = (*y)[r];
        }
        g.comps[v] = std::move(gv);
    }
    return g;
}

ModuleMap factor_through_projection(const ModuleMap& f, const Quotient& q) {
    ModuleMap g;
    for (const auto& [v, fv] : f.comps) {
        const auto& reps = q.representatives.at(v);
        Matrix gv(fv.rows(), reps.size());
        for (std::size_t c = 0; c < reps.size(); ++c)
            for (std::size_t r = 0; r < fv.rows(); ++r) gv(r, c) = fv(r, reps[c]);
        if (!(gv * q.projection.comps.at(v) == fv)) throw InvalidModule("map does not vanish on the kernel");
        g.comps[v] = std::move(gv);
    }
    return g;
}

FDModule projective_module(const FDAlgebra& a, int vertex) {
    const Quiver& q = a.quiver;
    if (!q.has_vertex(vertex)) throw UnknownVertex(std::to_string(vertex));
    FDModule m;
    m.quiver = q;
    std::map<int, std::vector<std::size_t>> blocks;
    std::map<std::size_t, std::size_t> position;
    if (a.degrees) m.grading = std::map<int, std::vector<int>>{};
    for (int v : q.vertices()) {
        blocks[v] = a.block(vertex, v);
        m.dims[v] = blocks[v].size();
        if (a.degrees) (*m.grading)[v] = {};
        for (std::size_t k = 0; k < blocks[v].size(); ++k) {
            position[blocks[v][k]] = k;
            if (a.degrees) (*m.grading)[v].push_back((*a.degrees)[blocks[v][k]]);
        }
    }
    for (const Arrow& arr : q.arrows()) {
        Matrix mat(m.dim(arr.src), m.dim(arr.tgt));
        const SparseVector& img = a.arrow_images.at(arr.id);
        const auto& cols = blocks[arr.tgt];
        for (std::size_t c = 0; c < cols.size(); ++c) {
            SparseVector x{{cols[c], Rational(1)}};
            for (const auto& [idx, coef] : a.multiply(x, img)) mat(position.at(idx), c) = coef;
        }
        m.mats[arr.id] = std::move(mat);
    }
    return m;
}

ModuleMap left_multiplication(const FDAlgebra& a, const SparseVector& x, int from, int to) {
    ModuleMap f;
    for (int v : a.quiver.vertices()) {
        auto cols = a.block(from, v);
        auto rows = a.block(to, v);
        std::map<std::size_t, std::size_t> position;
        for (std::size_t k = 0; k < rows.size(); ++k) position[rows[k]] = k;
        Matrix m(rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            SparseVector y{{cols[c], Rational(1)}};
            for (const auto& [idx, coef] : a.multiply(x, y)) {
                auto it = position.find(idx);
                if (it == position.end()) throw InvalidModule("left multiplier is not in e_to A e_from");
                m(it->second, c) = coef;
            }
        }
        f.comps[v] = std::move(m);
    }
    return f;
}

bool is_cogenerated_by(const FDModule& m, const FDModule& n) {
    auto maps = hom_space(m, n);
    for (int v : m.quiver.vertices()) {
        if (m.dim(v) == 0) continue;
        std::vector<Vector> rows;
        for (const ModuleMap& f : maps) {
            const Matrix& fv = f.comps.at(v);
            for (std::size_t r = 0; r < fv.rows(); ++r) rows.push_back(fv.row(r));
        }
        if (rows.empty() || rank(Matrix::from_rows(rows, m.dim(v))) != m.dim(v)) return false;
    }
    return true;
}

ComplexReport check_complex_exact(const std::vector<FDModule>& modules, const std::vector<ModuleMap>& maps) {
    if (maps.size() + 1 != modules.size()) throw InvalidModule("complex needs one more module than maps");
    for (std::size_t k = 0; k < maps.size(); ++k)
        if (!is_homomorphism(modules[k], modules[k + 1], maps[k]))
            throw InvalidModule("map " + std::to_string(k) + " is not a module homomorphism");
    for (std::size_t k = 0; k + 1 < maps.size(); ++k)
        if (!compose(maps[k + 1], maps[k]).is_zero()) throw NotAComplex("maps " + std::to_string(k) + " and " + std::to_string(k + 1) + " compose to a nonzero map");
    ComplexReport rep;
    for (std::size_t k = 1; k + 1 < modules.size(); ++k) {
        std::size_t ker = 0, im = 0;
        for (int v : modules[k].quiver.vertices()) {
            ker += modules[k].dim(v) - (modules[k + 1].dim(v) == 0 ? 0 : rank(maps[k].comps.at(v)));
            if (modules[k - 1].dim(v) != 0 && modules[k].dim(v) != 0) im += rank(maps[k - 1].comps.at(v));
        }
        rep.homology.push_back(ker - im);
        if (ker != im) rep.exact = false;
    }
    return rep;
}

}  // namespace quivalg

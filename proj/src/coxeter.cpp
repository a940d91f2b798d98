#include "quivalg/coxeter.hpp"

#include "quivalg/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace quivalg {

std::size_t CoxeterSystem::index_of(int vertex) const {
    auto it = std::lower_bound(generators.begin(), generators.end(), vertex);
    if (it == generators.end() || *it != vertex) throw UnknownVertex("generator " + std::to_string(vertex));
    return static_cast<std::size_t>(it - generators.begin());
}

int CoxeterSystem::order(int i, int j) const { return static_cast<int>(m(index_of(i), index_of(j)).get_num().get_si()); }

CoxeterSystem coxeter_system(const Quiver& graph) {
    CoxeterSystem sys;
    sys.generators = graph.vertices();
    const std::size_t n = sys.generators.size();
    Matrix edges(n, n);
    for (const auto& a : graph.arrows()) {
        if (a.src == a.tgt) continue;
        const std::size_t i = sys.index_of(a.src), j = sys.index_of(a.tgt);
        edges(i, j) += 1;
        edges(j, i) += 1;
    }
    sys.m = Matrix(n, n);
    sys.form = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                sys.m(i, j) = 1;
                sys.form(i, j) = 1;
            } else if (edges(i, j) == 0) {
                sys.m(i, j) = 2;
            } else if (edges(i, j) == 1) {
                sys.m(i, j) = 3;
                sys.form(i, j) = Rational(-1, 2);
            } else {
                sys.m(i, j) = kInfinity;
                sys.form(i, j) = -1;
            }
        }
    return sys;
}

Matrix reflection(const CoxeterSystem& sys, int generator) {
    const std::size_t i = sys.index_of(generator);
    const std::size_t n = sys.generators.size();
    Matrix s = Matrix::identity(n);
    // s_i(e_j) = e_j - 2 B_ij e_i: only row i changes.
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= 2 * sys.form(i, j);
    return s;
}

Matrix element_matrix(const CoxeterSystem& sys, const Word& word) {
    Matrix m = Matrix::identity(sys.generators.size());
    for (int u : word) m = m * reflection(sys, u);
    return m;
}

namespace {

int sign_of(const Vector& v, bool& mixed) {
    bool pos = false, neg = false;
    for (const auto& x : v) {
        if (sgn(x) > 0) pos = true;
        if (sgn(x) < 0) neg = true;
    }
    mixed = pos && neg;
    return neg ? -1 : (pos ? 1 : 0);
}

}  // namespace

ReducedDetail reduced_detail(const CoxeterSystem& sys, const Word& word) {
    ReducedDetail d;
    const std::size_t n = sys.generators.size();
    Matrix prefix = Matrix::identity(n);
    for (std::size_t p = 0; p < word.size(); ++p) {
        Vector alpha(n);
        alpha[sys.index_of(word[p])] = 1;
        Vector root = prefix.apply(alpha);
        bool mixed = false;
        const int s = sign_of(root, mixed);
        if (mixed) d.dichotomy = false;
        if (s < 0 && !d.first_failure) {
            d.reduced = false;
            d.first_failure = p;
        }
        d.roots.push_back(std::move(root));
        prefix = prefix * reflection(sys, word[p]);
    }
    return d;
}

bool is_reduced(const CoxeterSystem& sys, const Word& word) { return reduced_detail(sys, word).reduced; }

Word reduce_word(const CoxeterSystem& sys, const Word& word) {
    Word w = word;
    for (int u : w) sys.index_of(u);
    const std::size_t n = sys.generators.size();
    while (true) {
        const ReducedDetail d = reduced_detail(sys, w);
        if (d.reduced) return w;
        const std::size_t p = *d.first_failure;
        // beta_k = s_{u_k} ... s_{u_{p-1}}(alpha_{u_p}); the largest k with beta_k < 0 is the exchanged letter.
        Vector beta(n);
        beta[sys.index_of(w[p])] = 1;
        std::size_t j = p;
        for (std::size_t k = p; k-- > 0;) {
            beta = reflection(sys, w[k]).apply(beta);
            bool mixed = false;
            if (sign_of(beta, mixed) < 0) {
                j = k;
                break;
            }
        }
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(p));
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
    }
}

bool elements_equal(const CoxeterSystem& sys, const Word& w1, const Word& w2) {
    return element_matrix(sys, w1) == element_matrix(sys, w2);
}

std::vector<Word> enumerate_group(const CoxeterSystem& sys, std::size_t cap) {
    std::set<std::vector<Rational>> seen;
    std::vector<Word> out;
    std::deque<std::pair<Word, Matrix>> queue;
    const Matrix id = Matrix::identity(sys.generators.size());
    seen.insert(id.data());
    queue.emplace_back(Word{}, id);
    std::vector<Matrix> gens;
    for (int g : sys.generators) gens.push_back(reflection(sys, g));
    while (!queue.empty()) {
        auto [w, m] = std::move(queue.front());
        queue.pop_front();
        out.push_back(w);
        if (out.size() > cap) throw GroupTooLarge("more than " + std::to_string(cap) + " elements");
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Matrix next = m * gens[g];
            if (!seen.insert(next.data()).second) continue;
            Word nw = w;
            nw.push_back(sys.generators[g]);
            queue.emplace_back(std::move(nw), std::move(next));
        }
    }
    return out;
}

std::vector<Word> braid_neighbors(const CoxeterSystem& sys, const Word& word) {
    std::set<Word> out;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        const int a = word[i], b = word[i + 1];
        if (a == b) continue;
        const int m = sys.order(a, b);
        if (m == 2) {
            Word w = word;
            std::swap(w[i], w[i + 1]);
            out.insert(w);
        } else if (m == 3 && i + 2 < word.size() && word[i + 2] == a) {
            Word w = word;
            w[i] = b;
            w[i + 1] = a;
            w[i + 2] = b;
            out.insert(w);
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace quivalg

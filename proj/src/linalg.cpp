#include "quivalg/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace quivalg {

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
    if (sgn(a) == 0) return;
    for (const auto& [k, c] : x) {
        auto [it, fresh] = y.try_emplace(k, 0);
        it->second += a * c;
        if (sgn(it->second) == 0) y.erase(it);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::apply(const Vector& x) const {
    assert(x.size() == cols_);
    Vector y(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(x[c]) == 0) continue;
        for (std::size_t r = 0; r < rows_; ++r)
            if (sgn((*this)(r, c)) != 0) y[r] += (*this)(r, c) * x[c];
    }
    return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (sgn(o(k, j)) != 0) m(i, j) += a * o(k, j);
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
    Matrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-1); }

Matrix Matrix::scaled(const Rational& a) const {
    Matrix m = *this;
    for (auto& x : m.data_) x *= a;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool Matrix::is_zero() const { return quivalg::is_zero(data_); }

Vector Subspace::reduce(Vector v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational c = v[pivots_[k]];
        if (sgn(c) == 0) continue;
        const Vector& row = rows_[k];
        for (std::size_t j = pivots_[k]; j < ambient_; ++j)
            if (sgn(row[j]) != 0) v[j] -= c * row[j];
    }
    return v;
}

bool Subspace::insert(Vector v) {
    assert(v.size() == ambient_);
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < ambient_ && sgn(v[p]) == 0) ++p;
    if (p == ambient_) return false;
    const Rational inv = 1 / v[p];
    for (std::size_t j = p; j < ambient_; ++j) v[j] *= inv;
    for (auto& row : rows_) {
        const Rational c = row[p];
        if (sgn(c) == 0) continue;
        for (std::size_t j = p; j < ambient_; ++j)
            if (sgn(v[j]) != 0) row[j] -= c * v[j];
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

std::vector<std::size_t> Subspace::free_columns() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            ++k;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

std::size_t rank(const Matrix& a) {
    Subspace s(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) s.insert(a.row(r));
    return s.dim();
}

std::vector<Vector> nullspace(const Matrix& a) {
    Subspace s(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) s.insert(a.row(r));
    std::vector<Vector> basis;
    for (std::size_t f : s.free_columns()) {
        Vector x(a.cols());
        x[f] = 1;
        for (std::size_t k = 0; k < s.dim(); ++k) x[s.pivots()[k]] = -s.rows()[k][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

Coordinates::Coordinates(const std::vector<Vector>& basis) : count_(basis.size()) {
    ambient_ = basis.empty() ? 0 : basis.front().size();
    // Gaussian elimination on [basis | identity], tracking the transform.
    std::vector<Vector> rows = basis;
    std::vector<Vector> tr(count_, Vector(count_));
    for (std::size_t i = 0; i < count_; ++i) tr[i][i] = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ambient_ && r < count_; ++c) {
        std::size_t p = r;
        while (p < count_ && sgn(rows[p][c]) == 0) ++p;
        if (p == count_) continue;
        std::swap(rows[p], rows[r]);
        std::swap(tr[p], tr[r]);
        const Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (auto& x : tr[r]) x *= inv;
        for (std::size_t i = 0; i < count_; ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = 0; j < ambient_; ++j)
                if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
            for (std::size_t j = 0; j < count_; ++j)
                if (sgn(tr[r][j]) != 0) tr[i][j] -= f * tr[r][j];
        }
        pivots_.push_back(c);
        ++r;
    }
    if (r != count_) throw std::invalid_argument("Coordinates: family is linearly dependent");
    reduced_ = std::move(rows);
    transform_ = std::move(tr);
}

std::optional<Vector> Coordinates::solve(const Vector& v) const {
    // v = sum_k d_k reduced_[k] with d_k = v[pivot_k]; then map d back through the transform.
    Vector residual = v;
    Vector coeffs(count_);
    for (std::size_t k = 0; k < count_; ++k) {
        const Rational d = v[pivots_[k]];
        if (sgn(d) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (sgn(reduced_[k][j]) != 0) residual[j] -= d * reduced_[k][j];
        for (std::size_t j = 0; j < count_; ++j)
            if (sgn(transform_[k][j]) != 0) coeffs[j] += d * transform_[k][j];
    }
    if (!is_zero(residual)) return std::nullopt;
    return coeffs;
}

}  // namespace quivalg

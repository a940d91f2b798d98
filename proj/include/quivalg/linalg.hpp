#pragma once

#include "quivalg/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace quivalg {

using Vector = std::vector<Rational>;
using SparseVector = std::map<std::size_t, Rational>;

bool is_zero(const Vector& v);
void axpy(SparseVector& y, const Rational& a, const SparseVector& x);  // y += a*x, zeros pruned

// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector col(std::size_t c) const;
    Vector apply(const Vector& x) const;

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const Rational& a) const;
    Matrix transpose() const;
    bool is_zero() const;
    const std::vector<Rational>& data() const { return data_; }
    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Row space maintained in reduced row echelon form; insertion is incremental.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

    bool insert(Vector v);  // true iff the dimension grew
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const { return quivalg::is_zero(reduce(v)); }

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    const std::vector<Vector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<std::size_t> free_columns() const;

private:
    std::size_t ambient_;
    std::vector<Vector> rows_;  // sorted by pivot
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& a);
std::vector<Vector> nullspace(const Matrix& a);  // basis of {x : a x = 0}

// Expresses vectors in a fixed linearly independent family.
class Coordinates {
public:
    Coordinates() = default;
    explicit Coordinates(const std::vector<Vector>& basis);

    std::size_t size() const { return count_; }
    std::optional<Vector> solve(const Vector& v) const;  // nullopt if v is outside the span

private:
    std::size_t count_ = 0;
    std::size_t ambient_ = 0;
    std::vector<std::size_t> pivots_;
    std::vector<Vector> reduced_;  // echelon rows of the basis
    std::vector<Vector> transform_;  // reduced_[k] = sum_j transform_[k][j] * basis[j]
};

}  // namespace quivalg
